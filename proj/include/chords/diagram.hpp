#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace chords {

// A chord diagram: a perfect matching of the points 1..2n.  Points are
// 1-based in all I/O and examples; the partner array is 0-based internally.
// Chords are labeled 1..n by increasing left endpoint.
class ChordDiagram {
public:
    // pairs use 1-based points and must cover {1,...,2n} exactly once
    static ChordDiagram from_pairs(const std::vector<std::pair<int, int>>& pairs);

    // partner array, 0-based, must be a fixed-point-free involution
    static ChordDiagram from_partner(std::vector<int> partner);

    int chords() const { return static_cast<int>(partner_.size()) / 2; }
    int points() const { return static_cast<int>(partner_.size()); }

    // 0-based
    int partner(int point) const { return partner_[static_cast<size_t>(point)]; }
    const std::vector<int>& partner_array() const { return partner_; }

    // chords as 1-based (left, right) pairs sorted by left endpoint
    std::vector<std::pair<int, int>> chord_list() const;

    bool operator==(const ChordDiagram& other) const { return partner_ == other.partner_; }

    // canonical string "a1-b1,a2-b2,..." (sorted by left endpoint, 1-based)
    std::string canonical_key() const;

private:
    explicit ChordDiagram(std::vector<int> partner) : partner_(std::move(partner)) {}
    std::vector<int> partner_;
};

struct IntersectionGraph {
    int vertices = 0;                            // one per chord, 1..n by left endpoint
    std::vector<std::pair<int, int>> edges;      // 1-based chord labels, u < v
};

struct CutStats {
    int cut_count = 0;              // X
    int max_cut = 0;                // Y = max over cuts of min(n1, n-n1), 0 if none
    std::vector<int> cut_positions; // the values n1 with a cut between 2n1 and 2n1+1
};

// Number of crossing chord pairs.  Uses the O(n^2) pair scan up to
// kCrossingSweepThreshold chords and an O(n log n) Fenwick sweep above it.
inline constexpr int kCrossingSweepThreshold = 256;

long long crossing_count(const ChordDiagram& d);
long long crossing_count_naive(const ChordDiagram& d);
long long crossing_count_sweep(const ChordDiagram& d);

// All crossing pairs by chord label (1-based), lexicographic.  O(n^2).
std::vector<std::pair<int, int>> crossing_pairs(const ChordDiagram& d);

IntersectionGraph intersection_graph(const ChordDiagram& d);

// Number of chords crossing each chord, O(n log n) for the whole diagram.
std::vector<long long> crossing_degrees(const ChordDiagram& d);

CutStats cut_stats(const ChordDiagram& d);

// JSON array of [a,b] pairs, 1-based, sorted by left endpoint
std::string to_json(const ChordDiagram& d);
ChordDiagram diagram_from_json(const std::string& text);

// CSV edge list with header "u,v"
void write_edge_csv(std::ostream& os, const IntersectionGraph& g);

}  // namespace chords
