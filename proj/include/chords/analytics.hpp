#pragma once

#include <vector>

#include "chords/diagram.hpp"
#include "chords/stats.hpp"

namespace chords {

struct Component {
    int chords = 0;                // nu
    long long crossings = 0;       // mu
    std::vector<int> members;      // 1-based chord labels, ascending
};

struct ComponentSummary {
    std::vector<Component> components;
    int largest_by_chords = -1;    // index into components
    int densest = -1;              // max mu/nu; ties: larger nu, then smaller min label
    int isolated = 0;              // components with a single chord
};

// Connected components of the intersection graph, with per-component chord
// and crossing counts.  O(n log n): a sweep merges the open chords above a
// closing chord as one group; crossing counts come from per-chord degrees.
ComponentSummary components(const ChordDiagram& d);

// Same decomposition from an explicit graph (union-find over the edge list).
ComponentSummary components(const IntersectionGraph& g);

// True iff exactly one component has >= 2 chords.
bool is_monolithic(const ComponentSummary& s);

struct GiantStats {
    double chord_fraction = 0.0;     // nu_max / n
    double crossing_fraction = 0.0;  // mu(largest-by-chords) / m
};
GiantStats giant_stats(const ComponentSummary& s, long long m);

}  // namespace chords
