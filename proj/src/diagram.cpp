#include "chords/diagram.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "chords/fenwick.hpp"
#include "json.hpp"

namespace chords {

ChordDiagram ChordDiagram::from_pairs(const std::vector<std::pair<int, int>>& pairs) {
    const int n2 = static_cast<int>(pairs.size()) * 2;
    std::vector<int> partner(static_cast<size_t>(n2), -1);
    std::vector<char> seen(static_cast<size_t>(n2), 0);
    for (const auto& [a, b] : pairs) {
        for (int p : {a, b}) {
            if (p < 1 || p > n2)
                throw std::invalid_argument("point " + std::to_string(p) + " outside 1..2n");
            if (seen[static_cast<size_t>(p - 1)])
                throw std::invalid_argument("point " + std::to_string(p) + " repeated");
            seen[static_cast<size_t>(p - 1)] = 1;
        }
        if (a == b) throw std::invalid_argument("chord joins point " + std::to_string(a) + " to itself");
        partner[static_cast<size_t>(a - 1)] = b - 1;
        partner[static_cast<size_t>(b - 1)] = a - 1;
    }
    return ChordDiagram(std::move(partner));
}

ChordDiagram ChordDiagram::from_partner(std::vector<int> partner) {
    const int n2 = static_cast<int>(partner.size());
    if (n2 % 2 != 0) throw std::invalid_argument("partner array has odd length");
    for (int i = 0; i < n2; ++i) {
        int j = partner[static_cast<size_t>(i)];
        if (j < 0 || j >= n2 || j == i || partner[static_cast<size_t>(j)] != i)
            throw std::invalid_argument("partner array is not a fixed-point-free involution at index " +
                                        std::to_string(i));
    }
    return ChordDiagram(std::move(partner));
}

std::vector<std::pair<int, int>> ChordDiagram::chord_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(chords()));
    for (int i = 0; i < points(); ++i) {
        int j = partner_[static_cast<size_t>(i)];
        if (i < j) out.emplace_back(i + 1, j + 1);
    }
    return out;  // already sorted by left endpoint
}

std::string ChordDiagram::canonical_key() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, b] : chord_list()) {
        if (!first) os << ',';
        first = false;
        os << a << '-' << b;
    }
    return os.str();
}

long long crossing_count_naive(const ChordDiagram& d) {
    auto cl = d.chord_list();
    long long count = 0;
    for (size_t i = 0; i < cl.size(); ++i)
        for (size_t j = i + 1; j < cl.size(); ++j)
            if (cl[i].second > cl[j].first && cl[i].second < cl[j].second) ++count;
    return count;
}

long long crossing_count_sweep(const ChordDiagram& d) {
    const int n2 = d.points();
    FenwickTree open(n2);
    long long count = 0;
    for (int p = 0; p < n2; ++p) {
        int q = d.partner(p);
        if (q > p) {
            open.add(p + 1, 1);
        } else {
            // chords still open with left endpoint after q cross (q,p)
            count += open.range(q + 2, p);
            open.add(q + 1, -1);
        }
    }
    return count;
}

long long crossing_count(const ChordDiagram& d) {
    return d.chords() <= kCrossingSweepThreshold ? crossing_count_naive(d) : crossing_count_sweep(d);
}

std::vector<std::pair<int, int>> crossing_pairs(const ChordDiagram& d) {
    auto cl = d.chord_list();
    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i < cl.size(); ++i)
        for (size_t j = i + 1; j < cl.size(); ++j)
            if (cl[i].second > cl[j].first && cl[i].second < cl[j].second)
                out.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    return out;
}

IntersectionGraph intersection_graph(const ChordDiagram& d) {
    IntersectionGraph g;
    g.vertices = d.chords();
    g.edges = crossing_pairs(d);
    return g;
}

std::vector<long long> crossing_degrees(const ChordDiagram& d) {
    // deg(c) for chord (a,b) = points inside (a,b) - 2 * chords nested inside.
    const int n2 = d.points();
    const int n = d.chords();
    std::vector<long long> deg(static_cast<size_t>(n), 0);
    std::vector<int> label(static_cast<size_t>(n2), -1);
    int next = 0;
    for (int p = 0; p < n2; ++p)
        if (d.partner(p) > p) label[static_cast<size_t>(p)] = next++;
    FenwickTree closed_lefts(n2);
    for (int p = 0; p < n2; ++p) {
        int q = d.partner(p);
        if (q < p) {
            long long nested = closed_lefts.range(q + 2, p);
            deg[static_cast<size_t>(label[static_cast<size_t>(q)])] = (p - q - 1) - 2 * nested;
            closed_lefts.add(q + 1, 1);
        }
    }
    return deg;
}

CutStats cut_stats(const ChordDiagram& d) {
    CutStats cs;
    const int n = d.chords();
    int max_right = -1;
    for (int n1 = 1; n1 < n; ++n1) {
        for (int p = 2 * (n1 - 1); p < 2 * n1; ++p)
            max_right = std::max(max_right, std::max(p, d.partner(p)));
        if (max_right < 2 * n1) {
            cs.cut_positions.push_back(n1);
            cs.max_cut = std::max(cs.max_cut, std::min(n1, n - n1));
        }
    }
    cs.cut_count = static_cast<int>(cs.cut_positions.size());
    return cs;
}

std::string to_json(const ChordDiagram& d) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [a, b] : d.chord_list()) j.push_back({a, b});
    return j.dump();
}

ChordDiagram diagram_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : j) pairs.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return ChordDiagram::from_pairs(pairs);
}

void write_edge_csv(std::ostream& os, const IntersectionGraph& g) {
    os << "u,v\n";
    for (const auto& [u, v] : g.edges) os << u << ',' << v << '\n';
}

}  // namespace chords
