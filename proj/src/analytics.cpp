#include "chords/analytics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace chords {
namespace {

struct Dsu {
    std::vector<int> parent;

    explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int a) {
        while (parent[static_cast<size_t>(a)] != a) {
            parent[static_cast<size_t>(a)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
            a = parent[static_cast<size_t>(a)];
        }
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<size_t>(a)] = b;
    }
};

ComponentSummary summarize(int n, Dsu& dsu, const std::vector<long long>& degrees) {
    ComponentSummary out;
    std::vector<int> comp_of(static_cast<size_t>(n), -1);
    for (int c = 0; c < n; ++c) {
        int root = dsu.find(c);
        if (comp_of[static_cast<size_t>(root)] < 0) {
            comp_of[static_cast<size_t>(root)] = static_cast<int>(out.components.size());
            out.components.push_back(Component{});
        }
        auto& comp = out.components[static_cast<size_t>(comp_of[static_cast<size_t>(root)])];
        ++comp.chords;
        comp.crossings += degrees[static_cast<size_t>(c)];
        comp.members.push_back(c + 1);
    }
    for (auto& comp : out.components) comp.crossings /= 2;  // each edge counted twice

    for (size_t i = 0; i < out.components.size(); ++i) {
        const auto& comp = out.components[i];
        if (comp.chords == 1) ++out.isolated;
        if (out.largest_by_chords < 0 ||
            comp.chords > out.components[static_cast<size_t>(out.largest_by_chords)].chords)
            out.largest_by_chords = static_cast<int>(i);
        if (out.densest < 0) {
            out.densest = static_cast<int>(i);
        } else {
            const auto& best = out.components[static_cast<size_t>(out.densest)];
            // compare mu/nu as cross products; ties by larger nu, then smaller min label
            long long lhs = comp.crossings * best.chords;
            long long rhs = best.crossings * comp.chords;
            bool better = lhs > rhs ||
                          (lhs == rhs && (comp.chords > best.chords ||
                                          (comp.chords == best.chords &&
                                           comp.members.front() < best.members.front())));
            if (better) out.densest = static_cast<int>(i);
        }
    }
    return out;
}

}  // namespace

ComponentSummary components(const ChordDiagram& d) {
    const int n = d.chords();
    const int n2 = d.points();
    Dsu dsu(n);

    // ordered groups of currently-open chords; each group's chords share a
    // component and occupy a contiguous run of open positions
    struct Group {
        int rep;    // any chord in the group (component representative)
        int open;   // number of still-open chords
        int prev, next;
    };
    std::vector<Group> groups;
    std::vector<int> group_of(static_cast<size_t>(n), -1);
    std::vector<int> group_alias;  // group-merge forwarding
    int head = -1, tail = -1;

    std::vector<int> label(static_cast<size_t>(n2), -1);
    int next_label = 0;
    for (int p = 0; p < n2; ++p)
        if (d.partner(p) > p) label[static_cast<size_t>(p)] = next_label++;

    auto resolve = [&](int g) {
        while (group_alias[static_cast<size_t>(g)] != g) {
            group_alias[static_cast<size_t>(g)] =
                group_alias[static_cast<size_t>(group_alias[static_cast<size_t>(g)])];
            g = group_alias[static_cast<size_t>(g)];
        }
        return g;
    };

    for (int p = 0; p < n2; ++p) {
        const int q = d.partner(p);
        if (q > p) {
            const int c = label[static_cast<size_t>(p)];
            const int g = static_cast<int>(groups.size());
            groups.push_back(Group{c, 1, tail, -1});
            group_alias.push_back(g);
            if (tail >= 0) groups[static_cast<size_t>(tail)].next = g;
            tail = g;
            if (head < 0) head = g;
            group_of[static_cast<size_t>(c)] = g;
        } else {
            const int c = label[static_cast<size_t>(q)];
            int g = resolve(group_of[static_cast<size_t>(c)]);
            // all groups after g hold chords crossing c: merge into g
            while (groups[static_cast<size_t>(g)].next >= 0) {
                int h = groups[static_cast<size_t>(g)].next;
                dsu.unite(groups[static_cast<size_t>(g)].rep, groups[static_cast<size_t>(h)].rep);
                groups[static_cast<size_t>(g)].open += groups[static_cast<size_t>(h)].open;
                groups[static_cast<size_t>(g)].next = groups[static_cast<size_t>(h)].next;
                if (groups[static_cast<size_t>(h)].next >= 0)
                    groups[static_cast<size_t>(groups[static_cast<size_t>(h)].next)].prev = g;
                else
                    tail = g;
                group_alias[static_cast<size_t>(h)] = g;
            }
            if (--groups[static_cast<size_t>(g)].open == 0) {
                int pr = groups[static_cast<size_t>(g)].prev;
                int nx = groups[static_cast<size_t>(g)].next;
                if (pr >= 0) groups[static_cast<size_t>(pr)].next = nx; else head = nx;
                if (nx >= 0) groups[static_cast<size_t>(nx)].prev = pr; else tail = pr;
            }
        }
    }

    return summarize(n, dsu, crossing_degrees(d));
}

ComponentSummary components(const IntersectionGraph& g) {
    Dsu dsu(g.vertices);
    std::vector<long long> degrees(static_cast<size_t>(g.vertices), 0);
    for (const auto& [u, v] : g.edges) {
        dsu.unite(u - 1, v - 1);
        ++degrees[static_cast<size_t>(u - 1)];
        ++degrees[static_cast<size_t>(v - 1)];
    }
    return summarize(g.vertices, dsu, degrees);
}

bool is_monolithic(const ComponentSummary& s) {
    int nontrivial = 0;
    for (const auto& comp : s.components)
        if (comp.chords >= 2) ++nontrivial;
    return nontrivial == 1;
}

GiantStats giant_stats(const ComponentSummary& s, long long m) {
    if (m <= 0) throw std::domain_error("giant_stats: fractions undefined at m = 0");
    long long n = 0;
    for (const auto& comp : s.components) n += comp.chords;
    const auto& giant = s.components[static_cast<size_t>(s.largest_by_chords)];
    return GiantStats{static_cast<double>(giant.chords) / static_cast<double>(n),
                      static_cast<double>(giant.crossings) / static_cast<double>(m)};
}

}  // namespace chords
