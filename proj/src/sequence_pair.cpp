#include "chords/sequence_pair.hpp"

#include <stdexcept>
#include <string>

#include "chords/fenwick.hpp"

namespace chords {

SequencePair encode(const ChordDiagram& d) {
    const int n = d.chords();
    const int n2 = d.points();
    SequencePair p;
    p.y.assign(static_cast<size_t>(n), 0);
    p.x.assign(static_cast<size_t>(n), 0);

    // y: count reds in each gap between consecutive blues (and after blue n)
    int blues_seen = 0;
    for (int pt = 0; pt < n2; ++pt) {
        if (d.partner(pt) > pt)
            ++blues_seen;
        else
            ++p.y[static_cast<size_t>(blues_seen - 1)];
    }

    // x_j = chords of smaller label crossing chord j
    auto cl = d.chord_list();
    for (size_t j = 1; j < cl.size(); ++j)
        for (size_t i = 0; i < j; ++i)
            if (cl[i].second > cl[j].first && cl[i].second < cl[j].second)
                ++p.x[j];
    return p;
}

static void check_shapes(const SequencePair& p) {
    const int n = static_cast<int>(p.y.size());
    if (static_cast<int>(p.x.size()) != n)
        throw std::invalid_argument("sequence pair length mismatch: |y|=" + std::to_string(n) +
                                    " |x|=" + std::to_string(p.x.size()));
    int s = 0;
    for (int j = 1; j <= n; ++j) {
        int yj = p.y[static_cast<size_t>(j - 1)];
        if (yj < 0) throw std::invalid_argument("negative allocation entry y_" + std::to_string(j));
        s += yj;
        if (j < n && s > j)
            throw std::invalid_argument("allocation prefix exceeds " + std::to_string(j));
        int xj = p.x[static_cast<size_t>(j - 1)];
        if (xj < 0 || xj > j - 1)
            throw std::invalid_argument("x_" + std::to_string(j) + " outside [0, j-1]");
    }
    if (s != n) throw std::invalid_argument("allocation sequence does not sum to n");
}

bool is_compatible(const SequencePair& p) {
    check_shapes(p);
    const int n = p.n();
    int prefix = 0;  // S_{j-1}
    for (int j = 1; j <= n; ++j) {
        if (p.x[static_cast<size_t>(j - 1)] > j - 1 - prefix) return false;
        prefix += p.y[static_cast<size_t>(j - 1)];
    }
    return true;
}

ChordDiagram decode(const SequencePair& p) {
    check_shapes(p);
    const int n = p.n();
    {
        int prefix = 0;
        for (int j = 1; j <= n; ++j) {
            if (p.x[static_cast<size_t>(j - 1)] > j - 1 - prefix)
                throw std::invalid_argument("incompatible pair: constraint fails at chord " +
                                            std::to_string(j));
            prefix += p.y[static_cast<size_t>(j - 1)];
        }
    }

    const int n2 = 2 * n;
    // Lay out blues per y; remaining slots are red slots.
    std::vector<int> blue_pos(static_cast<size_t>(n) + 1, 0);  // 1-based positions
    {
        int pos = 0;
        for (int i = 1; i <= n; ++i) {
            pos += 1;
            blue_pos[static_cast<size_t>(i)] = pos;
            pos += p.y[static_cast<size_t>(i - 1)];
        }
    }

    FenwickTree free_slots(n2);  // 1 = unoccupied red slot
    std::vector<char> is_blue(static_cast<size_t>(n2) + 1, 0);
    for (int i = 1; i <= n; ++i) is_blue[static_cast<size_t>(blue_pos[static_cast<size_t>(i)])] = 1;
    for (int pos = 1; pos <= n2; ++pos)
        if (!is_blue[static_cast<size_t>(pos)]) free_slots.add(pos, 1);

    std::vector<int> partner(static_cast<size_t>(n2), -1);
    for (int j = n; j >= 1; --j) {
        int bp = blue_pos[static_cast<size_t>(j)];
        long long rank = free_slots.prefix(bp) + 1 + p.x[static_cast<size_t>(j - 1)];
        int rp = free_slots.select(rank);
        free_slots.add(rp, -1);
        partner[static_cast<size_t>(bp - 1)] = rp - 1;
        partner[static_cast<size_t>(rp - 1)] = bp - 1;
    }
    return ChordDiagram::from_partner(std::move(partner));
}

}  // namespace chords
