#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace chords {

// Fenwick (binary indexed) tree over positions 1..size with integer counts.
class FenwickTree {
public:
    explicit FenwickTree(int size) : tree_(static_cast<size_t>(size) + 1, 0) {}

    int size() const { return static_cast<int>(tree_.size()) - 1; }

    void add(int pos, int delta) {
        for (; pos <= size(); pos += pos & (-pos)) tree_[static_cast<size_t>(pos)] += delta;
    }

    // sum of counts at positions 1..pos
    long long prefix(int pos) const {
        long long s = 0;
        for (; pos > 0; pos -= pos & (-pos)) s += tree_[static_cast<size_t>(pos)];
        return s;
    }

    // sum of counts at positions lo..hi, inclusive
    long long range(int lo, int hi) const {
        if (hi < lo) return 0;
        return prefix(hi) - prefix(lo - 1);
    }

    // smallest position p with prefix(p) >= k; size()+1 if prefix(size()) < k
    int select(long long k) const {
        int pos = 0;
        int log = 1;
        while ((1 << log) <= size()) ++log;
        for (int step = 1 << (log - 1); step > 0; step >>= 1) {
            int next = pos + step;
            if (next <= size() && tree_[static_cast<size_t>(next)] < k) {
                pos = next;
                k -= tree_[static_cast<size_t>(next)];
            }
        }
        return pos + 1;
    }

private:
    std::vector<long long> tree_;
};

}  // namespace chords
