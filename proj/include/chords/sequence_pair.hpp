#pragma once

#include <vector>

#include "chords/diagram.hpp"

namespace chords {

// The bijective encoding of a chord diagram: an allocation sequence y (red
// points per gap of the underlying Catalan sequence) and an intersection
// sequence x (crossings with smaller-labeled chords).
struct SequencePair {
    std::vector<int> y;  // sum = n, prefix sums S_k <= k for k < n
    std::vector<int> x;  // 0 <= x_j <= j-1, sum = crossings

    int n() const { return static_cast<int>(y.size()); }
};

// y_i = number of red (right) endpoints between blue (left) endpoints i and
// i+1; x_j = crossings of chord j with chords of smaller label.
SequencePair encode(const ChordDiagram& d);

// True iff x_j <= j - 1 - S_{j-1} for every j, where S_j = y_1 + ... + y_j.
// Throws on length mismatch or malformed y / x.
bool is_compatible(const SequencePair& p);

// Inverse of encode; requires is_compatible(p).  Red points are placed for
// j = n, n-1, ..., 1 at the (1+x_j)-th unoccupied slot right of blue j.
ChordDiagram decode(const SequencePair& p);

}  // namespace chords
