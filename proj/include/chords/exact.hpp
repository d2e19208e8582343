#pragma once

#include <gmpxx.h>

#include <functional>
#include <vector>

#include "chords/diagram.hpp"

namespace chords {

// The vector (T_{n,0}, ..., T_{n,n(n-1)/2}) of exact crossing counts.
struct CrossingRow {
    int n = 0;
    std::vector<mpz_class> counts;  // indexed by m

    mpz_class sum() const;
};

// Multiplicities of block sizes for non-crossing partitions: s[j] blocks of
// j chords (2j points), 1-based in spirit, stored with s[0] unused = 0.
struct BlockProfile {
    std::vector<int> s;  // s[j] = number of blocks of j chords, j >= 1

    int block_count() const;  // k = sum s_j
    int chord_count() const;  // n = sum j * s_j
};

mpz_class catalan(int n);
mpz_class total_diagrams(int n);  // (2n-1)!!

// Riordan's alternating sum for T_{n,m}; exact, zero beyond m = n(n-1)/2.
mpz_class touchard_riordan(int n, long long m);

CrossingRow crossing_row(int n);

// [x^m y^n] T(x,y)^l via the paper's multi-index alternating sum.
mpz_class power_coefficient(int n, long long m, int l);

// Permutations of [n] with m inversions.
mpz_class inversion_count(int n, long long m);
std::vector<mpz_class> inversion_row(int n, long long m_max);

// Allocation/intersection-pair DP.  Returns T_{n,m}; the full layered table
// lives in CountTable (count_table.hpp) for sampling.
mpz_class dp_count(int n, long long m);

// Histogram of crossings over all (2n-1)!! matchings; n <= 9 enforced.
CrossingRow brute_force_row(int n);

// Enumerate all matchings of [2n] (smallest unmatched point paired first).
void for_each_matching(int n, const std::function<void(const ChordDiagram&)>& fn);

// Connected chord diagrams: tree formula for mu = nu-1, Acan's double sum
// for mu = nu (nu >= 4), C(3,3) = 1 special-cased.
mpz_class connected_count_exact(int nu, int mu);

// Oracle: connected diagrams with nu chords and mu crossings; nu <= 8.
mpz_class brute_force_connected(int nu, int mu);
std::vector<mpz_class> brute_force_connected_row(int nu);  // indexed by mu

// Non-crossing partitions of [2n] with s_j blocks of 2j points:
// (2n)_{k-1} / prod s_j!.
mpz_class kreweras_count(int n, const BlockProfile& profile);

// N(x): allocation sequences y compatible with intersection sequence x;
// n <= 12 enforced.
mpz_class compatible_allocation_count(const std::vector<int>& x);

// E[binom(X_{n,m}, k)] as an exact rational.
mpq_class cut_factorial_moment(int n, long long m, int k);

// Checks T_{n,m} = sum_{nu,mu} C_{nu,mu} [x^{m-mu} y^{n-nu}] T^{2 nu} for
// all n <= n_max (<= 6), using brute-force connected counts.
bool verify_component_identity(int n_max);

}  // namespace chords
