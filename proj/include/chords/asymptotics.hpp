#pragma once

#include <utility>

namespace chords {

struct SeriesParams {
    double tolerance = 1e-16;
    int max_terms = 2000000;
};

// Limit law of the cut count: sum of two independent geometric(p) variables.
struct CutLaw {
    double p = 0.0;

    double pmf(int j) const;
};

// f(q) = sum_j (-1)^j q^{j(j+1)/2}; 1/2 < f(q) <= 1 on [0, 1).
double partial_theta_f(double q, SeriesParams sp = {});

// Both sides of sum_j (-1)^j (2j+1) q^{J(j)} = prod_{j>=1} (1-q^j)^3.
std::pair<double, double> jacobi_sides(double q, SeriesParams sp = {});

// exact_log = sum_j log(1-q^j); freiman_log = -pi^2/(6z) - (1/2) log(z/2pi),
// z = -log q.
struct EulerLog {
    double exact_log = 0.0;
    double freiman_log = 0.0;
};
EulerLog euler_log(double q, SeriesParams sp = {});

// Natural log of l (2f(q))^{l-1} binom(n+m-1, n-1) C_n prod (1-q^j)^3 with
// q = m/(m+n).  advisory is set when m violates the validity constraint
// m <= (2/pi^2) n (log n - 2 log log n - log log n).
struct AsymptoticT {
    double log_value = 0.0;
    bool advisory = false;
};
AsymptoticT asymptotic_T(int n, long long m, int l = 1);

CutLaw cut_law(double q);

// Logs of the sandwich C_n binom(n+m-1, n-1) e^{-2(m/n) log n - slack}
// <= T_{n,m} <= C_n binom(n+m-1, n-1).  asymptotic_only flags m >= n^{3/2},
// where the lower estimate has no claimed validity.
struct TBounds {
    double lower_log = 0.0;
    double upper_log = 0.0;
    bool asymptotic_only = false;
};
TBounds bounds_T(int n, long long m);

// Log upper bound for connected counts C_{nu,mu}.
double bounds_connected(int nu, long long mu);

double log_catalan(int n);
double log_binomial(long long a, long long b);

}  // namespace chords
