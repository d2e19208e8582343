#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace chords {

// Regularized upper incomplete gamma Q(a, x); Q(dof/2, stat/2) is the
// chi-square survival function.
double gamma_q(double a, double x);

double chi_square_pvalue(double statistic, int dof);

// Goodness-of-fit statistic of observed counts against expected counts.
// Both vectors must have the same length; expected entries must be positive.
double chi_square_statistic(const std::vector<double>& observed,
                            const std::vector<double>& expected);

// Uniformity test over k categories; returns the p-value.
double chi_square_uniform_pvalue(const std::vector<long long>& counts);

// Two-sample chi-square over a shared category list; returns the p-value.
double chi_square_two_sample_pvalue(const std::vector<long long>& a,
                                    const std::vector<long long>& b);

// Frequency map over a nonnegative integer support.
struct EmpiricalDistribution {
    std::map<long long, long long> freq;
    long long samples = 0;

    void add(long long value) {
        ++freq[value];
        ++samples;
    }

    // 1/2 sum_j |freq_j/N - pmf(j)|, with the pmf's tail mass beyond the
    // observed support folded into a final bucket.
    double tv_distance(const std::function<double(int)>& pmf, int tail_limit = 4096) const;
};

struct RunningStats {
    long long count = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++count;
        double d = x - mean;
        mean += d / static_cast<double>(count);
        m2 += d * (x - mean);
    }
    double variance() const { return count > 1 ? m2 / static_cast<double>(count - 1) : 0.0; }
    double stderr_mean() const;
};

}  // namespace chords
