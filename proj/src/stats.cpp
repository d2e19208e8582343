#include "chords/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace chords {
namespace {

// Lower-tail series for P(a, x)
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 1000; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a, x)
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 1000; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-15) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double gamma_q(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw std::domain_error("gamma_q: bad arguments");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

double chi_square_pvalue(double statistic, int dof) {
    if (dof < 1) throw std::domain_error("chi_square_pvalue: dof < 1");
    return gamma_q(0.5 * dof, 0.5 * statistic);
}

double chi_square_statistic(const std::vector<double>& observed,
                            const std::vector<double>& expected) {
    if (observed.size() != expected.size())
        throw std::invalid_argument("chi_square_statistic: size mismatch");
    double stat = 0.0;
    for (size_t i = 0; i < observed.size(); ++i) {
        if (expected[i] <= 0.0) throw std::invalid_argument("chi_square_statistic: nonpositive expectation");
        double d = observed[i] - expected[i];
        stat += d * d / expected[i];
    }
    return stat;
}

double chi_square_uniform_pvalue(const std::vector<long long>& counts) {
    const size_t k = counts.size();
    if (k < 2) throw std::invalid_argument("chi_square_uniform_pvalue: need >= 2 categories");
    long long total = 0;
    for (long long c : counts) total += c;
    std::vector<double> obs(k), exp_(k, static_cast<double>(total) / static_cast<double>(k));
    for (size_t i = 0; i < k; ++i) obs[i] = static_cast<double>(counts[i]);
    return chi_square_pvalue(chi_square_statistic(obs, exp_), static_cast<int>(k) - 1);
}

double chi_square_two_sample_pvalue(const std::vector<long long>& a,
                                    const std::vector<long long>& b) {
    if (a.size() != b.size() || a.size() < 2)
        throw std::invalid_argument("chi_square_two_sample_pvalue: bad category lists");
    double na = 0.0, nb = 0.0;
    for (long long v : a) na += static_cast<double>(v);
    for (long long v : b) nb += static_cast<double>(v);
    const double ka = std::sqrt(nb / na), kb = std::sqrt(na / nb);
    double stat = 0.0;
    int dof = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        const double va = static_cast<double>(a[i]), vb = static_cast<double>(b[i]);
        if (va + vb == 0.0) continue;
        const double d = ka * va - kb * vb;
        stat += d * d / (va + vb);
        ++dof;
    }
    if (dof < 2) return 1.0;
    return chi_square_pvalue(stat, dof - 1);
}

double EmpiricalDistribution::tv_distance(const std::function<double(int)>& pmf,
                                          int tail_limit) const {
    if (samples <= 0) throw std::domain_error("tv_distance: empty sample");
    long long max_obs = freq.empty() ? 0 : freq.rbegin()->first;
    double tv = 0.0;
    double head_mass = 0.0;
    for (long long j = 0; j <= max_obs; ++j) {
        auto it = freq.find(j);
        double emp = it == freq.end() ? 0.0
                                      : static_cast<double>(it->second) / static_cast<double>(samples);
        double th = pmf(static_cast<int>(j));
        head_mass += th;
        tv += std::abs(emp - th);
    }
    // fold the theoretical tail into one bucket (empirical tail is empty)
    double tail = 0.0;
    for (long long j = max_obs + 1; j <= tail_limit; ++j) tail += pmf(static_cast<int>(j));
    tv += tail;
    return 0.5 * tv;
}

double RunningStats::stderr_mean() const {
    return count > 0 ? std::sqrt(variance() / static_cast<double>(count)) : 0.0;
}

}  // namespace chords
