#include "chords/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "chords/envelopes.hpp"

namespace chords {
namespace {

double triangular(long long j) { return 0.5 * static_cast<double>(j) * static_cast<double>(j + 1); }

}  // namespace

double log_binomial(long long a, long long b) {
    if (b < 0 || b > a) return -std::numeric_limits<double>::infinity();
    return std::lgamma(static_cast<double>(a) + 1) - std::lgamma(static_cast<double>(b) + 1) -
           std::lgamma(static_cast<double>(a - b) + 1);
}

double log_catalan(int n) { return log_binomial(2LL * n, n) - std::log(static_cast<double>(n) + 1); }

double partial_theta_f(double q, SeriesParams sp) {
    if (q < 0.0 || q >= 1.0) throw std::domain_error("partial_theta_f: q must be in [0, 1)");
    double sum = 0.0;
    for (long long j = 0; j < sp.max_terms; ++j) {
        double term = std::pow(q, triangular(j));
        if (j % 2 == 1) term = -term;
        sum += term;
        if (std::abs(term) < sp.tolerance * std::max(std::abs(sum), 1e-300)) break;
    }
    return sum;
}

std::pair<double, double> jacobi_sides(double q, SeriesParams sp) {
    if (q < 0.0 || q >= 1.0) throw std::domain_error("jacobi_sides: q must be in [0, 1)");
    double lhs = 0.0;
    for (long long j = 0; j < sp.max_terms; ++j) {
        double term = (2.0 * static_cast<double>(j) + 1.0) * std::pow(q, triangular(j));
        if (j % 2 == 1) term = -term;
        lhs += term;
        if (std::abs(term) < sp.tolerance * std::max(std::abs(lhs), 1e-300)) break;
    }
    double rhs = 1.0;
    for (long long j = 1; j < sp.max_terms; ++j) {
        double qj = std::pow(q, static_cast<double>(j));
        if (qj < sp.tolerance) break;
        double factor = 1.0 - qj;
        rhs *= factor * factor * factor;
    }
    return {lhs, rhs};
}

EulerLog euler_log(double q, SeriesParams sp) {
    if (q <= 0.0 || q >= 1.0) throw std::domain_error("euler_log: q must be in (0, 1)");
    EulerLog out;
    double qj = 1.0;
    for (long long j = 1; j < sp.max_terms; ++j) {
        qj *= q;
        // |sum_{i>j} log(1-q^i)| <= q^{j+1}/(1-q)
        if (qj / (1.0 - q) < sp.tolerance) break;
        out.exact_log += std::log1p(-qj);
    }
    const double z = -std::log(q);
    out.freiman_log = -std::numbers::pi * std::numbers::pi / (6.0 * z) -
                      0.5 * std::log(z / (2.0 * std::numbers::pi));
    return out;
}

AsymptoticT asymptotic_T(int n, long long m, int l) {
    if (n < 1 || m < 0 || l < 1) throw std::domain_error("asymptotic_T: bad arguments");
    AsymptoticT out;
    const double q = static_cast<double>(m) / static_cast<double>(m + n);
    const double f = partial_theta_f(q);
    double euler3 = 0.0;
    if (m > 0) euler3 = 3.0 * euler_log(q).exact_log;
    out.log_value = std::log(static_cast<double>(l)) + (l - 1) * std::log(2.0 * f) +
                    log_binomial(n + m - 1, n - 1) + log_catalan(n) + euler3;
    if (n >= 3) {
        const double logn = std::log(static_cast<double>(n));
        const double loglogn = std::log(logn);
        const double cap = (2.0 / (std::numbers::pi * std::numbers::pi)) * n *
                           (logn - 2.0 * loglogn - loglogn);
        out.advisory = static_cast<double>(m) > cap;
    } else {
        out.advisory = m > 0;
    }
    return out;
}

double CutLaw::pmf(int j) const {
    if (j < 0) return 0.0;
    return (j + 1) * (1.0 - p) * (1.0 - p) * std::pow(p, j);
}

CutLaw cut_law(double q) {
    if (q < 0.0 || q >= 1.0) throw std::domain_error("cut_law: q must be in [0, 1)");
    return CutLaw{1.0 - 1.0 / (2.0 * partial_theta_f(q))};
}

TBounds bounds_T(int n, long long m) {
    if (n < 1) throw std::domain_error("bounds_T: n < 1");
    TBounds out;
    const double base = log_catalan(n) + log_binomial(n + m - 1, n - 1);
    out.upper_log = base;
    out.lower_log = base - 2.0 * (static_cast<double>(m) / n) * std::log(static_cast<double>(n)) -
                    kLowerBoundLogSlack;
    out.asymptotic_only = static_cast<double>(m) >= std::pow(static_cast<double>(n), 1.5);
    return out;
}

double bounds_connected(int nu, long long mu) {
    if (nu < 1 || mu < nu - 1) throw std::domain_error("bounds_connected: need nu >= 1, mu >= nu-1");
    auto xlogx = [](double x) { return x <= 0.0 ? 0.0 : x * std::log(x); };  // mu^mu := 1 at mu=0
    const double dmu = static_cast<double>(mu);
    const double dnu = static_cast<double>(nu);
    const double first = dnu * std::log(4.0) - 2.0 * std::log(dnu) + xlogx(dmu + dnu) -
                         xlogx(dmu) - xlogx(dnu);
    const double second = xlogx(3.0 * dnu + dmu) - xlogx(3.0 * dnu) - xlogx(dmu);
    return std::min(first, second);
}

}  // namespace chords
