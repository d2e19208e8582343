#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "chords/asymptotics.hpp"
#include "chords/envelopes.hpp"
#include "chords/exact.hpp"

using namespace chords;

namespace {
double log_mpz(const mpz_class& v) {
    signed long int e;
    double mant = mpz_get_d_2exp(&e, v.get_mpz_t());
    return std::log(mant) + static_cast<double>(e) * std::log(2.0);
}
}  // namespace

TEST_CASE("partial theta function") {
    CHECK(partial_theta_f(0.0) == 1.0);
    CHECK(partial_theta_f(0.5) == doctest::Approx(0.6103).epsilon(1e-3));
    double near_one = partial_theta_f(0.999);
    CHECK(near_one > 0.5);
    CHECK(near_one < 0.52);
    CHECK_THROWS_AS(partial_theta_f(1.0), std::domain_error);
    for (double q = 0.0123; q < 0.9999; q += 0.0123) {
        double f = partial_theta_f(q);
        CHECK(f > 1.0 - q);
        CHECK(f > 0.5);
    }
}

TEST_CASE("jacobi identity") {
    auto [l0, r0] = jacobi_sides(0.0);
    CHECK(l0 == 1.0);
    CHECK(r0 == 1.0);
    auto [lh, rh] = jacobi_sides(0.5);
    CHECK(lh == doctest::Approx(0.02408).epsilon(1e-3));
    CHECK(std::fabs(lh - rh) <= 1e-12);
    for (double q = 0.05; q <= 0.951; q += 0.05) {
        auto [lhs, rhs] = jacobi_sides(q);
        CHECK(std::fabs(lhs - rhs) <= 1e-12);
    }
}

TEST_CASE("euler product log and Freiman approximation") {
    EulerLog mid = euler_log(0.5);
    CHECK(mid.exact_log == doctest::Approx(std::log(0.288788)).epsilon(1e-5));
    CHECK(euler_log(1e-15).exact_log == doctest::Approx(0.0).epsilon(1e-12));
    for (double q = 0.9; q <= 0.9991; q += 0.009) {
        EulerLog el = euler_log(q);
        CHECK(std::fabs(el.exact_log - el.freiman_log) <=
              kFreimanResidualFactor * (-std::log(q)));
    }
}

TEST_CASE("asymptotic_T against exact values") {
    AsymptoticT a50 = asymptotic_T(50, 50);
    double exact50 = log_mpz(touchard_riordan(50, 50));
    double ratio = std::exp(a50.log_value - exact50);
    CHECK(ratio > 0.5);
    CHECK(ratio < 2.0);

    // residuals shrink along n with m = n
    double prev = 1e100;
    for (int n : {100, 300, 1000}) {
        double exact = log_mpz(touchard_riordan(n, n));
        double resid = std::fabs(asymptotic_T(n, n).log_value / exact - 1.0);
        CHECK(resid < prev);
        prev = resid;
    }
    CHECK(prev < 0.05);

    CHECK_FALSE(asymptotic_T(1000, 100).advisory);
    CHECK(asymptotic_T(100, 5000).advisory);
}

TEST_CASE("cut law") {
    CutLaw uniform_q = cut_law(0.0);
    CHECK(uniform_q.p == doctest::Approx(0.5));
    for (int j = 0; j <= 5; ++j)
        CHECK(uniform_q.pmf(j) ==
              doctest::Approx((j + 1) * std::pow(2.0, -(j + 2))).epsilon(1e-12));
    CHECK(cut_law(0.5).p == doctest::Approx(0.1807).epsilon(1e-3));
    for (double q : {0.0, 0.3, 0.5, 0.8, 0.95}) {
        CutLaw law = cut_law(q);
        double sum = 0.0;
        for (int j = 0; j <= 200; ++j) sum += law.pmf(j);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("bounds_T sandwich") {
    TBounds b0 = bounds_T(12, 0);
    CHECK(b0.upper_log == doctest::Approx(log_mpz(catalan(12))).epsilon(1e-12));
    CHECK(b0.lower_log <= b0.upper_log);

    TBounds b = bounds_T(200, 200);
    double exact = log_mpz(touchard_riordan(200, 200));
    CHECK(b.lower_log <= exact);
    CHECK(exact <= b.upper_log + 1e-9);
    CHECK_FALSE(b.asymptotic_only);
    CHECK(bounds_T(100, 1001).asymptotic_only);
}

TEST_CASE("bounds_connected") {
    CHECK(bounds_connected(2, 1) >= 0.0);
    for (int nu = 1; nu <= 7; ++nu) {
        double bound = bounds_connected(nu, nu - 1);
        CHECK(log_mpz(connected_count_exact(nu, nu - 1)) <= bound + 1e-9);
    }
    // growth comparable to log(nu^{1/2} binom(4 nu, nu)) for trees
    for (int nu = 5; nu <= 50; nu += 5) {
        double bound = bounds_connected(nu, nu - 1);
        double ref = 0.5 * std::log(static_cast<double>(nu)) +
                     log_binomial(4LL * nu, nu);
        CHECK(std::fabs(bound / ref - 1.0) < 0.5);
    }
}
