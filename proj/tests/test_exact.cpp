#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "chords/diagram.hpp"
#include "chords/exact.hpp"
#include "chords/rng.hpp"

using namespace chords;

TEST_CASE("catalan and total_diagrams") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(3) == 5);
    CHECK(catalan(10) == 16796);
    CHECK(total_diagrams(0) == 1);
    CHECK(total_diagrams(1) == 1);
    CHECK(total_diagrams(3) == 15);
    CHECK(total_diagrams(7) == 135135);
}

TEST_CASE("touchard_riordan basics") {
    CHECK(touchard_riordan(2, 1) == 1);
    CHECK(touchard_riordan(3, 0) == 5);
    CHECK(touchard_riordan(3, 1) == 6);
    CHECK(touchard_riordan(3, 2) == 3);
    CHECK(touchard_riordan(3, 3) == 1);
    CHECK(touchard_riordan(3, 4) == 0);  // beyond max crossings
    for (int n = 1; n <= 20; ++n) CHECK(touchard_riordan(n, 0) == catalan(n));
}

TEST_CASE("crossing_row invariants") {
    CHECK(crossing_row(2).counts == std::vector<mpz_class>{2, 1});
    CHECK(crossing_row(3).counts == std::vector<mpz_class>{5, 6, 3, 1});
    CrossingRow r4 = crossing_row(4);
    CHECK(r4.sum() == 105);
    CHECK(r4.counts.front() == 14);
    CHECK(r4.counts.back() == 1);
    for (int n = 1; n <= 25; ++n) {
        CrossingRow r = crossing_row(n);
        CHECK(r.sum() == total_diagrams(n));
        CHECK(r.counts.front() == catalan(n));
        CHECK(r.counts.back() == 1);
    }
}

TEST_CASE("power_coefficient") {
    for (int n = 0; n <= 6; ++n)
        for (long long m = 0; m <= n * (n - 1) / 2; ++m)
            CHECK(power_coefficient(n, m, 1) == (n ? touchard_riordan(n, m) : (m ? 0 : 1)));
    CHECK(power_coefficient(2, 0, 2) == 5);

    // convolution oracle: rows of T^l as truncated polynomial products
    for (int l = 2; l <= 4; ++l) {
        const int n_max = 5;
        const long long m_max = 10;
        // coef[l][n][m]
        std::vector<std::vector<std::vector<mpz_class>>> coef(
            static_cast<size_t>(l) + 1,
            std::vector<std::vector<mpz_class>>(
                n_max + 1, std::vector<mpz_class>(static_cast<size_t>(m_max) + 1, 0)));
        coef[0][0][0] = 1;
        for (int n = 0; n <= n_max; ++n)
            for (long long m = 0; m <= m_max; ++m)
                coef[1][static_cast<size_t>(n)][static_cast<size_t>(m)] =
                    n == 0 ? (m == 0 ? 1 : 0) : touchard_riordan(n, m);
        for (int p = 2; p <= l; ++p)
            for (int n = 0; n <= n_max; ++n)
                for (long long m = 0; m <= m_max; ++m)
                    for (int n1 = 0; n1 <= n; ++n1)
                        for (long long m1 = 0; m1 <= m; ++m1)
                            coef[static_cast<size_t>(p)][static_cast<size_t>(n)]
                                [static_cast<size_t>(m)] +=
                                coef[static_cast<size_t>(p - 1)][static_cast<size_t>(n1)]
                                    [static_cast<size_t>(m1)] *
                                coef[1][static_cast<size_t>(n - n1)][static_cast<size_t>(m - m1)];
        for (int n = 0; n <= n_max; ++n)
            for (long long m = 0; m <= m_max; ++m)
                CHECK(power_coefficient(n, m, l) ==
                      coef[static_cast<size_t>(l)][static_cast<size_t>(n)][static_cast<size_t>(m)]);
    }
}

TEST_CASE("inversion numbers") {
    CHECK(inversion_row(3, 3) == std::vector<mpz_class>{1, 2, 2, 1});
    CHECK(inversion_count(4, 2) == 5);
    for (int n = 1; n <= 10; ++n) CHECK(inversion_count(n, 0) == 1);
    // proper log-concavity of each row
    for (int n = 2; n <= 15; ++n) {
        auto row = inversion_row(n, static_cast<long long>(n) * (n - 1) / 2);
        for (size_t m = 1; m + 1 < row.size(); ++m)
            CHECK(row[m] * row[m] > row[m - 1] * row[m + 1]);
    }
}

TEST_CASE("dp_count equals the other algorithms") {
    CHECK(dp_count(2, 1) == 1);
    CrossingRow r7 = crossing_row(7);
    for (long long m = 0; m < static_cast<long long>(r7.counts.size()); ++m)
        CHECK(dp_count(7, m) == r7.counts[static_cast<size_t>(m)]);
}

TEST_CASE("brute_force_row") {
    CHECK(brute_force_row(2).counts == std::vector<mpz_class>{2, 1});
    CHECK(brute_force_row(3).counts == std::vector<mpz_class>{5, 6, 3, 1});
    for (int n = 1; n <= 6; ++n) CHECK(brute_force_row(n).sum() == total_diagrams(n));
    CHECK_THROWS_AS(brute_force_row(10), std::domain_error);
}

TEST_CASE("connected counts") {
    CHECK(connected_count_exact(2, 1) == 1);
    CHECK(connected_count_exact(3, 2) == 3);
    CHECK(connected_count_exact(3, 3) == 1);
    CHECK(connected_count_exact(4, 4) == 10);
    CHECK_THROWS_AS(connected_count_exact(4, 6), std::domain_error);

    CHECK(brute_force_connected(1, 0) == 1);
    CHECK(brute_force_connected(2, 0) == 0);
    CHECK(brute_force_connected(3, 3) == 1);
    for (int nu = 2; nu <= 6; ++nu) {
        auto row = brute_force_connected_row(nu);
        CHECK(connected_count_exact(nu, nu - 1) == row[static_cast<size_t>(nu - 1)]);
        if (nu >= 3) CHECK(connected_count_exact(nu, nu) == row[static_cast<size_t>(nu)]);
    }
}

TEST_CASE("kreweras counts") {
    BlockProfile two_singles;
    two_singles.s = {0, 2};
    CHECK(kreweras_count(2, two_singles) == 2);

    BlockProfile one;
    one.s = {0, 1};
    CHECK(kreweras_count(1, one) == 1);

    BlockProfile mixed;
    mixed.s = {0, 1, 1};
    CHECK(kreweras_count(3, mixed) == 6);

    BlockProfile bad;
    bad.s = {0, 1};
    CHECK_THROWS_AS(kreweras_count(2, bad), std::invalid_argument);
}

TEST_CASE("compatible_allocation_count") {
    CHECK(compatible_allocation_count({0, 0, 0}) == catalan(3));
    CHECK(compatible_allocation_count({0, 1}) == 1);
    CounterRng rng(99);
    for (int rep = 0; rep < 1000; ++rep) {
        const int n = 6;
        std::vector<int> x(n);
        int mx = 0;
        for (int j = 0; j < n; ++j) {
            x[static_cast<size_t>(j)] = static_cast<int>(rng.uniform_below(static_cast<uint64_t>(j) + 1));
            mx = std::max(mx, x[static_cast<size_t>(j)]);
        }
        CHECK(compatible_allocation_count(x) >= catalan(n - mx));
    }
}

TEST_CASE("cut factorial moments") {
    CHECK(cut_factorial_moment(2, 0, 0) == 1);
    CHECK(cut_factorial_moment(2, 0, 1) == mpq_class(1, 2));
    // brute-force oracle: E[binom(X, k)] over all diagrams with m crossings
    for (int n = 1; n <= 5; ++n) {
        std::map<long long, std::map<int, long long>> sums;  // m -> k -> sum binom(X,k)
        std::map<long long, long long> totals;
        for_each_matching(n, [&](const ChordDiagram& d) {
            long long m = crossing_count(d);
            int x = cut_stats(d).cut_count;
            ++totals[m];
            for (int k = 0; k <= 2; ++k) {
                long long b = x >= k ? 1 : 0;
                for (int i = 0; i < k && b > 0; ++i) b = b * (x - i) / (i + 1);
                sums[m][k] += b;
            }
        });
        for (const auto& [m, by_k] : sums)
            for (int k = 0; k <= 2; ++k) {
                mpq_class expected(static_cast<long>(by_k.at(k)),
                                   static_cast<long>(totals.at(m)));
                expected.canonicalize();
                CHECK(cut_factorial_moment(n, m, k) == expected);
            }
    }
}

TEST_CASE("component identity at small n") {
    CHECK(verify_component_identity(3));
}
