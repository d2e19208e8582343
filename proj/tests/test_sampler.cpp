#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>
#include <string>

#include "chords/count_table.hpp"
#include "chords/exact.hpp"
#include "chords/sampler.hpp"
#include "chords/stats.hpp"

using namespace chords;

TEST_CASE("random_matching is uniform") {
    CounterRng rng(7);
    for (int i = 0; i < 10; ++i)
        CHECK(random_matching(1, rng) == ChordDiagram::from_pairs({{1, 2}}));

    std::map<std::string, long long> freq;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) freq[random_matching(2, rng).canonical_key()]++;
    CHECK(freq.size() == 3);
    for (const auto& [key, count] : freq)
        CHECK(std::fabs(static_cast<double>(count) / draws - 1.0 / 3) < 0.01);
}

TEST_CASE("random_matching crossing concentration at n=1000") {
    CounterRng rng(11);
    const int n = 1000;
    RunningStats stats;
    for (int i = 0; i < 30; ++i)
        stats.add(static_cast<double>(crossing_count(random_matching(n, rng))));
    const double mean = static_cast<double>(n) * n / 6.0;
    CHECK(std::fabs(stats.mean - mean) < 3.0 * std::pow(n, 1.5));
}

TEST_CASE("sample_exact on singleton supports") {
    SamplerConfig cfg;
    for (const auto& d : sample_exact(2, 1, 5, cfg).diagrams)
        CHECK(d == ChordDiagram::from_pairs({{1, 3}, {2, 4}}));
    for (const auto& d : sample_exact(3, 3, 5, cfg).diagrams)
        CHECK(d == ChordDiagram::from_pairs({{1, 4}, {2, 5}, {3, 6}}));
}

TEST_CASE("sample_exact respects m and the seed") {
    SamplerConfig cfg;
    cfg.seed = 42;
    SampleBatch a = sample_exact(10, 9, 50, cfg);
    SampleBatch b = sample_exact(10, 9, 50, cfg);
    for (const auto& d : a.diagrams) CHECK(crossing_count(d) == 9);
    REQUIRE(a.diagrams.size() == b.diagrams.size());
    for (size_t i = 0; i < a.diagrams.size(); ++i) CHECK(a.diagrams[i] == b.diagrams[i]);
    cfg.seed = 43;
    SampleBatch c = sample_exact(10, 9, 50, cfg);
    bool any_diff = false;
    for (size_t i = 0; i < a.diagrams.size(); ++i)
        if (!(a.diagrams[i] == c.diagrams[i])) any_diff = true;
    CHECK(any_diff);
}

TEST_CASE("sample_exact empty support") {
    SamplerConfig cfg;
    CHECK_THROWS_AS(sample_exact(3, 4, 1, cfg), std::domain_error);
}

TEST_CASE("scaled-float mode agrees with exact mode in distribution") {
    SamplerConfig cfg;
    cfg.seed = 5;
    const int n = 8, draws = 4000;
    const long long m = 6;
    CountTable exact_table(n, m, CountMode::exact);
    CountTable scaled_table(n, m, CountMode::scaled);
    CHECK(exact_table.log_total() == doctest::Approx(scaled_table.log_total()).epsilon(1e-9));
    std::map<std::string, long long> fa, fb;
    for (const auto& d : sample_exact(exact_table, draws, cfg).diagrams)
        fa[d.canonical_key()]++;
    for (const auto& d : sample_exact(scaled_table, draws, cfg).diagrams)
        fb[d.canonical_key()]++;
    std::vector<long long> va, vb;
    for (const auto& [key, count] : fa) {
        va.push_back(count);
        vb.push_back(fb[key]);
    }
    CHECK(chi_square_two_sample_pvalue(va, vb) > 1e-3);
}

TEST_CASE("sample_rejection") {
    SamplerConfig cfg;
    for (const auto& d : sample_rejection(2, 1, 3, cfg).diagrams)
        CHECK(d == ChordDiagram::from_pairs({{1, 3}, {2, 4}}));

    SampleBatch b = sample_rejection(6, 6, 1000, cfg);
    for (const auto& d : b.diagrams) CHECK(crossing_count(d) == 6);
    const double expected =
        brute_force_row(6).counts[6].get_d() / total_diagrams(6).get_d();
    CHECK(std::fabs(b.acceptance_rate - expected) < 0.3 * expected);
}

TEST_CASE("mcmc retains only diagrams with m crossings") {
    SamplerConfig cfg;
    cfg.seed = 3;
    SampleBatch b = sample_mcmc(8, 5, 200, cfg);
    for (const auto& d : b.diagrams) {
        CHECK(d.chords() == 8);
        CHECK(crossing_count(d) == 5);
    }
    CHECK(b.tilt_used > 0.0);
}

TEST_CASE("transposition delta matches recount") {
    CounterRng rng(17);
    for (int rep = 0; rep < 300; ++rep) {
        ChordDiagram d = random_matching(12, rng);
        std::vector<int> partner = d.partner_array();
        int a = static_cast<int>(rng.uniform_below(24));
        int b = static_cast<int>(rng.uniform_below(24));
        if (a == b || partner[static_cast<size_t>(a)] == b) continue;
        long long delta = transposition_crossing_delta(partner, a, b);
        int pa = partner[static_cast<size_t>(a)], pb = partner[static_cast<size_t>(b)];
        std::vector<int> swapped = partner;
        swapped[static_cast<size_t>(a)] = pb;
        swapped[static_cast<size_t>(pb)] = a;
        swapped[static_cast<size_t>(b)] = pa;
        swapped[static_cast<size_t>(pa)] = b;
        CHECK(crossing_count(ChordDiagram::from_partner(swapped)) -
                  crossing_count(d) ==
              delta);
    }
}

TEST_CASE("tilted chain satisfies detailed balance on the 15-state space") {
    // explicit transition matrix for n = 3 under tilt t: proposal picks an
    // ordered point pair uniformly from 6*6; stationary vector ~ t^crossings
    const double tilt = 1.7;
    std::vector<ChordDiagram> states;
    for_each_matching(3, [&](const ChordDiagram& d) { states.push_back(d); });
    REQUIRE(states.size() == 15);
    std::map<std::string, size_t> index;
    for (size_t i = 0; i < states.size(); ++i) index[states[i].canonical_key()] = i;

    std::vector<std::vector<double>> P(15, std::vector<double>(15, 0.0));
    for (size_t i = 0; i < states.size(); ++i) {
        const std::vector<int>& partner = states[i].partner_array();
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b) {
                if (a == b || partner[static_cast<size_t>(a)] == b) {
                    P[i][i] += 1.0 / 36.0;
                    continue;
                }
                long long delta = transposition_crossing_delta(partner, a, b);
                double acc = std::min(1.0, std::pow(tilt, static_cast<double>(delta)));
                std::vector<int> next = partner;
                int pa = next[static_cast<size_t>(a)], pb = next[static_cast<size_t>(b)];
                next[static_cast<size_t>(a)] = pb;
                next[static_cast<size_t>(pb)] = a;
                next[static_cast<size_t>(b)] = pa;
                next[static_cast<size_t>(pa)] = b;
                size_t j = index.at(ChordDiagram::from_partner(next).canonical_key());
                P[i][j] += acc / 36.0;
                P[i][i] += (1.0 - acc) / 36.0;
            }
    }
    std::vector<double> pi(15);
    double z = 0.0;
    for (size_t i = 0; i < states.size(); ++i) {
        pi[i] = std::pow(tilt, static_cast<double>(crossing_count(states[i])));
        z += pi[i];
    }
    for (auto& v : pi) v /= z;
    for (size_t i = 0; i < 15; ++i) {
        double row_sum = 0.0;
        for (size_t j = 0; j < 15; ++j) {
            row_sum += P[i][j];
            CHECK(pi[i] * P[i][j] == doctest::Approx(pi[j] * P[j][i]).epsilon(1e-12));
        }
        CHECK(row_sum == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("jsonl serialization carries metadata") {
    SamplerConfig cfg;
    SampleBatch b = sample_exact(4, 2, 2, cfg);
    std::string text = batch_to_jsonl(b);
    CHECK(text.find("\"method\":\"exact\"") != std::string::npos);
    CHECK(std::count(text.begin(), text.end(), '\n') == 2);
}
