#include "chords/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace chords {
namespace {

bool chords_cross(int a1, int b1, int a2, int b2) {
    if (a1 > a2) {
        std::swap(a1, a2);
        std::swap(b1, b2);
    }
    return a2 < b1 && b1 < b2;
}

// crossings of chord (x, y) with all chords not touching the excluded points
long long chord_crossings_excluding(const std::vector<int>& partner, int x, int y,
                                    const std::vector<int>& excluded) {
    if (x > y) std::swap(x, y);
    long long count = 0;
    const int n2 = static_cast<int>(partner.size());
    for (int p = 0; p < n2; ++p) {
        const int q = partner[static_cast<size_t>(p)];
        if (q < p) continue;
        if (std::find(excluded.begin(), excluded.end(), p) != excluded.end()) continue;
        if (chords_cross(x, y, p, q)) ++count;
    }
    return count;
}

}  // namespace

ChordDiagram random_matching(int n, CounterRng& rng) {
    if (n < 1) throw std::domain_error("random_matching: n < 1");
    const int n2 = 2 * n;
    std::vector<int> points(static_cast<size_t>(n2));
    for (int i = 0; i < n2; ++i) points[static_cast<size_t>(i)] = i;
    // Fisher-Yates shuffle, then pair adjacent entries: uniform over matchings
    for (int i = n2 - 1; i > 0; --i) {
        uint64_t j = rng.uniform_below(static_cast<uint64_t>(i) + 1);
        std::swap(points[static_cast<size_t>(i)], points[j]);
    }
    std::vector<int> partner(static_cast<size_t>(n2), -1);
    for (int i = 0; i < n2; i += 2) {
        int a = points[static_cast<size_t>(i)];
        int b = points[static_cast<size_t>(i + 1)];
        partner[static_cast<size_t>(a)] = b;
        partner[static_cast<size_t>(b)] = a;
    }
    return ChordDiagram::from_partner(std::move(partner));
}

long long transposition_crossing_delta(const std::vector<int>& partner, int a, int b) {
    const int pa = partner[static_cast<size_t>(a)];
    const int pb = partner[static_cast<size_t>(b)];
    if (pa == b) return 0;  // same chord: swap is the identity
    const std::vector<int> excluded = {std::min(a, pa), std::min(b, pb)};
    long long before = chord_crossings_excluding(partner, a, pa, excluded) +
                       chord_crossings_excluding(partner, b, pb, excluded) +
                       (chords_cross(std::min(a, pa), std::max(a, pa), std::min(b, pb),
                                     std::max(b, pb))
                            ? 1
                            : 0);
    long long after = chord_crossings_excluding(partner, a, pb, excluded) +
                      chord_crossings_excluding(partner, b, pa, excluded) +
                      (chords_cross(std::min(a, pb), std::max(a, pb), std::min(b, pa),
                                    std::max(b, pa))
                           ? 1
                           : 0);
    return after - before;
}

SampleBatch sample_exact(const CountTable& table, int count, const SamplerConfig& config) {
    SampleBatch batch;
    batch.n = table.n();
    batch.m = table.m();
    batch.method = "exact";
    batch.seed = config.seed;
    auto pairs = table.sample_pairs(count, config.seed, 1);
    batch.diagrams.reserve(pairs.size());
    for (const auto& p : pairs) {
        ChordDiagram d = decode(p);
        if (crossing_count(d) != table.m())
            throw std::logic_error("sample_exact: decoded diagram has wrong crossing count");
        batch.diagrams.push_back(std::move(d));
    }
    batch.acceptance_rate = 1.0;
    return batch;
}

SampleBatch sample_exact(int n, long long m, int count, const SamplerConfig& config) {
    const CountMode mode = n <= kExactModeMaxChords ? CountMode::exact : CountMode::scaled;
    CountTable table(n, m, mode, config.checkpoint_interval);
    return sample_exact(table, count, config);
}

SampleBatch sample_rejection(int n, long long m, int count, const SamplerConfig& config) {
    SampleBatch batch;
    batch.n = n;
    batch.m = m;
    batch.method = "rejection";
    batch.seed = config.seed;
    long long attempts = 0, accepted = 0;
    for (int i = 0; i < count; ++i) {
        CounterRng rng(config.seed, 1 + static_cast<uint64_t>(i));
        long long local = 0;
        while (true) {
            ++attempts;
            if (++local > config.rejection_attempt_cap)
                throw std::runtime_error(
                    "sample_rejection: acceptance below 1e-6 at (n=" + std::to_string(n) +
                    ", m=" + std::to_string(m) + "); use the exact or MCMC sampler");
            ChordDiagram d = random_matching(n, rng);
            if (crossing_count(d) == m) {
                batch.diagrams.push_back(std::move(d));
                ++accepted;
                break;
            }
        }
    }
    batch.acceptance_rate = attempts > 0 ? static_cast<double>(accepted) / static_cast<double>(attempts) : 0.0;
    batch.chain_length = attempts;
    return batch;
}

SampleBatch sample_mcmc(int n, long long m, int count, const SamplerConfig& config) {
    if (n < 2) throw std::domain_error("sample_mcmc: n < 2");
    SampleBatch batch;
    batch.n = n;
    batch.m = m;
    batch.method = "mcmc";
    batch.seed = config.seed;

    const int n2 = 2 * n;
    const long long thin = config.mcmc_thin > 0 ? config.mcmc_thin : 2LL * n;
    CounterRng rng(config.seed, 0);
    std::vector<int> partner = random_matching(n, rng).partner_array();
    long long cur = crossing_count(ChordDiagram::from_partner(partner));

    const bool auto_tilt = config.tilt <= 0.0;
    // auto mode starts from tilt = q = m/(m+n), the crossing density the
    // counting asymptotics attach to (n, m), and fine-tunes from there
    double log_tilt = auto_tilt ? std::log(static_cast<double>(std::max<long long>(m, 1)) /
                                           static_cast<double>(m + n))
                                : std::log(config.tilt);

    long long steps = 0;
    long long since_retain = thin;  // allow an immediate first retain
    long long hits = 0;

    // windowed tilt tuning: every 2n steps move log tilt by the window's
    // mean error over its variance (the local sensitivity of E[crossings]
    // to log tilt), clamped per update
    const long long window = 2LL * n;
    double win_sum = 0.0, win_sumsq = 0.0;
    long long win_count = 0, updates = 0;

    auto step_chain = [&](bool tuning) {
        ++steps;
        int a = static_cast<int>(rng.uniform_below(static_cast<uint64_t>(n2)));
        int b = static_cast<int>(rng.uniform_below(static_cast<uint64_t>(n2)));
        if (a != b) {
            long long delta = transposition_crossing_delta(partner, a, b);
            double log_ratio = static_cast<double>(delta) * log_tilt;
            bool accept = log_ratio >= 0.0 || rng.uniform() < std::exp(log_ratio);
            if (accept && partner[static_cast<size_t>(a)] != b) {
                int pa = partner[static_cast<size_t>(a)];
                int pb = partner[static_cast<size_t>(b)];
                partner[static_cast<size_t>(a)] = pb;
                partner[static_cast<size_t>(pb)] = a;
                partner[static_cast<size_t>(b)] = pa;
                partner[static_cast<size_t>(pa)] = b;
                cur += delta;
            }
        }
        if (tuning && auto_tilt) {
            if (cur > 2 * m + 10) {
                // still in transit from the initial matching; tuning on these
                // window means would wreck the step-size schedule
                win_sum = win_sumsq = 0.0;
                win_count = 0;
                return;
            }
            win_sum += static_cast<double>(cur);
            win_sumsq += static_cast<double>(cur) * static_cast<double>(cur);
            if (++win_count == window) {
                double mean = win_sum / static_cast<double>(window);
                double var =
                    std::max(1.0, win_sumsq / static_cast<double>(window) - mean * mean);
                double gamma = 1.0 / (1.0 + static_cast<double>(updates) / 20.0);
                log_tilt += std::clamp(
                    gamma * (static_cast<double>(m) - mean) / var, -0.05, 0.05);
                ++updates;
                win_sum = win_sumsq = 0.0;
                win_count = 0;
            }
        }
    };

    const long long burn_steps = std::max(config.mcmc_burn_in, 300LL * n);
    for (long long t = 0; t < burn_steps; ++t) step_chain(true);

    long long production_steps = 0;
    while (static_cast<int>(batch.diagrams.size()) < count) {
        if (production_steps > config.mcmc_step_budget)
            throw std::runtime_error(
                "sample_mcmc: step budget exhausted with " +
                std::to_string(batch.diagrams.size()) + "/" + std::to_string(count) +
                " draws (tilt=" + std::to_string(std::exp(log_tilt)) +
                ", current crossings=" + std::to_string(cur) + ")");
        step_chain(false);
        ++production_steps;
        ++since_retain;
        if (cur == m) ++hits;
        if (cur == m && since_retain >= thin) {
            batch.diagrams.push_back(ChordDiagram::from_partner(partner));
            since_retain = 0;
        }
    }

    batch.chain_length = production_steps;
    batch.acceptance_rate =
        production_steps > 0 ? static_cast<double>(hits) / static_cast<double>(production_steps) : 0.0;
    batch.tilt_used = std::exp(log_tilt);
    return batch;
}

std::string batch_to_jsonl(const SampleBatch& batch) {
    std::ostringstream os;
    for (size_t i = 0; i < batch.diagrams.size(); ++i) {
        nlohmann::json j;
        j["n"] = batch.n;
        j["m"] = batch.m;
        j["method"] = batch.method;
        j["seed"] = batch.seed;
        j["replicate"] = i;
        nlohmann::json pairs = nlohmann::json::array();
        for (const auto& [a, b] : batch.diagrams[i].chord_list()) pairs.push_back({a, b});
        j["pairs"] = std::move(pairs);
        os << j.dump() << '\n';
    }
    return os.str();
}

}  // namespace chords
