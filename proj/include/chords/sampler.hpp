#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "chords/count_table.hpp"
#include "chords/diagram.hpp"
#include "chords/rng.hpp"

namespace chords {

enum class SampleMethod { exact, rejection, mcmc };

struct SamplerConfig {
    uint64_t seed = 1;
    SampleMethod method = SampleMethod::exact;
    long long mcmc_burn_in = 20000;
    long long mcmc_thin = 0;          // 0 = auto (2n)
    double tilt = 0.0;                // <= 0 = auto-tune during burn-in
    long long mcmc_step_budget = 50'000'000;
    long long rejection_attempt_cap = 20'000'000;  // per draw
    int checkpoint_interval = kDefaultCheckpointInterval;
};

struct SampleBatch {
    int n = 0;
    long long m = 0;
    std::string method;
    uint64_t seed = 0;
    std::vector<ChordDiagram> diagrams;
    // diagnostics
    double acceptance_rate = 0.0;  // rejection: accepted/attempts; mcmc: hit rate
    long long chain_length = 0;
    double tilt_used = 0.0;
};

// Exactly uniform perfect matching of [2n].
ChordDiagram random_matching(int n, CounterRng& rng);

// Uniform draws over diagrams with m crossings by backward-sampling the DP
// table; exact-integer mode up to kExactModeMaxChords, scaled-float beyond.
SampleBatch sample_exact(int n, long long m, int count, const SamplerConfig& config);
SampleBatch sample_exact(const CountTable& table, int count, const SamplerConfig& config);

// Uniform draws by filtering random matchings on crossings = m.
SampleBatch sample_rejection(int n, long long m, int count, const SamplerConfig& config);

// Metropolis chain over matchings with stationary weight tilt^crossings;
// retained states have crossings exactly m.
SampleBatch sample_mcmc(int n, long long m, int count, const SamplerConfig& config);

// Crossing-count change if points a and b (0-based) swap partners.  O(n).
long long transposition_crossing_delta(const std::vector<int>& partner, int a, int b);

// JSON-lines serialization (one diagram per line with metadata).
std::string batch_to_jsonl(const SampleBatch& batch);

}  // namespace chords
