#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <vector>

#include "chords/rng.hpp"
#include "chords/sequence_pair.hpp"

namespace chords {

enum class CountMode { exact, scaled };

inline constexpr int kExactModeMaxChords = 150;
inline constexpr int kDefaultCheckpointInterval = 32;

// Layered DP table over (S_{j-1}, crossings used).  Exact mode keeps
// arbitrary-precision entries; scaled mode keeps doubles with a per-layer
// log-scale offset.  Only every checkpoint_interval-th layer is retained;
// intermediate layers are regenerated in blocks during backward sampling.
class CountTable {
public:
    CountTable(int n, long long m, CountMode mode,
               int checkpoint_interval = kDefaultCheckpointInterval);

    int n() const { return n_; }
    long long m() const { return m_; }
    CountMode mode() const { return mode_; }
    int checkpoint_interval() const { return checkpoint_interval_; }

    // T_{n,m} (exact mode only)
    const mpz_class& total() const;
    // natural log of T_{n,m} (either mode; -inf when zero)
    double log_total() const;
    bool empty_support() const;

    // Backward-samples `count` (y, x) pairs.  Sample i draws from substream
    // (seed, stream_base + i); the batch walks each checkpoint block once.
    std::vector<SequencePair> sample_pairs(int count, uint64_t seed,
                                           uint64_t stream_base = 0) const;

private:
    struct ExactLayer {
        std::vector<mpz_class> values;  // (s, c) row-major, width m+1
    };
    struct ScaledLayer {
        std::vector<double> values;
        double log_scale = 0.0;  // true value = stored * exp(log_scale)
    };

    template <typename Num>
    void forward(std::vector<std::vector<Num>>& checkpoints) const;

    int n_;
    long long m_;
    CountMode mode_;
    int checkpoint_interval_;

    // checkpoints_[k] is layer k * checkpoint_interval_ (layer 0 included),
    // plus the final layer n stored separately when not on stride.
    std::vector<ExactLayer> exact_checkpoints_;
    std::vector<ScaledLayer> scaled_checkpoints_;
    std::vector<double> layer_log_scale_;  // scaled mode, per layer 0..n

    mpz_class total_;
    double log_total_ = 0.0;
};

}  // namespace chords
