#include "chords/count_table.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <type_traits>

namespace chords {
namespace {

long long max_crossings(int n) { return static_cast<long long>(n) * (n - 1) / 2; }

double log_mpz(const mpz_class& v) {
    if (v <= 0) return -std::numeric_limits<double>::infinity();
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

// uniform mpz in [0, bound), driven by the sample's own substream
mpz_class uniform_mpz_below(CounterRng& rng, const mpz_class& bound) {
    const size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    const size_t words = (bits + 63) / 64;
    while (true) {
        mpz_class x = 0;
        for (size_t w = 0; w < words; ++w) {
            x <<= 64;
            uint64_t r = rng.next();
            mpz_class chunk;
            mpz_import(chunk.get_mpz_t(), 1, 1, sizeof(uint64_t), 0, 0, &r);
            x |= chunk;
        }
        x >>= (64 * words - bits);
        if (x < bound) return x;
    }
}

constexpr double kRescaleThreshold = 1e250;

// Layers are stored as prefix sums over c: P[s][c] = sum_{c' <= c} f_j(s, c').
template <typename Num>
struct LayerOps {
    int n;
    long long m;

    size_t width() const { return static_cast<size_t>(m) + 1; }

    std::vector<Num> to_prefix(const std::vector<Num>& values, int layer) const {
        std::vector<Num> p(values.size());
        for (int s = 0; s <= layer; ++s) {
            Num run = Num(0);
            for (long long c = 0; c <= m; ++c) {
                run += values[static_cast<size_t>(s) * width() + static_cast<size_t>(c)];
                p[static_cast<size_t>(s) * width() + static_cast<size_t>(c)] = run;
            }
        }
        return p;
    }

    std::vector<Num> to_values(const std::vector<Num>& prefix, int layer) const {
        std::vector<Num> v(prefix.size());
        for (int s = 0; s <= layer; ++s)
            for (long long c = 0; c <= m; ++c) v[idx(s, c)] = cell(prefix, width(), s, c);
        return v;
    }

    size_t idx(int s, long long c) const {
        return static_cast<size_t>(s) * width() + static_cast<size_t>(c);
    }

    // prefix-sum layer j from prefix-sum layer j-1
    std::vector<Num> next_prefix(const std::vector<Num>& prev, int j) const {
        std::vector<Num> f(static_cast<size_t>(j + 1) * width(), Num(0));
        // g(s, c) = window of width j - s over c; f_j(s', c) = prefix of g over s
        for (long long c = 0; c <= m; ++c) {
            Num run = Num(0);
            for (int s = 0; s <= j; ++s) {
                if (s < j) {
                    const Num* row = &prev[static_cast<size_t>(s) * width()];
                    Num g = row[c];
                    long long lo = c - (j - s);
                    if (lo >= 0) g -= row[lo];
                    run += g;
                }
                f[idx(s, c)] = run;
            }
        }
        for (int s = 0; s <= j; ++s) {
            Num run = Num(0);
            for (long long c = 0; c <= m; ++c) {
                run += f[idx(s, c)];
                f[idx(s, c)] = run;
            }
        }
        return f;
    }

    static Num cell(const std::vector<Num>& prefix, size_t width, int s, long long c) {
        const Num* row = &prefix[static_cast<size_t>(s) * width];
        Num v = row[c];
        if (c > 0) v -= row[c - 1];
        return v;
    }
};

// Rescales a (double) prefix layer in place when it grows too large; returns
// the log of the applied divisor (0 when untouched).
double maybe_rescale(std::vector<double>& prefix) {
    double mx = 0.0;
    for (double v : prefix) mx = std::max(mx, v);
    if (mx <= kRescaleThreshold) return 0.0;
    for (double& v : prefix) v /= mx;
    return std::log(mx);
}

struct Walker {
    CounterRng rng;
    int s;
    long long c;
    std::vector<int> x;
    std::vector<int> y;
};

template <typename Num>
void sample_blocks(int n, long long m, int interval,
                   const std::vector<const std::vector<Num>*>& checkpoint_values,
                   std::vector<Walker>& walkers) {
    LayerOps<Num> ops{n, m};
    const size_t width = ops.width();

    for (int base = ((n - 1) / interval) * interval; base >= 0; base -= interval) {
        const int top = std::min(base + interval, n);
        std::vector<std::vector<Num>> block;  // prefix layers base..top
        block.reserve(static_cast<size_t>(top - base) + 1);
        block.push_back(ops.to_prefix(*checkpoint_values[static_cast<size_t>(base / interval)], base));
        std::vector<double> local_scale(static_cast<size_t>(top - base) + 1, 0.0);
        for (int j = base + 1; j <= top; ++j) {
            auto prefix = ops.next_prefix(block.back(), j);
            double ls = local_scale[static_cast<size_t>(j - 1 - base)];
            if constexpr (std::is_same_v<Num, double>) ls += maybe_rescale(prefix);
            local_scale[static_cast<size_t>(j - base)] = ls;
            block.push_back(std::move(prefix));
        }

        for (int j = top; j > base; --j) {
            const auto& cur = block[static_cast<size_t>(j - base)];
            const auto& prev = block[static_cast<size_t>(j - 1 - base)];
            // weights below are taken in layer-j units: layer j-1 entries are
            // multiplied by down <= 1 instead of scaling the total up
            [[maybe_unused]] double down = 1.0;
            if constexpr (std::is_same_v<Num, double>) {
                down = std::exp(local_scale[static_cast<size_t>(j - 1 - base)] -
                                local_scale[static_cast<size_t>(j - base)]);
            }
            for (auto& wk : walkers) {
                Num total = LayerOps<Num>::cell(cur, width, wk.s, wk.c);
                Num u;
                if constexpr (std::is_same_v<Num, mpz_class>) {
                    u = uniform_mpz_below(wk.rng, total);
                } else {
                    u = wk.rng.uniform() * total;
                }

                int chosen_s = -1;
                int fallback_s = -1;
                const int s_hi = std::min(wk.s, j - 1);
                for (int sp = s_hi; sp >= 0; --sp) {
                    const Num* row = &prev[static_cast<size_t>(sp) * width];
                    Num w = row[wk.c];
                    long long lo = wk.c - (j - sp);
                    if (lo >= 0) w -= row[lo];
                    if constexpr (std::is_same_v<Num, double>) w *= down;
                    if (!(w > Num(0))) continue;
                    fallback_s = sp;
                    if (u < w) {
                        chosen_s = sp;
                        break;
                    }
                    u -= w;
                }
                if (chosen_s < 0) chosen_s = fallback_s;  // float rounding guard
                if (chosen_s < 0)
                    throw std::runtime_error("CountTable sampling: empty support at layer " +
                                             std::to_string(j));

                const Num* row = &prev[static_cast<size_t>(chosen_s) * width];
                const long long x_max = std::min<long long>(j - 1 - chosen_s, wk.c);
                long long chosen_x = x_max;
                for (long long x = 0; x <= x_max; ++x) {
                    Num f = row[wk.c - x];
                    if (wk.c - x > 0) f -= row[wk.c - x - 1];
                    if constexpr (std::is_same_v<Num, double>) f *= down;
                    if (u < f) {
                        chosen_x = x;
                        break;
                    }
                    u -= f;
                }

                wk.x[static_cast<size_t>(j - 1)] = static_cast<int>(chosen_x);
                wk.y[static_cast<size_t>(j - 1)] = wk.s - chosen_s;
                wk.s = chosen_s;
                wk.c -= chosen_x;
            }
        }
    }
}

}  // namespace

CountTable::CountTable(int n, long long m, CountMode mode, int checkpoint_interval)
    : n_(n), m_(m), mode_(mode), checkpoint_interval_(checkpoint_interval) {
    if (n < 1) throw std::domain_error("CountTable: n < 1");
    if (m < 0 || m > max_crossings(n)) throw std::domain_error("CountTable: m outside [0, n(n-1)/2]");
    if (checkpoint_interval < 1) throw std::domain_error("CountTable: checkpoint_interval < 1");
    if (mode == CountMode::exact && n > kExactModeMaxChords)
        throw std::domain_error("CountTable: exact mode capped at n = " +
                                std::to_string(kExactModeMaxChords) + "; use scaled mode");

    const size_t width = static_cast<size_t>(m_) + 1;
    layer_log_scale_.assign(static_cast<size_t>(n_) + 1, 0.0);

    if (mode_ == CountMode::exact) {
        LayerOps<mpz_class> ops{n_, m_};
        std::vector<mpz_class> layer(width, 0);
        layer[0] = 1;
        exact_checkpoints_.push_back(ExactLayer{layer});
        std::vector<mpz_class> prefix = ops.to_prefix(layer, 0);
        for (int j = 1; j <= n_; ++j) {
            prefix = ops.next_prefix(prefix, j);
            if (j % checkpoint_interval_ == 0 || j == n_)
                exact_checkpoints_.push_back(ExactLayer{ops.to_values(prefix, j)});
        }
        total_ = exact_checkpoints_.back().values[static_cast<size_t>(n_) * width +
                                                  static_cast<size_t>(m_)];
        log_total_ = log_mpz(total_);
    } else {
        LayerOps<double> ops{n_, m_};
        std::vector<double> layer(width, 0.0);
        layer[0] = 1.0;
        scaled_checkpoints_.push_back(ScaledLayer{layer, 0.0});
        std::vector<double> prefix = ops.to_prefix(layer, 0);
        double log_scale = 0.0;
        for (int j = 1; j <= n_; ++j) {
            prefix = ops.next_prefix(prefix, j);
            log_scale += maybe_rescale(prefix);
            layer_log_scale_[static_cast<size_t>(j)] = log_scale;
            if (j % checkpoint_interval_ == 0 || j == n_)
                scaled_checkpoints_.push_back(ScaledLayer{ops.to_values(prefix, j), log_scale});
        }
        double top = scaled_checkpoints_.back()
                         .values[static_cast<size_t>(n_) * width + static_cast<size_t>(m_)];
        log_total_ = top <= 0.0 ? -std::numeric_limits<double>::infinity()
                                : std::log(top) + scaled_checkpoints_.back().log_scale;
    }
}

const mpz_class& CountTable::total() const {
    if (mode_ != CountMode::exact) throw std::logic_error("total(): scaled-mode table");
    return total_;
}

double CountTable::log_total() const { return log_total_; }

bool CountTable::empty_support() const {
    return mode_ == CountMode::exact ? total_ == 0 : !std::isfinite(log_total_);
}

std::vector<SequencePair> CountTable::sample_pairs(int count, uint64_t seed,
                                                   uint64_t stream_base) const {
    if (empty_support()) throw std::domain_error("sample_pairs: T_{n,m} = 0, empty support");

    std::vector<Walker> walkers;
    walkers.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i)
        walkers.push_back(Walker{CounterRng(seed, stream_base + static_cast<uint64_t>(i)), n_, m_,
                                 std::vector<int>(static_cast<size_t>(n_), 0),
                                 std::vector<int>(static_cast<size_t>(n_), 0)});

    if (mode_ == CountMode::exact) {
        std::vector<const std::vector<mpz_class>*> values;
        values.reserve(exact_checkpoints_.size());
        for (const auto& cp : exact_checkpoints_) values.push_back(&cp.values);
        sample_blocks<mpz_class>(n_, m_, checkpoint_interval_, values, walkers);
    } else {
        std::vector<const std::vector<double>*> values;
        values.reserve(scaled_checkpoints_.size());
        for (const auto& cp : scaled_checkpoints_) values.push_back(&cp.values);
        sample_blocks<double>(n_, m_, checkpoint_interval_, values, walkers);
    }

    std::vector<SequencePair> out;
    out.reserve(walkers.size());
    for (auto& wk : walkers) out.push_back(SequencePair{std::move(wk.y), std::move(wk.x)});
    return out;
}

}  // namespace chords
