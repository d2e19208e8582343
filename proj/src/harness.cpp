#include "chords/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "chords/analytics.hpp"
#include "chords/asymptotics.hpp"
#include "chords/exact.hpp"
#include "chords/stats.hpp"

namespace chords {
namespace {

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string fmt(double x) {
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

std::string method_name(SampleMethod m) {
    switch (m) {
        case SampleMethod::exact: return "exact";
        case SampleMethod::rejection: return "rejection";
        case SampleMethod::mcmc: return "mcmc";
    }
    return "?";
}

// Draws `count` diagrams with (n, m) crossings using the configured method.
SampleBatch draw_batch(const ExperimentConfig& cfg, int n, long long m, int count,
                       uint64_t stream) {
    SamplerConfig sc;
    sc.seed = cfg.seed ^ (stream * 0x9E3779B97F4A7C15ULL);
    sc.method = cfg.method;
    switch (cfg.method) {
        case SampleMethod::exact: return sample_exact(n, m, count, sc);
        case SampleMethod::rejection: return sample_rejection(n, m, count, sc);
        case SampleMethod::mcmc: return sample_mcmc(n, m, count, sc);
    }
    throw std::logic_error("draw_batch: bad method");
}

double percentile(std::vector<double> v, double p) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    double idx = p * static_cast<double>(v.size() - 1);
    size_t lo = static_cast<size_t>(idx);
    size_t hi = std::min(lo + 1, v.size() - 1);
    double frac = idx - static_cast<double>(lo);
    return v[lo] * (1.0 - frac) + v[hi] * frac;
}

}  // namespace

void ExperimentConfig::validate() const {
    if (replicates < 1) throw std::invalid_argument("replicates must be >= 1");
    if (n_values.empty()) throw std::invalid_argument("at least one n is required");
    for (int n : n_values)
        if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (m_rule != MRule::absolute && m_value <= 0.0)
        throw std::invalid_argument("coefficient c must be > 0");
    if (m_rule == MRule::absolute && m_value < 0.0)
        throw std::invalid_argument("m must be >= 0");
    if (format != "csv" && format != "json")
        throw std::invalid_argument("format must be csv or json");
    if (threads < 1) throw std::invalid_argument("threads must be >= 1");
}

long long resolve_m(const ExperimentConfig& cfg, int n) {
    switch (cfg.m_rule) {
        case MRule::absolute: return static_cast<long long>(cfg.m_value);
        case MRule::linear_n: return static_cast<long long>(std::floor(cfg.m_value * n));
        case MRule::n_log_n:
            return static_cast<long long>(std::floor(cfg.m_value * n * std::log(static_cast<double>(n))));
    }
    throw std::logic_error("resolve_m: bad rule");
}

std::string render_csv(const Table& t) {
    std::ostringstream os;
    for (size_t i = 0; i < t.columns.size(); ++i)
        os << (i ? "," : "") << csv_quote(t.columns[i]);
    os << "\r\n";
    for (const auto& row : t.rows) {
        for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_quote(row[i]);
        os << "\r\n";
    }
    return os.str();
}

std::string render_jsonl(const Table& t) {
    std::ostringstream os;
    for (const auto& row : t.rows) {
        nlohmann::json j = nlohmann::json::object();
        for (size_t i = 0; i < t.columns.size() && i < row.size(); ++i)
            j[t.columns[i]] = row[i];
        os << j.dump() << '\n';
    }
    return os.str();
}

void write_table(const Table& t, const ExperimentConfig& cfg, std::ostream& fallback) {
    const std::string text = cfg.format == "json" ? render_jsonl(t) : render_csv(t);
    if (cfg.out_path.empty()) {
        fallback << text;
        return;
    }
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + cfg.out_path);
    f << text;
}

void parallel_for(int count, int threads, const std::function<void(int)>& job) {
    threads = std::min(threads, count);
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) job(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            while (true) {
                int i = next.fetch_add(1);
                if (i >= count) break;
                try {
                    job(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

bool run_validate(int max_n, std::ostream& report) {
    bool ok = true;
    auto fail = [&](const std::string& what) {
        report << "FAIL " << what << '\n';
        ok = false;
    };

    max_n = std::min(max_n, 7);
    for (int n = 1; n <= max_n; ++n) {
        CrossingRow brute = brute_force_row(n);
        CrossingRow riordan = crossing_row(n);
        const long long m_max = static_cast<long long>(n) * (n - 1) / 2;
        for (long long m = 0; m <= m_max; ++m) {
            mpz_class dp = dp_count(n, m);
            if (brute.counts[static_cast<size_t>(m)] != riordan.counts[static_cast<size_t>(m)] ||
                riordan.counts[static_cast<size_t>(m)] != dp)
                fail("count mismatch at (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
        }
        if (riordan.sum() != total_diagrams(n))
            fail("row sum != (2n-1)!! at n=" + std::to_string(n));
        if (riordan.counts[0] != catalan(n))
            fail("T_{n,0} != Catalan at n=" + std::to_string(n));
    }

    for (int nu = 1; nu <= std::min(max_n, 6); ++nu) {
        auto brute = brute_force_connected_row(nu);
        for (int mu = nu - 1; mu <= nu && mu < static_cast<int>(brute.size()); ++mu) {
            if (mu < 0) continue;
            if (connected_count_exact(nu, mu) != brute[static_cast<size_t>(mu)])
                fail("connected count mismatch at (nu=" + std::to_string(nu) +
                     ", mu=" + std::to_string(mu) + ")");
        }
    }

    if (!verify_component_identity(std::min(max_n, 6))) fail("component identity");

    if (ok)
        report << "PASS, 3 algorithms agree on " << max_n << " rows\n";
    return ok;
}

Table run_sweep(const ExperimentConfig& cfg) {
    cfg.validate();
    Table t;
    t.columns = {"n", "m", "seed", "method", "replicates", "mean_chord_fraction",
                 "mean_crossing_fraction", "p95_largest_chords", "status"};
    const int cells = static_cast<int>(cfg.n_values.size());
    std::vector<std::vector<std::string>> rows(static_cast<size_t>(cells));
    parallel_for(cells, cfg.threads, [&](int ci) {
        const int n = cfg.n_values[static_cast<size_t>(ci)];
        const long long m = resolve_m(cfg, n);
        std::vector<std::string> row = {std::to_string(n), std::to_string(m),
                                        std::to_string(cfg.seed), method_name(cfg.method),
                                        std::to_string(cfg.replicates)};
        try {
            RunningStats chord_frac, cross_frac;
            std::vector<double> largest;
            if (m == 0) {
                // every component is a single chord; nothing to sample
                for (int r = 0; r < cfg.replicates; ++r) {
                    chord_frac.add(1.0 / n);
                    largest.push_back(1.0);
                }
                cross_frac.add(0.0);
            } else {
                SampleBatch batch = draw_batch(cfg, n, m, cfg.replicates,
                                               static_cast<uint64_t>(ci) + 1);
                for (const auto& d : batch.diagrams) {
                    ComponentSummary s = components(d);
                    GiantStats g = giant_stats(s, m);
                    chord_frac.add(g.chord_fraction);
                    cross_frac.add(g.crossing_fraction);
                    largest.push_back(
                        static_cast<double>(s.components[static_cast<size_t>(s.largest_by_chords)].chords));
                }
            }
            row.push_back(fmt(chord_frac.mean));
            row.push_back(fmt(cross_frac.mean));
            row.push_back(fmt(percentile(largest, 0.95)));
            row.push_back("ok");
        } catch (const std::exception& e) {
            row.resize(5);
            row.insert(row.end(), {"", "", "", std::string("skipped: ") + e.what()});
        }
        rows[static_cast<size_t>(ci)] = std::move(row);
    });
    t.rows = std::move(rows);
    return t;
}

Table run_cutdist(const ExperimentConfig& cfg) {
    cfg.validate();
    Table t;
    t.columns = {"n", "m", "seed", "method", "replicates", "j", "empirical", "theoretical", "tv"};
    const int cells = static_cast<int>(cfg.n_values.size());
    std::vector<std::vector<std::vector<std::string>>> cell_rows(static_cast<size_t>(cells));
    parallel_for(cells, cfg.threads, [&](int ci) {
        const int n = cfg.n_values[static_cast<size_t>(ci)];
        const long long m = resolve_m(cfg, n);
        const double q = static_cast<double>(m) / static_cast<double>(m + n);
        CutLaw law = cut_law(q);
        SampleBatch batch = draw_batch(cfg, n, m, cfg.replicates, static_cast<uint64_t>(ci) + 1);
        EmpiricalDistribution dist;
        for (const auto& d : batch.diagrams) dist.add(cut_stats(d).cut_count);
        const double tv = dist.tv_distance([&](int j) { return law.pmf(j); });
        long long j_max = dist.freq.empty() ? 0 : dist.freq.rbegin()->first;
        auto& out = cell_rows[static_cast<size_t>(ci)];
        for (long long j = 0; j <= j_max; ++j) {
            auto it = dist.freq.find(j);
            double emp = it == dist.freq.end()
                             ? 0.0
                             : static_cast<double>(it->second) / static_cast<double>(dist.samples);
            out.push_back({std::to_string(n), std::to_string(m), std::to_string(cfg.seed),
                           method_name(cfg.method), std::to_string(cfg.replicates),
                           std::to_string(j), fmt(emp), fmt(law.pmf(static_cast<int>(j))),
                           fmt(tv)});
        }
    });
    for (auto& cr : cell_rows)
        for (auto& r : cr) t.rows.push_back(std::move(r));
    return t;
}

Table run_connectivity(const ExperimentConfig& cfg) {
    cfg.validate();
    Table t;
    t.columns = {"n", "m", "seed", "method", "replicates", "connected_fraction",
                 "isolated_mean", "isolated_var"};
    const int cells = static_cast<int>(cfg.n_values.size());
    std::vector<std::vector<std::string>> rows(static_cast<size_t>(cells));
    parallel_for(cells, cfg.threads, [&](int ci) {
        const int n = cfg.n_values[static_cast<size_t>(ci)];
        long long connected = 0;
        RunningStats isolated;
        for (int r = 0; r < cfg.replicates; ++r) {
            CounterRng rng(cfg.seed, static_cast<uint64_t>(ci) * 1000003ULL +
                                         static_cast<uint64_t>(r) + 1);
            ChordDiagram d = random_matching(n, rng);
            ComponentSummary s = components(d);
            if (s.components.size() == 1) ++connected;
            isolated.add(static_cast<double>(s.isolated));
        }
        rows[static_cast<size_t>(ci)] = {
            std::to_string(n), "-1", std::to_string(cfg.seed), "uniform",
            std::to_string(cfg.replicates),
            fmt(static_cast<double>(connected) / cfg.replicates), fmt(isolated.mean),
            fmt(isolated.variance())};
    });
    t.rows = std::move(rows);
    return t;
}

Table run_asym_table(const ExperimentConfig& cfg) {
    cfg.validate();
    Table t;
    t.columns = {"n", "m", "seed", "method", "exact_log", "asymptotic_log", "lower_log",
                 "upper_log", "ratio", "jacobi_residual", "freiman_residual"};
    const int cells = static_cast<int>(cfg.n_values.size());
    std::vector<std::vector<std::string>> rows(static_cast<size_t>(cells));
    parallel_for(cells, cfg.threads, [&](int ci) {
        const int n = cfg.n_values[static_cast<size_t>(ci)];
        const long long m = resolve_m(cfg, n);
        mpz_class exact = touchard_riordan(n, m);
        signed long int exp2;
        double mant = mpz_get_d_2exp(&exp2, exact.get_mpz_t());
        double exact_log = std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
        AsymptoticT asym = asymptotic_T(n, m);
        TBounds b = bounds_T(n, m);
        const double q = static_cast<double>(m) / static_cast<double>(m + n);
        auto [lhs, rhs] = jacobi_sides(q);
        EulerLog el = euler_log(std::max(q, 1e-12));
        rows[static_cast<size_t>(ci)] = {
            std::to_string(n), std::to_string(m), std::to_string(cfg.seed), "analytic",
            fmt(exact_log), fmt(asym.log_value), fmt(b.lower_log), fmt(b.upper_log),
            fmt(exact_log != 0.0 ? asym.log_value / exact_log : 1.0),
            fmt(std::fabs(lhs - rhs)), fmt(std::fabs(el.exact_log - el.freiman_log))};
    });
    t.rows = std::move(rows);
    return t;
}

}  // namespace chords
