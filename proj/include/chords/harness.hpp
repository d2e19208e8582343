#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "chords/sampler.hpp"

namespace chords {

enum class MRule { absolute, linear_n, n_log_n };

struct ExperimentConfig {
    std::string name;
    std::vector<int> n_values;
    MRule m_rule = MRule::absolute;
    double m_value = 0.0;  // absolute m, or the coefficient c
    int replicates = 100;
    uint64_t seed = 1;
    SampleMethod method = SampleMethod::exact;
    std::string out_path;  // empty: stdout
    std::string format = "csv";
    int threads = 1;
    double cell_budget_seconds = 600.0;

    void validate() const;  // throws std::invalid_argument
};

// floor rounding; n_log_n uses the natural log
long long resolve_m(const ExperimentConfig& cfg, int n);

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

std::string render_csv(const Table& t);
std::string render_jsonl(const Table& t);
// renders per cfg.format and writes to cfg.out_path or the stream
void write_table(const Table& t, const ExperimentConfig& cfg, std::ostream& fallback);

// oracle-equality suite; returns true when every check agrees
bool run_validate(int max_n, std::ostream& report);

Table run_sweep(const ExperimentConfig& cfg);
Table run_cutdist(const ExperimentConfig& cfg);
Table run_connectivity(const ExperimentConfig& cfg);
Table run_asym_table(const ExperimentConfig& cfg);

// deterministic task pool: runs job(i) for i in [0, count) on up to
// `threads` workers; results must be written into pre-sized slots
void parallel_for(int count, int threads, const std::function<void(int)>& job);

}  // namespace chords
