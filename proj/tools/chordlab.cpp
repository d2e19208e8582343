#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "chords/analytics.hpp"
#include "chords/asymptotics.hpp"
#include "chords/exact.hpp"
#include "chords/harness.hpp"
#include "chords/sampler.hpp"

namespace {

using chords::ExperimentConfig;
using chords::MRule;
using chords::SampleMethod;

struct GlobalOpts {
    uint64_t seed = 1;
    std::string format = "csv";
    std::string out;
    int threads = 1;
};

void write_text(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << text;
}

SampleMethod parse_method(const std::string& s) {
    if (s == "exact") return SampleMethod::exact;
    if (s == "rejection") return SampleMethod::rejection;
    if (s == "mcmc") return SampleMethod::mcmc;
    throw CLI::ValidationError("method", "must be exact, rejection, or mcmc");
}

// m rule spellings: "123" (absolute), "cn:0.5", "cnlogn:0.1"
void parse_m_rule(const std::string& s, ExperimentConfig& cfg) {
    if (s.rfind("cnlogn:", 0) == 0) {
        cfg.m_rule = MRule::n_log_n;
        cfg.m_value = std::stod(s.substr(7));
    } else if (s.rfind("cn:", 0) == 0) {
        cfg.m_rule = MRule::linear_n;
        cfg.m_value = std::stod(s.substr(3));
    } else {
        cfg.m_rule = MRule::absolute;
        cfg.m_value = std::stod(s);
    }
}

ExperimentConfig make_config(const GlobalOpts& g, const std::vector<int>& n_values,
                             const std::string& m_rule, int replicates,
                             const std::string& method, const std::string& name) {
    ExperimentConfig cfg;
    cfg.name = name;
    cfg.n_values = n_values;
    parse_m_rule(m_rule, cfg);
    cfg.replicates = replicates;
    cfg.seed = g.seed;
    cfg.method = parse_method(method);
    cfg.out_path = g.out;
    cfg.format = g.format;
    cfg.threads = g.threads;
    return cfg;
}

std::string read_diagram_text(const std::string& path) {
    std::ostringstream buf;
    if (path.empty() || path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw std::runtime_error("cannot open input file: " + path);
        buf << f.rdbuf();
    }
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chordlab: exact counting, sampling, and analysis of chord diagrams by crossing number"};
    app.set_config("--config", "", "flat key = value config file; values override flags");
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "RNG seed");
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", g.out, "output path (default: stdout)");
    app.add_option("--threads", g.threads, "worker threads")->check(CLI::PositiveNumber);

    // count
    int cn = 0;
    long long cm = 0;
    auto* count_cmd = app.add_subcommand("count", "print T_{n,m}, the number of diagrams with n chords and m crossings");
    count_cmd->add_option("n", cn)->required()->check(CLI::PositiveNumber);
    count_cmd->add_option("m", cm)->required()->check(CLI::NonNegativeNumber);

    // row
    int rn = 0;
    auto* row_cmd = app.add_subcommand("row", "print the full crossing distribution for n chords");
    row_cmd->add_option("n", rn)->required()->check(CLI::PositiveNumber);

    // sample
    int sn = 0, scount = 1;
    long long sm = 0;
    std::string smethod = "exact";
    auto* sample_cmd = app.add_subcommand("sample", "draw uniform diagrams with exactly m crossings (JSONL)");
    sample_cmd->add_option("n", sn)->required()->check(CLI::PositiveNumber);
    sample_cmd->add_option("m", sm)->required()->check(CLI::NonNegativeNumber);
    sample_cmd->add_option("--count", scount, "number of draws")->check(CLI::PositiveNumber);
    sample_cmd->add_option("--method", smethod, "exact | rejection | mcmc");

    // components
    std::string comp_in;
    auto* comp_cmd = app.add_subcommand("components", "component decomposition of a diagram (JSON pairs on stdin or --in)");
    comp_cmd->add_option("--in", comp_in, "input file with a JSON array of [a,b] pairs");

    // validate
    int vmax = 7;
    auto* validate_cmd = app.add_subcommand("validate", "run the oracle-equality suite");
    validate_cmd->add_option("--max-n", vmax, "largest n checked (<= 7)")->check(CLI::Range(1, 7));

    // exp
    auto* exp_cmd = app.add_subcommand("exp", "Monte Carlo experiments");
    exp_cmd->require_subcommand(1);
    std::vector<int> en;
    std::string em = "0", emethod = "exact", ename;
    int ereps = 100;
    for (auto* sub : {exp_cmd->add_subcommand("sweep", "giant-component sweep"),
                      exp_cmd->add_subcommand("cutdist", "cut-count distribution vs the limit law"),
                      exp_cmd->add_subcommand("connectivity", "connectivity of uniform matchings"),
                      exp_cmd->add_subcommand("asym", "exact vs asymptotic log-count table")}) {
        sub->add_option("--n", en, "chord counts")->required();
        sub->add_option("--m", em, "m rule: absolute value, cn:C, or cnlogn:C (natural log, floor)");
        sub->add_option("--replicates", ereps)->check(CLI::PositiveNumber);
        sub->add_option("--method", emethod, "sampler: exact | rejection | mcmc");
        sub->add_option("--name", ename, "experiment name echoed in records");
    }

    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*count_cmd) {
            write_text(chords::touchard_riordan(cn, cm).get_str() + "\n", g.out);
        } else if (*row_cmd) {
            chords::CrossingRow row = chords::crossing_row(rn);
            chords::Table t;
            t.columns = {"n", "m", "count"};
            for (size_t m = 0; m < row.counts.size(); ++m)
                t.rows.push_back({std::to_string(rn), std::to_string(m), row.counts[m].get_str()});
            ExperimentConfig cfg;
            cfg.format = g.format;
            cfg.out_path = g.out;
            chords::write_table(t, cfg, std::cout);
        } else if (*sample_cmd) {
            chords::SamplerConfig sc;
            sc.seed = g.seed;
            sc.method = parse_method(smethod);
            chords::SampleBatch batch;
            switch (sc.method) {
                case SampleMethod::exact: batch = chords::sample_exact(sn, sm, scount, sc); break;
                case SampleMethod::rejection: batch = chords::sample_rejection(sn, sm, scount, sc); break;
                case SampleMethod::mcmc: batch = chords::sample_mcmc(sn, sm, scount, sc); break;
            }
            write_text(chords::batch_to_jsonl(batch), g.out);
        } else if (*comp_cmd) {
            chords::ChordDiagram d = chords::diagram_from_json(read_diagram_text(comp_in));
            chords::ComponentSummary s = chords::components(d);
            nlohmann::json j;
            j["n"] = d.chords();
            j["crossings"] = chords::crossing_count(d);
            j["component_count"] = s.components.size();
            j["isolated"] = s.isolated;
            nlohmann::json comps = nlohmann::json::array();
            for (const auto& c : s.components)
                comps.push_back({{"chords", c.chords}, {"crossings", c.crossings}, {"members", c.members}});
            j["components"] = std::move(comps);
            write_text(j.dump(2) + "\n", g.out);
        } else if (*validate_cmd) {
            std::ostringstream report;
            bool ok = chords::run_validate(vmax, report);
            write_text(report.str(), g.out);
            return ok ? 0 : 1;
        } else if (*exp_cmd) {
            ExperimentConfig cfg = make_config(g, en, em, ereps, emethod, ename);
            chords::Table t;
            if (exp_cmd->got_subcommand("sweep")) t = chords::run_sweep(cfg);
            else if (exp_cmd->got_subcommand("cutdist")) t = chords::run_cutdist(cfg);
            else if (exp_cmd->got_subcommand("connectivity")) t = chords::run_connectivity(cfg);
            else t = chords::run_asym_table(cfg);
            chords::write_table(t, cfg, std::cout);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
