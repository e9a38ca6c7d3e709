#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "vqcopt/hamiltonians.hpp"
#include "vqcopt/optimizers.hpp"

namespace vqcopt {

inline std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

struct ProblemSpec {
    enum class Kind { Heisenberg1D, Heisenberg2D, H2, RandomState };

    Kind kind = Kind::Heisenberg1D;
    int n = 0; // Heisenberg1D chain length / RandomState width
    int rows = 0, cols = 0;
    double coupling = 1.0;
    double field = 1.0;
};

inline int problem_qubits(const ProblemSpec& p) {
    switch (p.kind) {
    case ProblemSpec::Kind::Heisenberg1D:
    case ProblemSpec::Kind::RandomState:
        return p.n;
    case ProblemSpec::Kind::Heisenberg2D:
        return p.rows * p.cols;
    case ProblemSpec::Kind::H2:
        return 4;
    }
    return 0;
}

inline std::string problem_label(const ProblemSpec& p) {
    switch (p.kind) {
    case ProblemSpec::Kind::Heisenberg1D:
        return "heisenberg1d_n" + std::to_string(p.n);
    case ProblemSpec::Kind::Heisenberg2D:
        return "heisenberg2d_" + std::to_string(p.rows) + "x" + std::to_string(p.cols);
    case ProblemSpec::Kind::H2:
        return "h2";
    case ProblemSpec::Kind::RandomState:
        return "random_state_n" + std::to_string(p.n);
    }
    return "unknown";
}

// Fixed observable of a problem; random-state targets are drawn per
// trial instead (see run_experiment).
inline Observable build_problem_observable(const ProblemSpec& p) {
    switch (p.kind) {
    case ProblemSpec::Kind::Heisenberg1D:
        return heisenberg_1d(p.n, p.coupling, p.field);
    case ProblemSpec::Kind::Heisenberg2D:
        return heisenberg_2d(p.rows, p.cols, p.coupling, p.field);
    case ProblemSpec::Kind::H2:
        return h2_hamiltonian();
    case ProblemSpec::Kind::RandomState:
        throw std::invalid_argument("random_state targets are drawn per trial");
    }
    throw std::invalid_argument("unknown problem kind");
}

struct ExperimentConfig {
    ProblemSpec problem;
    int layers = 1;
    TrialConfig trial;
    int trials = 1;
    std::uint64_t base_seed = 1;
    std::string label; // output file stem; derived from the config if empty
};

inline std::string config_label(const ExperimentConfig& cfg) {
    if (!cfg.label.empty()) {
        return cfg.label;
    }
    std::string label = problem_label(cfg.problem) + "_" + algorithm_name(cfg.trial.algorithm);
    if (cfg.trial.algorithm == Algorithm::GateHybrid) {
        label += "_p" + format_double(cfg.trial.gate_mix_p);
    } else if (cfg.trial.algorithm == Algorithm::IterHybridFqs ||
               cfg.trial.algorithm == Algorithm::IterHybridRotosolveHaar) {
        label += "_N" + std::to_string(cfg.trial.every_n);
    }
    if (cfg.trial.shots > 0) {
        label += "_shots" + std::to_string(cfg.trial.shots);
    }
    return label;
}

struct ExperimentResult {
    ExperimentConfig config;
    std::vector<TrialTrace> traces;
};

namespace detail {

// Decorrelates the per-trial target stream from the per-trial
// optimization stream.
inline std::uint64_t target_stream_seed(std::uint64_t trial_seed) {
    return trial_seed ^ 0x9e3779b97f4a7c15ULL;
}

} // namespace detail

inline TrialTrace run_experiment_trial(const ExperimentConfig& cfg, int trial_index) {
    const std::uint64_t seed = cfg.base_seed + static_cast<std::uint64_t>(trial_index);
    TrialConfig trial = cfg.trial;
    const int n = problem_qubits(cfg.problem);
    if (cfg.problem.kind == ProblemSpec::Kind::RandomState) {
        trial.record_trace_distance = true;
        Rng target_rng(detail::target_stream_seed(seed));
        const Observable obs = projector_cost(random_state(n, target_rng));
        return run_trial(n, cfg.layers, obs, trial, seed);
    }
    const Observable obs = build_problem_observable(cfg.problem);
    return run_trial(n, cfg.layers, obs, trial, seed);
}

// Runs the configured number of independent trials (seeds base_seed,
// base_seed + 1, ...). Trials are independent by construction, so a
// worker pool may execute them concurrently; results are ordered by
// trial index regardless.
inline ExperimentResult run_experiment_in_memory(const ExperimentConfig& cfg,
                                                 int parallel = 1) {
    if (cfg.trials < 1) {
        throw std::invalid_argument("experiment: trial count must be >= 1");
    }
    ExperimentResult result;
    result.config = cfg;
    result.traces.resize(static_cast<std::size_t>(cfg.trials));
    if (parallel <= 1 || cfg.trials == 1) {
        for (int t = 0; t < cfg.trials; ++t) {
            result.traces[static_cast<std::size_t>(t)] = run_experiment_trial(cfg, t);
        }
        return result;
    }
    std::atomic<int> next{0};
    const int workers = std::min(parallel, cfg.trials);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                const int t = next.fetch_add(1);
                if (t >= cfg.trials) {
                    return;
                }
                try {
                    result.traces[static_cast<std::size_t>(t)] = run_experiment_trial(cfg, t);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) {
                        error = std::current_exception();
                    }
                    next.store(cfg.trials);
                    return;
                }
            }
        });
    }
    for (std::thread& th : pool) {
        th.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return result;
}

inline void write_traces_csv(const std::filesystem::path& path,
                             const std::vector<TrialTrace>& traces) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open for writing: " + path.string());
    }
    out << "trial,algorithm,hyperparam,evals_used,cost\n";
    for (std::size_t t = 0; t < traces.size(); ++t) {
        const TrialTrace& trace = traces[t];
        const std::string hyper =
            trace.hyperparam ? format_double(*trace.hyperparam) : std::string{};
        for (const TrialRecord& r : trace.records) {
            out << t << ',' << trace.algorithm << ',' << hyper << ',' << r.evals_used << ','
                << format_double(r.cost) << '\n';
        }
    }
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

// Step interpolation: the cost recorded at the last gate optimization at
// or before the requested evaluation count.
inline double trace_value_at(const TrialTrace& trace, long evals) {
    double value = trace.records.front().cost;
    for (const TrialRecord& r : trace.records) {
        if (r.evals_used > evals) {
            break;
        }
        value = r.cost;
    }
    return value;
}

inline nlohmann::json problem_to_json(const ProblemSpec& p) {
    nlohmann::json j;
    switch (p.kind) {
    case ProblemSpec::Kind::Heisenberg1D:
        j["kind"] = "heisenberg1d";
        j["n"] = p.n;
        break;
    case ProblemSpec::Kind::Heisenberg2D:
        j["kind"] = "heisenberg2d";
        j["rows"] = p.rows;
        j["cols"] = p.cols;
        break;
    case ProblemSpec::Kind::H2:
        j["kind"] = "h2";
        break;
    case ProblemSpec::Kind::RandomState:
        j["kind"] = "random_state";
        j["n"] = p.n;
        break;
    }
    if (p.kind == ProblemSpec::Kind::Heisenberg1D || p.kind == ProblemSpec::Kind::Heisenberg2D) {
        j["coupling"] = p.coupling;
        j["field"] = p.field;
    }
    return j;
}

inline nlohmann::json config_to_json(const ExperimentConfig& cfg) {
    nlohmann::json j;
    j["problem"] = problem_to_json(cfg.problem);
    j["layers"] = cfg.layers;
    j["algorithm"] = algorithm_name(cfg.trial.algorithm);
    if (cfg.trial.algorithm == Algorithm::GateHybrid) {
        j["p"] = cfg.trial.gate_mix_p;
    }
    if (cfg.trial.algorithm == Algorithm::IterHybridFqs ||
        cfg.trial.algorithm == Algorithm::IterHybridRotosolveHaar) {
        j["N"] = cfg.trial.every_n;
    }
    j["trials"] = cfg.trials;
    if (cfg.trial.shots > 0) {
        j["shots"] = cfg.trial.shots;
    } else {
        j["shots"] = "exact";
    }
    j["base_seed"] = cfg.base_seed;
    j["rotosolve_iterations"] = cfg.trial.rotosolve_iterations;
    j["label"] = config_label(cfg);
    return j;
}

namespace detail {

template <typename T>
T require_field(const nlohmann::json& j, const std::string& key, const std::string& context) {
    if (!j.contains(key)) {
        throw std::invalid_argument("config: missing field '" + context + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw std::invalid_argument("config: field '" + context + key + "' has the wrong type");
    }
}

} // namespace detail

inline Algorithm algorithm_from_name(const std::string& name) {
    static const std::map<std::string, Algorithm> table = {
        {"adam", Algorithm::Adam},
        {"rotosolve", Algorithm::Rotosolve},
        {"rotosolve_haar", Algorithm::RotosolveHaar},
        {"fraxis", Algorithm::Fraxis},
        {"fqs", Algorithm::Fqs},
        {"gate_hybrid", Algorithm::GateHybrid},
        {"iter_hybrid_fqs", Algorithm::IterHybridFqs},
        {"iter_hybrid_rotosolve_haar", Algorithm::IterHybridRotosolveHaar},
    };
    const auto it = table.find(name);
    if (it == table.end()) {
        throw std::invalid_argument("config: unknown algorithm '" + name + "'");
    }
    return it->second;
}

inline ExperimentConfig config_from_json(const nlohmann::json& j) {
    ExperimentConfig cfg;
    const auto problem = detail::require_field<nlohmann::json>(j, "problem", "");
    const auto kind = detail::require_field<std::string>(problem, "kind", "problem.");
    if (kind == "heisenberg1d") {
        cfg.problem.kind = ProblemSpec::Kind::Heisenberg1D;
        cfg.problem.n = detail::require_field<int>(problem, "n", "problem.");
    } else if (kind == "heisenberg2d") {
        cfg.problem.kind = ProblemSpec::Kind::Heisenberg2D;
        cfg.problem.rows = detail::require_field<int>(problem, "rows", "problem.");
        cfg.problem.cols = detail::require_field<int>(problem, "cols", "problem.");
    } else if (kind == "h2") {
        cfg.problem.kind = ProblemSpec::Kind::H2;
    } else if (kind == "random_state") {
        cfg.problem.kind = ProblemSpec::Kind::RandomState;
        cfg.problem.n = detail::require_field<int>(problem, "n", "problem.");
    } else {
        throw std::invalid_argument("config: unknown problem kind '" + kind + "'");
    }
    cfg.problem.coupling = problem.value("coupling", 1.0);
    cfg.problem.field = problem.value("field", 1.0);

    cfg.layers = detail::require_field<int>(j, "layers", "");
    if (cfg.layers < 1) {
        throw std::invalid_argument("config: field 'layers' must be >= 1");
    }
    cfg.trial.algorithm = algorithm_from_name(detail::require_field<std::string>(j, "algorithm", ""));
    if (cfg.trial.algorithm == Algorithm::GateHybrid) {
        cfg.trial.gate_mix_p = detail::require_field<double>(j, "p", "");
        if (cfg.trial.gate_mix_p < 0.0 || cfg.trial.gate_mix_p > 1.0) {
            throw std::invalid_argument("config: field 'p' must be in [0, 1]");
        }
    }
    if (cfg.trial.algorithm == Algorithm::IterHybridFqs ||
        cfg.trial.algorithm == Algorithm::IterHybridRotosolveHaar) {
        cfg.trial.every_n = detail::require_field<int>(j, "N", "");
        if (cfg.trial.every_n < 1) {
            throw std::invalid_argument("config: field 'N' must be >= 1");
        }
    }
    cfg.trials = detail::require_field<int>(j, "trials", "");
    if (cfg.trials < 1) {
        throw std::invalid_argument("config: field 'trials' must be >= 1");
    }
    if (j.contains("shots")) {
        if (j.at("shots").is_string()) {
            if (j.at("shots").get<std::string>() != "exact") {
                throw std::invalid_argument("config: field 'shots' must be a count or \"exact\"");
            }
            cfg.trial.shots = 0;
        } else {
            cfg.trial.shots = detail::require_field<long>(j, "shots", "");
            if (cfg.trial.shots < 0) {
                throw std::invalid_argument("config: field 'shots' must be >= 0");
            }
        }
    }
    cfg.base_seed = detail::require_field<std::uint64_t>(j, "base_seed", "");
    cfg.trial.rotosolve_iterations = j.value("rotosolve_iterations", 50);
    if (cfg.trial.rotosolve_iterations < 1) {
        throw std::invalid_argument("config: field 'rotosolve_iterations' must be >= 1");
    }
    cfg.label = j.value("label", std::string{});
    return cfg;
}

inline nlohmann::json summary_json(const ExperimentResult& result) {
    std::vector<long> grid;
    for (const TrialTrace& t : result.traces) {
        for (const TrialRecord& r : t.records) {
            grid.push_back(r.evals_used);
        }
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    std::vector<double> mean_cost;
    mean_cost.reserve(grid.size());
    for (long g : grid) {
        double total = 0.0;
        for (const TrialTrace& t : result.traces) {
            total += trace_value_at(t, g);
        }
        mean_cost.push_back(total / static_cast<double>(result.traces.size()));
    }

    std::vector<double> finals;
    finals.reserve(result.traces.size());
    for (const TrialTrace& t : result.traces) {
        finals.push_back(t.records.back().cost);
    }
    const double n = static_cast<double>(finals.size());
    const double final_mean =
        std::accumulate(finals.begin(), finals.end(), 0.0) / n;
    double var = 0.0;
    for (double f : finals) {
        var += (f - final_mean) * (f - final_mean);
    }
    const double final_std = std::sqrt(var / n);

    nlohmann::json j;
    j["config"] = config_to_json(result.config);
    j["budget_limit"] = result.traces.front().budget_limit;
    j["grid"] = grid;
    j["mean_cost"] = mean_cost;
    j["final_costs"] = finals;
    j["final_mean"] = final_mean;
    j["final_std"] = final_std;
    return j;
}

// Runs the experiment and writes <label>.csv, <label>.summary.json and
// <label>.config.json into out_dir.
inline ExperimentResult run_experiment(const ExperimentConfig& cfg,
                                       const std::filesystem::path& out_dir,
                                       int parallel = 1) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create output directory: " + out_dir.string());
    }
    ExperimentResult result = run_experiment_in_memory(cfg, parallel);
    const std::string label = config_label(cfg);
    write_traces_csv(out_dir / (label + ".csv"), result.traces);

    const auto write_json = [&](const std::string& name, const nlohmann::json& j) {
        std::ofstream out(out_dir / name);
        if (!out) {
            throw std::runtime_error("cannot open for writing: " + (out_dir / name).string());
        }
        out << j.dump(2) << '\n';
    };
    write_json(label + ".summary.json", summary_json(result));
    write_json(label + ".config.json", config_to_json(cfg));
    return result;
}

// ---------------------------------------------------------------------
// Single-gate robustness study: optimize one gate against X + Y + Z with
// and without shot noise from identical starting parameters and record
// the fidelity between the two resulting gate unitaries.

struct GateFidelitySample {
    std::string algorithm;
    long shots = 0;
    int trial = 0;
    double fidelity = 0.0;
};

inline double gate_overlap_fidelity(const Mat2& a, const Mat2& b) {
    return std::norm((a.adjoint() * b).trace()) / 4.0;
}

inline std::vector<GateFidelitySample> gate_fidelity_study(const std::vector<long>& shot_counts,
                                                           int trials,
                                                           std::uint64_t base_seed) {
    if (trials < 1) {
        throw std::invalid_argument("gate_fidelity_study: trial count must be >= 1");
    }
    const Observable obs = Observable::pauli_sum({{1.0, "X"}, {1.0, "Y"}, {1.0, "Z"}});

    struct StudyAlgo {
        std::string name;
        Algorithm algorithm;
    };
    static const StudyAlgo algos[3] = {{"rotosolve", Algorithm::Rotosolve},
                                       {"fraxis", Algorithm::Fraxis},
                                       {"fqs", Algorithm::Fqs}};

    std::vector<GateFidelitySample> samples;
    samples.reserve(static_cast<std::size_t>(trials) * 3 * shot_counts.size());
    for (int t = 0; t < trials; ++t) {
        Rng rng(base_seed + static_cast<std::uint64_t>(t));
        for (const StudyAlgo& algo : algos) {
            const GateParam start = initial_slot(algo.algorithm, rng);
            const auto optimize_once = [&](long shots) {
                AnsatzCircuit c = make_ansatz(1, 1);
                c.slots[0] = start;
                CostOracle oracle(obs, shots, &rng);
                switch (algo.algorithm) {
                case Algorithm::Rotosolve:
                    rotosolve_step(c, 0, oracle);
                    break;
                case Algorithm::Fraxis:
                    fraxis_step(c, 0, oracle);
                    break;
                default:
                    fqs_step(c, 0, oracle);
                    break;
                }
                return gate_matrix(c.slots[0]);
            };
            const Mat2 exact_gate = optimize_once(0);
            for (long shots : shot_counts) {
                const Mat2 noisy_gate = optimize_once(shots);
                samples.push_back(
                    {algo.name, shots, t, gate_overlap_fidelity(exact_gate, noisy_gate)});
            }
        }
    }
    return samples;
}

inline void write_fidelity_csv(const std::filesystem::path& path,
                               const std::vector<GateFidelitySample>& samples) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open for writing: " + path.string());
    }
    out << "algorithm,shots,trial,fidelity\n";
    for (const GateFidelitySample& s : samples) {
        out << s.algorithm << ',' << s.shots << ',' << s.trial << ','
            << format_double(s.fidelity) << '\n';
    }
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

// ---------------------------------------------------------------------
// Post-processing of trace CSVs.

struct TraceRow {
    int trial = 0;
    std::string algorithm;
    std::string hyperparam;
    long evals_used = 0;
    double cost = 0.0;
};

inline std::vector<TraceRow> read_traces_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open: " + path.string());
    }
    std::vector<TraceRow> rows;
    std::string line;
    long line_no = 0;
    const auto fail = [&](const std::string& what) {
        throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1) {
            if (line != "trial,algorithm,hyperparam,evals_used,cost") {
                fail("unexpected header");
            }
            continue;
        }
        if (line.empty()) {
            continue;
        }
        std::array<std::string, 5> fields;
        std::size_t start = 0;
        for (int f = 0; f < 5; ++f) {
            const std::size_t comma = line.find(',', start);
            if (f < 4 && comma == std::string::npos) {
                fail("expected 5 comma-separated fields");
            }
            fields[static_cast<std::size_t>(f)] =
                line.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            start = comma + 1;
        }
        TraceRow row;
        try {
            row.trial = std::stoi(fields[0]);
            row.algorithm = fields[1];
            row.hyperparam = fields[2];
            row.evals_used = std::stol(fields[3]);
            row.cost = std::stod(fields[4]);
        } catch (const std::exception&) {
            fail("malformed numeric field");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

struct GroupSummary {
    std::string algorithm;
    std::string hyperparam;
    int trials = 0;
    double final_mean = 0.0;
    double final_std = 0.0;
    std::array<double, 10> decile_means{};
    std::optional<double> relative_error; // (E_ref - mean final) / E_ref
};

// Per-(algorithm, hyperparam) statistics across any number of trace
// files. Deciles are taken on the group's own evaluation budget with
// step interpolation per trial.
inline std::vector<GroupSummary> summarize(const std::vector<std::filesystem::path>& csv_paths,
                                           std::optional<double> reference_energy = {}) {
    struct TrialSeries {
        std::vector<long> evals;
        std::vector<double> cost;
    };
    // key: (algorithm, hyperparam) -> (file, trial) -> series
    std::map<std::pair<std::string, std::string>, std::map<std::pair<int, int>, TrialSeries>>
        groups;
    int file_index = 0;
    for (const auto& path : csv_paths) {
        for (const TraceRow& row : read_traces_csv(path)) {
            auto& series = groups[{row.algorithm, row.hyperparam}][{file_index, row.trial}];
            series.evals.push_back(row.evals_used);
            series.cost.push_back(row.cost);
        }
        ++file_index;
    }

    std::vector<GroupSummary> out;
    for (const auto& [key, trials] : groups) {
        GroupSummary g;
        g.algorithm = key.first;
        g.hyperparam = key.second;
        g.trials = static_cast<int>(trials.size());

        long budget = 0;
        for (const auto& [id, series] : trials) {
            budget = std::max(budget, series.evals.back());
        }

        std::vector<double> finals;
        std::array<double, 10> decile_totals{};
        for (const auto& [id, series] : trials) {
            finals.push_back(series.cost.back());
            for (int d = 0; d < 10; ++d) {
                const long point = budget * (d + 1) / 10;
                double value = series.cost.front();
                for (std::size_t i = 0; i < series.evals.size(); ++i) {
                    if (series.evals[i] > point) {
                        break;
                    }
                    value = series.cost[i];
                }
                decile_totals[static_cast<std::size_t>(d)] += value;
            }
        }
        const double n = static_cast<double>(finals.size());
        g.final_mean = std::accumulate(finals.begin(), finals.end(), 0.0) / n;
        double var = 0.0;
        for (double f : finals) {
            var += (f - g.final_mean) * (f - g.final_mean);
        }
        g.final_std = std::sqrt(var / n);
        for (int d = 0; d < 10; ++d) {
            g.decile_means[static_cast<std::size_t>(d)] = decile_totals[static_cast<std::size_t>(d)] / n;
        }
        if (reference_energy) {
            g.relative_error = (*reference_energy - g.final_mean) / *reference_energy;
        }
        out.push_back(std::move(g));
    }
    return out;
}

inline std::string summary_table(const std::vector<GroupSummary>& groups) {
    std::ostringstream out;
    out << "algorithm,hyperparam,trials,final_mean,final_std";
    for (int d = 1; d <= 10; ++d) {
        out << ",decile_" << d * 10;
    }
    out << ",relative_error\n";
    for (const GroupSummary& g : groups) {
        out << g.algorithm << ',' << g.hyperparam << ',' << g.trials << ','
            << format_double(g.final_mean) << ',' << format_double(g.final_std);
        for (double d : g.decile_means) {
            out << ',' << format_double(d);
        }
        out << ',' << (g.relative_error ? format_double(*g.relative_error) : std::string{})
            << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------
// Bundled experiment presets at the benchmark scales. Trial counts and
// shot counts can be overridden from the CLI for reduced-scale runs.

struct Preset {
    std::string name;
    std::string description;
    std::vector<ExperimentConfig> configs;
};

namespace detail {

inline std::vector<TrialConfig> full_algorithm_panel() {
    std::vector<TrialConfig> panel;
    for (Algorithm a : {Algorithm::Adam, Algorithm::Rotosolve, Algorithm::RotosolveHaar,
                        Algorithm::Fraxis, Algorithm::Fqs}) {
        TrialConfig t;
        t.algorithm = a;
        panel.push_back(t);
    }
    for (double p : {0.2, 0.4, 0.6, 0.8}) {
        TrialConfig t;
        t.algorithm = Algorithm::GateHybrid;
        t.gate_mix_p = p;
        panel.push_back(t);
    }
    for (int n : {2, 3, 4}) {
        TrialConfig t;
        t.algorithm = Algorithm::IterHybridFqs;
        t.every_n = n;
        panel.push_back(t);
    }
    for (int n : {3, 4, 5}) {
        TrialConfig t;
        t.algorithm = Algorithm::IterHybridRotosolveHaar;
        t.every_n = n;
        panel.push_back(t);
    }
    return panel;
}

inline Preset make_panel_preset(std::string name, std::string description, ProblemSpec problem,
                                int layers, int trials, long shots) {
    Preset preset{std::move(name), std::move(description), {}};
    for (TrialConfig t : full_algorithm_panel()) {
        ExperimentConfig cfg;
        cfg.problem = problem;
        cfg.layers = layers;
        cfg.trials = trials;
        cfg.base_seed = 1;
        t.shots = shots;
        cfg.trial = t;
        preset.configs.push_back(std::move(cfg));
    }
    return preset;
}

} // namespace detail

inline const std::vector<Preset>& presets() {
    static const std::vector<Preset> all = [] {
        std::vector<Preset> p;
        p.push_back(detail::make_panel_preset(
            "heisenberg1d-6q", "1D cyclic Heisenberg, 6 qubits, 10 layers, 8192 shots",
            ProblemSpec{ProblemSpec::Kind::Heisenberg1D, 6, 0, 0, 1.0, 1.0}, 10, 20, 8192));
        p.push_back(detail::make_panel_preset(
            "heisenberg1d-10q", "1D cyclic Heisenberg, 10 qubits, 10 layers, 8192 shots",
            ProblemSpec{ProblemSpec::Kind::Heisenberg1D, 10, 0, 0, 1.0, 1.0}, 10, 20, 8192));
        p.push_back(detail::make_panel_preset(
            "heisenberg2d-2x3", "2D open Heisenberg, 2x3 grid, 10 layers, 8192 shots",
            ProblemSpec{ProblemSpec::Kind::Heisenberg2D, 0, 2, 3, 1.0, 1.0}, 10, 20, 8192));
        p.push_back(detail::make_panel_preset(
            "heisenberg2d-3x5", "2D open Heisenberg, 3x5 grid, 10 layers, 8192 shots",
            ProblemSpec{ProblemSpec::Kind::Heisenberg2D, 0, 3, 5, 1.0, 1.0}, 10, 20, 8192));
        p.push_back(detail::make_panel_preset(
            "h2", "Molecular hydrogen, 4 qubits, 5 layers, 8192 shots",
            ProblemSpec{ProblemSpec::Kind::H2, 0, 0, 0, 1.0, 1.0}, 5, 20, 8192));
        p.push_back(detail::make_panel_preset(
            "random-state-4q", "Random-state overlap, 4 qubits, 2 layers, 8192 shots",
            ProblemSpec{ProblemSpec::Kind::RandomState, 4, 0, 0, 1.0, 1.0}, 2, 30, 8192));
        p.push_back(detail::make_panel_preset(
            "random-state-5q", "Random-state overlap, 5 qubits, 5 layers, 8192 shots",
            ProblemSpec{ProblemSpec::Kind::RandomState, 5, 0, 0, 1.0, 1.0}, 5, 30, 8192));

        Preset shots_preset{"heisenberg1d-5q-shots",
                            "1D cyclic Heisenberg, 5 qubits, 5 layers, shot-count sweep",
                            {}};
        for (long shots : {1024L, 2048L, 4096L, 8192L}) {
            std::vector<TrialConfig> panel;
            for (Algorithm a : {Algorithm::Rotosolve, Algorithm::RotosolveHaar, Algorithm::Fraxis,
                                Algorithm::Fqs}) {
                TrialConfig t;
                t.algorithm = a;
                panel.push_back(t);
            }
            {
                TrialConfig t;
                t.algorithm = Algorithm::GateHybrid;
                t.gate_mix_p = 0.5;
                panel.push_back(t);
            }
            {
                TrialConfig t;
                t.algorithm = Algorithm::IterHybridFqs;
                t.every_n = 2;
                panel.push_back(t);
            }
            for (TrialConfig t : panel) {
                ExperimentConfig cfg;
                cfg.problem = ProblemSpec{ProblemSpec::Kind::Heisenberg1D, 5, 0, 0, 1.0, 1.0};
                cfg.layers = 5;
                cfg.trials = 20;
                cfg.base_seed = 1;
                t.shots = shots;
                cfg.trial = t;
                shots_preset.configs.push_back(std::move(cfg));
            }
        }
        p.push_back(std::move(shots_preset));
        return p;
    }();
    return all;
}

inline const Preset& find_preset(const std::string& name) {
    for (const Preset& p : presets()) {
        if (p.name == name) {
            return p;
        }
    }
    throw std::invalid_argument("unknown preset '" + name + "'");
}

} // namespace vqcopt
