#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "vqcopt/experiment.hpp"

using Catch::Approx;
using namespace vqcopt;

namespace {

std::filesystem::path temp_dir(const std::string& tag) {
    const auto dir = std::filesystem::temp_directory_path() / ("vqcopt_test_" + tag);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    REQUIRE(in);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

ExperimentConfig tiny_config(Algorithm algo) {
    ExperimentConfig cfg;
    cfg.problem = ProblemSpec{ProblemSpec::Kind::Heisenberg1D, 3, 0, 0, 1.0, 1.0};
    cfg.layers = 1;
    cfg.trial.algorithm = algo;
    cfg.trial.rotosolve_iterations = 3;
    cfg.trials = 2;
    cfg.base_seed = 11;
    return cfg;
}

} // namespace

TEST_CASE("experiments are reproducible byte for byte") {
    const auto dir = temp_dir("repro");
    const ExperimentConfig cfg = tiny_config(Algorithm::Fqs);

    run_experiment(cfg, dir / "a");
    run_experiment(cfg, dir / "b");
    run_experiment(cfg, dir / "c", 2); // worker pool must not change outputs

    const std::string label = config_label(cfg);
    const std::string csv_a = slurp(dir / "a" / (label + ".csv"));
    REQUIRE(csv_a == slurp(dir / "b" / (label + ".csv")));
    REQUIRE(csv_a == slurp(dir / "c" / (label + ".csv")));
    REQUIRE(csv_a.rfind("trial,algorithm,hyperparam,evals_used,cost\n", 0) == 0);

    REQUIRE(slurp(dir / "a" / (label + ".summary.json")) ==
            slurp(dir / "c" / (label + ".summary.json")));
    std::filesystem::remove_all(dir);
}

TEST_CASE("random-state experiments draw a fresh target per trial") {
    ExperimentConfig cfg;
    cfg.problem = ProblemSpec{ProblemSpec::Kind::RandomState, 3, 0, 0, 1.0, 1.0};
    cfg.layers = 1;
    cfg.trial.algorithm = Algorithm::Fqs;
    cfg.trial.rotosolve_iterations = 3;
    cfg.trials = 3;
    cfg.base_seed = 5;

    const ExperimentResult result = run_experiment_in_memory(cfg);
    REQUIRE(result.traces.size() == 3);
    for (const TrialTrace& t : result.traces) {
        for (const TrialRecord& r : t.records) {
            REQUIRE(r.cost >= 0.0);
            REQUIRE(r.cost <= 1.0);
        }
        for (std::size_t i = 1; i < t.records.size(); ++i) {
            REQUIRE(t.records[i].cost <= t.records[i - 1].cost + 1e-9);
        }
    }
    // Distinct targets: the initial trace distances should differ.
    REQUIRE(result.traces[0].records.front().cost != result.traces[1].records.front().cost);
}

TEST_CASE("budget parity across algorithms") {
    long limit = 0;
    for (Algorithm a : {Algorithm::Adam, Algorithm::Rotosolve, Algorithm::Fraxis, Algorithm::Fqs,
                        Algorithm::GateHybrid}) {
        const ExperimentResult r = run_experiment_in_memory(tiny_config(a));
        if (limit == 0) {
            limit = r.traces.front().budget_limit;
        }
        REQUIRE(r.traces.front().budget_limit == limit);
        for (const TrialTrace& t : r.traces) {
            REQUIRE(t.records.back().evals_used <= limit);
        }
    }
}

TEST_CASE("config JSON round-trip and diagnostics") {
    ExperimentConfig cfg = tiny_config(Algorithm::GateHybrid);
    cfg.trial.gate_mix_p = 0.4;
    cfg.trial.shots = 256;
    const nlohmann::json j = config_to_json(cfg);
    const ExperimentConfig back = config_from_json(j);
    REQUIRE(back.problem.kind == cfg.problem.kind);
    REQUIRE(back.problem.n == cfg.problem.n);
    REQUIRE(back.layers == cfg.layers);
    REQUIRE(back.trial.algorithm == cfg.trial.algorithm);
    REQUIRE(back.trial.gate_mix_p == cfg.trial.gate_mix_p);
    REQUIRE(back.trial.shots == cfg.trial.shots);
    REQUIRE(back.trials == cfg.trials);
    REQUIRE(back.base_seed == cfg.base_seed);

    nlohmann::json missing = j;
    missing.erase("trials");
    REQUIRE_THROWS_WITH(config_from_json(missing),
                        Catch::Matchers::ContainsSubstring("trials"));

    nlohmann::json bad_algo = j;
    bad_algo["algorithm"] = "newton";
    REQUIRE_THROWS_WITH(config_from_json(bad_algo),
                        Catch::Matchers::ContainsSubstring("newton"));

    nlohmann::json bad_p = j;
    bad_p["p"] = 1.7;
    REQUIRE_THROWS_AS(config_from_json(bad_p), std::invalid_argument);

    nlohmann::json exact = j;
    exact["shots"] = "exact";
    REQUIRE(config_from_json(exact).trial.shots == 0);
}

TEST_CASE("summarize computes group statistics") {
    const auto dir = temp_dir("summarize");

    {
        std::ofstream out(dir / "toy.csv");
        out << "trial,algorithm,hyperparam,evals_used,cost\n";
        out << "0,fqs,,0,5\n0,fqs,,10,2\n0,fqs,,20,-1.5\n";
        out << "1,fqs,,0,4\n1,fqs,,10,1\n1,fqs,,20,-0.5\n";
        out << "0,rotosolve,,0,3\n0,rotosolve,,20,3\n";
    }

    const auto groups = summarize({dir / "toy.csv"});
    REQUIRE(groups.size() == 2);

    const GroupSummary& fqs = groups.front();
    REQUIRE(fqs.algorithm == "fqs");
    REQUIRE(fqs.trials == 2);
    REQUIRE(fqs.final_mean == Approx(-1.0)); // (-1.5 + -0.5) / 2
    REQUIRE(fqs.final_std == Approx(0.5));
    REQUIRE(fqs.decile_means.back() == Approx(-1.0));
    // 50% of the budget (10 evals): step interpolation picks (2 + 1)/2.
    REQUIRE(fqs.decile_means[4] == Approx(1.5));

    const GroupSummary& roto = groups.back();
    REQUIRE(roto.trials == 1);
    REQUIRE(roto.final_std == 0.0); // single constant trace

    // Relative error is zero when the mean final cost equals the reference.
    const auto with_ref = summarize({dir / "toy.csv"}, -1.0);
    REQUIRE(with_ref.front().relative_error.has_value());
    REQUIRE(*with_ref.front().relative_error == Approx(0.0).margin(1e-12));

    const std::string table = summary_table(groups);
    REQUIRE(table.find("fqs") != std::string::npos);
    REQUIRE(table.find("rotosolve") != std::string::npos);

    {
        std::ofstream out(dir / "bad.csv");
        out << "trial,algorithm,hyperparam,evals_used,cost\n";
        out << "0,fqs,,not_a_number,1\n";
    }
    REQUIRE_THROWS_WITH(summarize({dir / "bad.csv"}),
                        Catch::Matchers::ContainsSubstring(":2:"));

    {
        std::ofstream out(dir / "badheader.csv");
        out << "algorithm,cost\n";
    }
    REQUIRE_THROWS_WITH(summarize({dir / "badheader.csv"}),
                        Catch::Matchers::ContainsSubstring(":1:"));

    std::filesystem::remove_all(dir);
}

TEST_CASE("gate fidelity study plumbing") {
    // Exact against exact is always fidelity 1.
    const auto exact = gate_fidelity_study({0}, 4, 3);
    REQUIRE(exact.size() == 12);
    for (const GateFidelitySample& s : exact) {
        REQUIRE(s.fidelity == Approx(1.0).margin(1e-9));
    }

    const auto noisy = gate_fidelity_study({64, 512}, 5, 3);
    REQUIRE(noisy.size() == 3 * 2 * 5);
    for (const GateFidelitySample& s : noisy) {
        REQUIRE(s.fidelity >= 0.0);
        REQUIRE(s.fidelity <= 1.0 + 1e-12);
    }

    const auto dir = temp_dir("fidelity");
    write_fidelity_csv(dir / "fid.csv", noisy);
    const std::string text = slurp(dir / "fid.csv");
    REQUIRE(text.rfind("algorithm,shots,trial,fidelity\n", 0) == 0);
    std::filesystem::remove_all(dir);
}

TEST_CASE("presets are wired") {
    REQUIRE(presets().size() == 8);
    const Preset& h2 = find_preset("h2");
    REQUIRE(h2.configs.size() == 15);
    for (const ExperimentConfig& cfg : h2.configs) {
        REQUIRE(cfg.problem.kind == ProblemSpec::Kind::H2);
        REQUIRE(cfg.layers == 5);
        REQUIRE(cfg.trial.shots == 8192);
    }
    const Preset& shots = find_preset("heisenberg1d-5q-shots");
    REQUIRE(shots.configs.size() == 4 * 6);
    REQUIRE_THROWS_AS(find_preset("nope"), std::invalid_argument);
}
