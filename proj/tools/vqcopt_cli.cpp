#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vqcopt/vqcopt.hpp"

namespace {

long parse_shots(const std::string& text) {
    if (text == "exact") {
        return 0;
    }
    std::size_t consumed = 0;
    const long shots = std::stol(text, &consumed);
    if (consumed != text.size() || shots < 0) {
        throw CLI::ValidationError("--shots", "expected a non-negative count or 'exact'");
    }
    return shots;
}

struct RunOverrides {
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    std::optional<std::string> shots;
};

void apply_overrides(vqcopt::ExperimentConfig& cfg, const RunOverrides& o) {
    if (o.seed) {
        cfg.base_seed = *o.seed;
    }
    if (o.trials) {
        cfg.trials = *o.trials;
    }
    if (o.shots) {
        cfg.trial.shots = parse_shots(*o.shots);
    }
}

void run_one(const vqcopt::ExperimentConfig& cfg, const std::filesystem::path& out_dir,
             int parallel) {
    const auto result = vqcopt::run_experiment(cfg, out_dir, parallel);
    const auto summary = vqcopt::summary_json(result);
    std::cout << vqcopt::config_label(cfg) << ": trials=" << cfg.trials
              << " final_mean=" << summary["final_mean"].get<double>()
              << " final_std=" << summary["final_std"].get<double>() << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sequential gradient-free optimizers for variational quantum circuits"};
    app.require_subcommand(1);

    // --- run ---
    auto* run = app.add_subcommand("run", "Run a seeded multi-trial experiment");
    std::string config_path;
    std::string preset_name;
    bool list_presets = false;
    RunOverrides overrides;
    std::string out_dir = "results";
    int parallel = 1;
    run->add_option("--config", config_path, "Experiment config JSON");
    run->add_option("--preset", preset_name, "Bundled benchmark preset name");
    run->add_flag("--list-presets", list_presets, "List bundled presets and exit");
    run->add_option("--seed", overrides.seed, "Override the base seed");
    run->add_option("--trials", overrides.trials, "Override the trial count");
    run->add_option("--shots", overrides.shots, "Override shots per term (count or 'exact')");
    run->add_option("--out", out_dir, "Output directory");
    run->add_option("--parallel", parallel, "Trial worker threads")->check(CLI::PositiveNumber);

    // --- fidelity-study ---
    auto* study = app.add_subcommand(
        "fidelity-study", "Single-gate optimization fidelity under shot noise (X+Y+Z cost)");
    std::vector<long> study_shots = {1024, 4096, 8192};
    int study_trials = 10000;
    std::uint64_t study_seed = 1;
    std::string study_out = "results";
    study->add_option("--shots", study_shots, "Shot counts to compare")->delimiter(',');
    study->add_option("--trials", study_trials, "Trials per algorithm")
        ->check(CLI::PositiveNumber);
    study->add_option("--seed", study_seed, "Base seed");
    study->add_option("--out", study_out, "Output directory");

    // --- summarize ---
    auto* summarize = app.add_subcommand("summarize", "Aggregate trace CSVs into a summary table");
    std::vector<std::string> csv_paths;
    double reference_energy = 0.0;
    bool have_reference = false;
    std::string summary_out;
    summarize->add_option("csv", csv_paths, "Trace CSV files")->required()->expected(-1);
    summarize->add_option("--reference-energy", reference_energy,
                          "Ground energy for relative-error columns")
        ->each([&](const std::string&) { have_reference = true; });
    summarize->add_option("--out", summary_out, "Also write the table to this file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            if (list_presets) {
                for (const auto& p : vqcopt::presets()) {
                    std::cout << p.name << ": " << p.description << " (" << p.configs.size()
                              << " experiment configs)\n";
                }
                return 0;
            }
            if (!config_path.empty() == !preset_name.empty()) {
                std::cerr << "run: exactly one of --config or --preset is required\n";
                return 1;
            }
            if (!config_path.empty()) {
                std::ifstream in(config_path);
                if (!in) {
                    std::cerr << "cannot open config: " << config_path << '\n';
                    return 1;
                }
                nlohmann::json j;
                in >> j;
                vqcopt::ExperimentConfig cfg = vqcopt::config_from_json(j);
                apply_overrides(cfg, overrides);
                run_one(cfg, out_dir, parallel);
            } else {
                const auto& preset = vqcopt::find_preset(preset_name);
                for (vqcopt::ExperimentConfig cfg : preset.configs) {
                    apply_overrides(cfg, overrides);
                    run_one(cfg, out_dir, parallel);
                }
            }
        } else if (study->parsed()) {
            const auto samples =
                vqcopt::gate_fidelity_study(study_shots, study_trials, study_seed);
            std::error_code ec;
            std::filesystem::create_directories(study_out, ec);
            const auto path = std::filesystem::path(study_out) / "gate_fidelity.csv";
            vqcopt::write_fidelity_csv(path, samples);
            std::cout << "wrote " << samples.size() << " samples to " << path.string() << '\n';
        } else if (summarize->parsed()) {
            std::vector<std::filesystem::path> paths(csv_paths.begin(), csv_paths.end());
            const auto groups = vqcopt::summarize(
                paths, have_reference ? std::optional<double>(reference_energy) : std::nullopt);
            const std::string table = vqcopt::summary_table(groups);
            std::cout << table;
            if (!summary_out.empty()) {
                std::ofstream out(summary_out);
                if (!out) {
                    std::cerr << "cannot open for writing: " << summary_out << '\n';
                    return 1;
                }
                out << table;
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
