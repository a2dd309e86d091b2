// SPDX-License-Identifier: Apache-2.0
//
// iftw: secondary-effect analysis for triangular-wave mmWave backhaul paths.
//
//   iftw check  --config scenario.yaml
//   iftw tables --preset paper_baseline
//   iftw sweep  --config scenario.yaml --out loss.csv --threads 4
//   iftw mc     --preset paper_baseline --trials 1000000 --seed 7
//
// The environment variable IFTW_SEED overrides the configured seed; --seed
// overrides both.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "iftw/config.hpp"
#include "iftw/error.hpp"
#include "iftw/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitViolation = 3;

struct CommonOptions
{
    std::string config_path;
    std::string preset;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::optional<int> threads;
    std::string out;
};

void add_common(CLI::App* cmd, CommonOptions& o)
{
    auto* cfg = cmd->add_option("--config", o.config_path, "Scenario file (YAML)");
    auto* pre = cmd->add_option("--preset", o.preset, "Built-in scenario")->check(CLI::IsMember({"paper_baseline"}));
    cfg->excludes(pre);
    cmd->add_option("--seed", o.seed, "Monte Carlo seed");
    cmd->add_option("--trials", o.trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
    cmd->add_option("--threads", o.threads, "Worker threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
    cmd->add_option("--out", o.out, "Output CSV path");
}

iftw::ScenarioConfig resolve(const CommonOptions& o)
{
    iftw::ScenarioConfig c;
    if (!o.config_path.empty())
        c = iftw::load_config(o.config_path);
    else if (!o.preset.empty())
        c = *iftw::preset_config(o.preset);
    else
        throw CLI::RequiredError("--config or --preset");

    if (const char* env = std::getenv("IFTW_SEED"); env && *env)
    {
        try
        {
            c.experiment.seed = std::stoull(env);
        }
        catch (const std::exception&)
        {
            throw iftw::ConfigError({std::string("IFTW_SEED: not an unsigned integer: ") + env});
        }
    }
    if (o.seed) c.experiment.seed = *o.seed;
    if (o.trials) c.experiment.trials = *o.trials;
    if (o.threads) c.experiment.threads = *o.threads;
    if (!o.out.empty()) c.experiment.output = o.out;
    return c;
}

void emit(const std::string& text, const std::string& path)
{
    if (path.empty())
    {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot write " + path);
    f << text;
    if (!f)
        throw std::runtime_error("write failed: " + path);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Secondary-effect analysis for triangular-wave mmWave backhaul paths"};
    app.require_subcommand(1);

    CommonOptions check_opts, tables_opts, sweep_opts, mc_opts;
    auto* check = app.add_subcommand("check", "Validate geometry and the interference-free condition");
    add_common(check, check_opts);
    auto* tables = app.add_subcommand("tables", "SINR with/without side-lobe and vehicle reflections");
    add_common(tables, tables_opts);
    auto* sweep = app.add_subcommand("sweep", "Building-loss or reflection-probability sweep to CSV");
    add_common(sweep, sweep_opts);
    auto* mc = app.add_subcommand("mc", "Closed-form vs Monte Carlo reflection probability");
    add_common(mc, mc_opts);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try
    {
        if (check->parsed())
        {
            const auto cfg = resolve(check_opts);
            const auto rep = iftw::run_check(cfg);
            std::cout << iftw::format_check_report(cfg, rep);
            return rep.interference_free ? kExitOk : kExitViolation;
        }
        if (tables->parsed())
        {
            const auto cfg = resolve(tables_opts);
            std::cout << iftw::format_table_report(iftw::run_tables(cfg));
            return kExitOk;
        }
        if (sweep->parsed())
        {
            const auto cfg = resolve(sweep_opts);
            emit(iftw::run_sweep(cfg), cfg.experiment.output);
            return kExitOk;
        }
        if (mc->parsed())
        {
            const auto cfg = resolve(mc_opts);
            const auto stats = iftw::run_mc(cfg);
            std::cout << iftw::format_mc_report(cfg, stats);
            if (!cfg.experiment.output.empty())
            {
                std::ostringstream csv;
                iftw::write_mc_csv(csv, stats);
                emit(csv.str(), cfg.experiment.output);
            }
            return kExitOk;
        }
    }
    catch (const CLI::Error& e)
    {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    catch (const iftw::ConfigError& e)
    {
        std::cerr << e.what() << "\n";
        return kExitError;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
