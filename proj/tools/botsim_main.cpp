// botsim command line: seeded experiment runs, the bundled walkthrough
// replay, plain-vs-immune policy comparison and seed sweeps.
//
// Exit codes: 0 success / no failures, 1 the simulation produced
// failures (or the replay check did not hold), 2 usage or config errors.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "botsim/config.hpp"
#include "botsim/engine.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::vector<std::string> sets;
    std::string trace_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> ticks;
    std::string policy;
};

void add_common_options(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "config file (key = value lines)");
    cmd->add_option("--set", args.sets, "override a config key, key=value (repeatable)");
    cmd->add_option("--trace", args.trace_path, "write the tick trace CSV to this path");
    cmd->add_option("--seed", args.seed, "seed override");
    cmd->add_option("--ticks", args.ticks, "tick count override");
    cmd->add_option("--policy", args.policy, "queue policy override")
        ->check(CLI::IsMember({"plain", "immune"}));
}

// File (or the given base) + --set overrides + the flag sugar, all
// validated together at the end.
botsim::SimConfig build_config(const CommonArgs& args, botsim::SimConfig base) {
    std::vector<std::string> overrides = args.sets;
    if (args.seed) overrides.push_back("seed=" + std::to_string(*args.seed));
    if (args.ticks) overrides.push_back("ticks=" + std::to_string(*args.ticks));
    if (!args.policy.empty()) overrides.push_back("policy=" + args.policy);
    if (!args.config_path.empty()) {
        return botsim::load_config(args.config_path, overrides);
    }
    botsim::SimConfig cfg = std::move(base);
    botsim::apply_overrides(cfg, overrides);
    botsim::finalize_config(cfg);
    return cfg;
}

void write_trace_file(const std::string& path, const std::vector<botsim::TraceRow>& trace) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw botsim::ConfigError("cannot open trace file for writing: " + path);
    }
    out << botsim::trace_to_csv(trace);
    if (!out) {
        throw botsim::ConfigError("failed writing trace file: " + path);
    }
}

int cmd_run(const CommonArgs& args) {
    const botsim::SimConfig cfg = build_config(args, botsim::SimConfig{});
    const botsim::RunResult result = botsim::run_simulation(cfg);
    if (!args.trace_path.empty()) write_trace_file(args.trace_path, result.trace);
    std::cout << botsim::run_report_text(cfg, result);
    return result.metrics.failures == 0 ? 0 : 1;
}

int cmd_replay(const CommonArgs& args) {
    const botsim::SimConfig cfg = build_config(args, botsim::replay_scenario_config());
    const botsim::RunResult result = botsim::run_simulation(cfg);
    if (!args.trace_path.empty()) write_trace_file(args.trace_path, result.trace);
    std::cout << botsim::run_report_text(cfg, result);
    const bool order_ok = result.grant_order == std::vector<int>{3, 1, 4, 2};
    const bool bot4_escalated =
        std::any_of(result.escalations.begin(), result.escalations.end(),
                    [](const auto& e) { return e.second == 4; });
    const bool ok = order_ok && bot4_escalated && result.metrics.failures == 0;
    std::cout << "replay_check = " << (ok ? "ok" : "mismatch") << "\n";
    return ok ? 0 : 1;
}

int cmd_compare(const CommonArgs& args) {
    botsim::SimConfig cfg = build_config(args, botsim::SimConfig{});

    auto run_as = [&](botsim::Policy policy) {
        botsim::SimConfig variant = cfg;
        variant.policy = policy;
        return botsim::run_simulation(variant);
    };
    const botsim::RunResult plain = run_as(botsim::Policy::PlainFcfs);
    const botsim::RunResult immune = run_as(botsim::Policy::ImmuneFcfs);

    auto fmt = [](double v) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6f", v);
        return std::string(buf);
    };
    auto join = [](const std::vector<int>& v) {
        if (v.empty()) return std::string("none");
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i > 0) out += ',';
            out += std::to_string(v[i]);
        }
        return out;
    };
    auto line = [](const std::string& name, const std::string& a, const std::string& b) {
        std::printf("%-24s %-16s %-16s\n", name.c_str(), a.c_str(), b.c_str());
    };
    line("metric", "plain", "immune");
    line("failures", std::to_string(plain.metrics.failures),
         std::to_string(immune.metrics.failures));
    line("total_work", fmt(plain.metrics.total_work), fmt(immune.metrics.total_work));
    line("max_wait_ticks", std::to_string(plain.metrics.max_wait_ticks),
         std::to_string(immune.metrics.max_wait_ticks));
    line("mean_wait_ticks", fmt(plain.metrics.mean_wait_ticks),
         fmt(immune.metrics.mean_wait_ticks));
    line("queue_jumps", std::to_string(plain.metrics.queue_jumps),
         std::to_string(immune.metrics.queue_jumps));
    line("charger_busy_fraction", fmt(plain.metrics.charger_busy_fraction),
         fmt(immune.metrics.charger_busy_fraction));
    line("grant_order", join(plain.grant_order), join(immune.grant_order));
    return 0;
}

int cmd_sweep(const CommonArgs& args, std::int64_t runs) {
    const botsim::SimConfig cfg = build_config(args, botsim::SimConfig{});
    std::int64_t total_failures = 0;
    std::int64_t runs_with_failures = 0;
    double work_sum = 0.0;
    for (std::int64_t k = 0; k < runs; ++k) {
        botsim::SimConfig variant = cfg;
        variant.seed = cfg.seed + static_cast<std::uint64_t>(k);
        const botsim::RunResult result = botsim::run_simulation(variant);
        total_failures += result.metrics.failures;
        if (result.metrics.failures > 0) ++runs_with_failures;
        work_sum += result.metrics.total_work;
    }
    auto fmt = [](double v) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6f", v);
        return std::string(buf);
    };
    std::cout << "runs = " << runs << "\n";
    std::cout << "base_seed = " << cfg.seed << "\n";
    std::cout << "policy = " << botsim::policy_name(cfg.policy) << "\n";
    std::cout << "feasibility_margin = " << botsim::feasibility_margin(cfg) << "\n";
    std::cout << "total_failures = " << total_failures << "\n";
    std::cout << "runs_with_failures = " << runs_with_failures << "\n";
    std::cout << "mean_total_work = "
              << fmt(runs > 0 ? work_sum / static_cast<double>(runs) : 0.0) << "\n";
    return total_failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"botsim: multi-agent patrol simulator with one shared charger"};
    app.require_subcommand(1);

    CommonArgs run_args;
    CLI::App* run = app.add_subcommand("run", "run one seeded experiment");
    add_common_options(run, run_args);

    CommonArgs replay_args;
    CLI::App* replay = app.add_subcommand(
        "replay-paper", "replay the bundled four-bot walkthrough and check its outcome");
    add_common_options(replay, replay_args);

    CommonArgs compare_args;
    CLI::App* compare = app.add_subcommand(
        "compare", "run the same config and seed under both queue policies");
    add_common_options(compare, compare_args);

    CommonArgs sweep_args;
    std::int64_t sweep_runs = 200;
    CLI::App* sweep = app.add_subcommand("sweep", "aggregate failures over consecutive seeds");
    add_common_options(sweep, sweep_args);
    sweep->add_option("--runs", sweep_runs, "number of seeds to run")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run->parsed()) return cmd_run(run_args);
        if (replay->parsed()) return cmd_replay(replay_args);
        if (compare->parsed()) return cmd_compare(compare_args);
        if (sweep->parsed()) return cmd_sweep(sweep_args, sweep_runs);
    } catch (const botsim::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
