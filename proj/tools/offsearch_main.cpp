#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "offsearch/errors.hpp"
#include "offsearch/external.hpp"
#include "offsearch/fpga_narrowing.hpp"
#include "offsearch/function_block.hpp"
#include "offsearch/orchestrator.hpp"
#include "offsearch/report.hpp"

using namespace offsearch;

namespace {

struct CommonOpts {
    std::string config_path;
    std::optional<std::string> backend;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out_dir;
    std::optional<double> target_time;
    std::optional<double> target_improvement;
    std::optional<double> price_budget;
    std::optional<int> workers;
    bool no_function_blocks = false;
};

RunConfig load_config(const CommonOpts& opts) {
    RunConfig c = RunConfig::load(opts.config_path);
    if (opts.backend)
        c.backend = *opts.backend == "external" ? Backend::External : Backend::Simulated;
    if (opts.seed) {
        c.rng_seed = *opts.seed;
        c.ga.rng_seed = *opts.seed;
    }
    if (opts.out_dir)
        c.output_dir = *opts.out_dir;
    if (opts.target_time)
        c.targets.target_time_seconds = opts.target_time;
    if (opts.target_improvement)
        c.targets.target_improvement = opts.target_improvement;
    if (opts.price_budget)
        c.targets.price_budget = opts.price_budget;
    if (opts.workers)
        c.parallel_workers = *opts.workers;
    if (opts.no_function_blocks)
        c.function_blocks_enabled = false;
    if (auto errs = c.validate(); !errs.empty())
        throw ConfigError(errs);
    return c;
}

struct LoadedApp {
    SourceUnit unit;
    LoopInventory inventory;
    AppProfile profile;
    Registry registry;
    std::vector<FunctionBlockSite> sites;
};

LoadedApp load_app(const RunConfig& c) {
    LoadedApp app;
    app.unit = SourceUnit::from_file(c.sources.at(0));
    app.inventory = scan_loops(app.unit, c.scan_options());
    if (!c.profile_path.empty()) {
        app.profile = AppProfile::load(c.profile_path);
        apply_trip_counts(app.inventory, app.profile);
    }
    if (!c.registry_path.empty())
        app.registry = Registry::load(c.registry_path);
    app.sites = scan_function_blocks(app.unit, app.registry.names());
    return app;
}

int cmd_run(const CommonOpts& opts) {
    RunConfig config = load_config(opts);
    SearchReport report = run_plan(config);
    write_report_files(report, config.output_dir);
    std::cout << render_report_text(report);
    std::cout << "\nreports written to " << config.output_dir << "\n";
    return 0;
}

int cmd_scan(const CommonOpts& opts) {
    RunConfig config = load_config(opts);
    for (const auto& src : config.sources) {
        SourceUnit unit = SourceUnit::from_file(src);
        LoopInventory inv = scan_loops(unit, config.scan_options());
        AppProfile profile;
        if (!config.profile_path.empty()) {
            profile = AppProfile::load(config.profile_path);
            apply_trip_counts(inv, profile);
        }
        std::printf("%s: %zu loops, %zu parallel candidates (gene length %zu)\n", src.c_str(),
                    inv.loops.size(), inv.candidates.size(), inv.gene_length());
        for (const auto& l : inv.loops) {
            std::printf("  loop %3d depth %d %-9s ops %-6lld mem %-8lld trips %-10lld  %s\n",
                        l.id, l.nest_depth, l.parallel_candidate ? "candidate" : "serial",
                        l.static_op_count, l.static_mem_bytes, l.trip_count,
                        l.header_text.substr(0, 60).c_str());
        }
        Registry reg;
        if (!config.registry_path.empty())
            reg = Registry::load(config.registry_path);
        auto sites = scan_function_blocks(unit, reg.names());
        std::printf("  %zu function-call block site(s)\n", sites.size());
        for (const auto& s : sites)
            std::printf("    site %d: %s(%s)\n", s.id, s.callee_name.c_str(),
                        s.call_args.c_str());
    }
    return 0;
}

int cmd_ga(const CommonOpts& opts, const std::string& device_kind) {
    RunConfig config = load_config(opts);
    LoadedApp app = load_app(config);
    DeviceKind kind = device_kind_from_string(device_kind);
    const DeviceSpec* device = config.find_device(kind);
    if (!device)
        throw NoDevicesError("device kind not in config: " + device_kind);
    if (app.inventory.gene_length() == 0)
        throw InfrastructureError("no candidate loops to search");

    DeviceSpec dev = *device;
    dev.timeout_seconds = config.ga.timeout_seconds;
    SimulatedEvaluator evaluator(app.inventory, app.profile, dev);
    BaselineResult baseline = evaluator.measure_baseline();
    GaParams params = resolve_ga_params(config.ga, app.inventory.gene_length());
    GaResult result = run_ga(evaluator, params, config.parallel_workers);

    std::printf("gene length %zu, population %zu, generations %zu, seed %llu\n",
                params.gene_length, params.population, params.generations,
                static_cast<unsigned long long>(params.rng_seed));
    for (const auto& gen : result.generations) {
        const Individual& elite = gen.members[gen.elite_index];
        std::printf("  generation %2d: elite %s fitness %.6f time %.6f s\n", gen.index,
                    gene_to_string(elite.bits).c_str(), elite.fitness.value(),
                    elite.measurement->time_seconds);
    }
    std::printf("measured %zu distinct patterns\n", result.records.size());
    std::printf("best %s: %.6f s", gene_to_string(result.best.bits).c_str(),
                result.best.measurement->time_seconds);
    if (result.best.measurement->status == MeasureStatus::Ok)
        std::printf(", improvement %.3fx vs %.6f s baseline",
                    baseline.time_seconds / result.best.measurement->time_seconds,
                    baseline.time_seconds);
    std::printf("\n");
    return 0;
}

int cmd_narrow(const CommonOpts& opts) {
    RunConfig config = load_config(opts);
    LoadedApp app = load_app(config);
    auto metrics = compute_loop_metrics(app.inventory, app.profile);
    std::printf("candidate loop metrics:\n");
    for (const auto& m : metrics)
        std::printf("  loop %3d intensity %-10.4f count %-10lld resource %-8.2f score %-12.2f\n",
                    m.loop_id, m.arithmetic_intensity, m.loop_count, m.resource_cost,
                    m.arithmetic_intensity * static_cast<double>(m.loop_count));
    auto s1 = narrow_by_intensity(app.inventory, app.profile, config.fpga_narrow_k1);
    auto s2 = narrow_by_resource_efficiency(s1, metrics, config.fpga_narrow_k2);
    auto join = [](const std::vector<int>& v) {
        std::string j;
        for (int id : v)
            j += (j.empty() ? "" : ", ") + std::to_string(id);
        return j;
    };
    std::printf("stage 1 (intensity * loop count, top %d): [%s]\n", config.fpga_narrow_k1,
                join(s1).c_str());
    std::printf("stage 2 (intensity / resource, top %d): [%s]\n", config.fpga_narrow_k2,
                join(s2).c_str());
    return 0;
}

int cmd_match(const CommonOpts& opts) {
    RunConfig config = load_config(opts);
    LoadedApp app = load_app(config);
    auto by_name = match_by_name(app.sites, app.registry);
    auto by_sim = match_by_similarity(app.sites, app.registry, config.similarity_threshold);
    std::printf("%zu name match(es), %zu similarity match(es) at threshold %.2f\n",
                by_name.size(), by_sim.size(), config.similarity_threshold);
    for (const auto& m : by_name)
        std::printf("  name: site %d %s -> %s [%s]\n", m.site.id, m.site.callee_name.c_str(),
                    m.entry.block_name.c_str(), to_string(m.entry.device_kind).c_str());
    for (const auto& m : by_sim)
        std::printf("  similarity %.3f: site %d %s -> %s [%s]\n", m.similarity, m.site.id,
                    m.site.callee_name.c_str(), m.entry.block_name.c_str(),
                    to_string(m.entry.device_kind).c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"offsearch: measurement-driven offload pattern search across "
                 "many-core CPU, GPU and FPGA destinations"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string ga_device = "many-core-cpu";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", opts.config_path, "run configuration file (JSON)")
            ->required();
        cmd->add_option("--backend", opts.backend, "simulated | external");
        cmd->add_option("--seed", opts.seed, "RNG seed override");
        cmd->add_option("--out", opts.out_dir, "output directory override");
        cmd->add_option("--target-time", opts.target_time, "early-stop target time (seconds)");
        cmd->add_option("--target-improvement", opts.target_improvement,
                        "early-stop target improvement factor");
        cmd->add_option("--price-budget", opts.price_budget, "device price budget");
        cmd->add_option("--parallel-workers", opts.workers, "evaluation worker threads");
        cmd->add_flag("--no-function-blocks", opts.no_function_blocks,
                      "skip the function-block stages");
    };

    CLI::App* run = app.add_subcommand("run", "run the six-stage verification plan");
    add_common(run);
    CLI::App* scan = app.add_subcommand("scan", "print the loop and function-block inventory");
    add_common(scan);
    CLI::App* ga = app.add_subcommand("ga", "run one loop-offload GA search (simulated)");
    add_common(ga);
    ga->add_option("--device", ga_device, "device kind: many-core-cpu | gpu");
    CLI::App* narrow = app.add_subcommand("narrow", "print the FPGA narrowing decision");
    add_common(narrow);
    CLI::App* match = app.add_subcommand("match", "print function-block registry matches");
    add_common(match);

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed())
            return cmd_run(opts);
        if (scan->parsed())
            return cmd_scan(opts);
        if (ga->parsed())
            return cmd_ga(opts, ga_device);
        if (narrow->parsed())
            return cmd_narrow(opts);
        if (match->parsed())
            return cmd_match(opts);
    } catch (const ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
