#include "offsearch/orchestrator.hpp"

#include <algorithm>

#include "offsearch/errors.hpp"
#include "offsearch/external.hpp"
#include "offsearch/fpga_narrowing.hpp"

namespace offsearch {

const std::vector<StageId>& stage_plan() {
    static const std::vector<StageId> plan = {
        {DeviceKind::ManyCoreCpu, OffloadMethod::FunctionBlock},
        {DeviceKind::Gpu, OffloadMethod::FunctionBlock},
        {DeviceKind::Fpga, OffloadMethod::FunctionBlock},
        {DeviceKind::ManyCoreCpu, OffloadMethod::Loops},
        {DeviceKind::Gpu, OffloadMethod::Loops},
        {DeviceKind::Fpga, OffloadMethod::Loops},
    };
    return plan;
}

std::string stage_name(const StageId& id) {
    return to_string(id.device) + " " + to_string(id.method);
}

bool StageOutcome::has_ok_best() const {
    return best_index && log[*best_index].measurement.status == MeasureStatus::Ok;
}

const MeasuredPattern* StageOutcome::best() const {
    return best_index ? &log[*best_index] : nullptr;
}

bool satisfied(const UserTargets& targets, const StageOutcome& outcome,
               const BaselineResult& baseline) {
    if (!targets.any() || !outcome.has_ok_best())
        return false;
    const Measurement& m = outcome.best()->measurement;
    if (targets.target_time_seconds && m.time_seconds > *targets.target_time_seconds)
        return false;
    if (targets.target_improvement &&
        improvement_factor(baseline, m) < *targets.target_improvement)
        return false;
    if (targets.price_budget && outcome.device_price > *targets.price_budget)
        return false;
    return true;
}

FinalSelection select_final(const std::vector<StageOutcome>& outcomes,
                            const BaselineResult& baseline, const UserTargets& targets) {
    FinalSelection sel;
    for (const auto& o : outcomes) {
        if (o.skipped || !o.has_ok_best())
            continue;
        if (targets.price_budget && o.device_price > *targets.price_budget)
            continue;
        double improvement = improvement_factor(baseline, o.best()->measurement);
        if (improvement > sel.improvement) { // strict: ties keep the earlier stage
            sel.improvement = improvement;
            sel.stage_index = o.stage_index;
        }
    }
    if (sel.improvement <= 1.0) {
        sel.stage_index = -1;
        sel.improvement = 1.0;
    }
    return sel;
}

namespace {

struct PlanState {
    SourceUnit unit;
    LoopInventory inventory;
    std::vector<FunctionBlockSite> sites;
    AppProfile profile;
    Registry registry;
    BaselineResult baseline;

    // Residual code after the adopted function-block substitution.
    SourceUnit residual_unit;
    LoopInventory residual_inventory;
    double adopted_block_seconds = 0.0;
    bool substitution_adopted = false;
};

std::unique_ptr<PatternEvaluator> make_evaluator(const RunConfig& config, const PlanState& st,
                                                 const DeviceSpec& device, bool residual,
                                                 const std::string& stage_dir) {
    const SourceUnit& unit = residual ? st.residual_unit : st.unit;
    const LoopInventory& inv = residual ? st.residual_inventory : st.inventory;
    if (config.backend == Backend::Simulated) {
        double extra = residual ? st.adopted_block_seconds : 0.0;
        DeviceSpec dev = device;
        dev.timeout_seconds = config.ga.timeout_seconds;
        return std::make_unique<SimulatedEvaluator>(inv, st.profile, dev, extra);
    }
    auto ev = std::make_unique<ExternalEvaluator>(unit, inv, device,
                                                  config.output_dir + "/" + stage_dir,
                                                  config.directive_for(device.kind),
                                                  config.correctness_tolerance);
    ev->set_baseline(st.baseline);
    return ev;
}

void finish_stage(StageOutcome& out, const BaselineResult& baseline) {
    for (std::size_t i = 0; i < out.log.size(); ++i) {
        const Measurement& m = out.log[i].measurement;
        out.wall_cost_seconds += m.wall_cost_seconds;
        if (m.status != MeasureStatus::Ok)
            continue;
        if (!out.best_index || m.time_seconds < out.log[*out.best_index].measurement.time_seconds)
            out.best_index = i;
    }
    if (out.has_ok_best()) {
        out.improvement = improvement_factor(baseline, out.best()->measurement);
        out.fallback_to_baseline = out.improvement <= 1.0;
    }
}

StageOutcome run_block_stage(const RunConfig& config, PlanState& st, const DeviceSpec& device,
                             int stage_index) {
    StageOutcome out;
    out.stage_index = stage_index;
    out.id = {device.kind, OffloadMethod::FunctionBlock};
    out.device_name = device.name;
    out.device_price = device.price;

    std::vector<BlockMatch> matches = match_by_name(st.sites, st.registry);
    std::vector<BlockMatch> sim =
        match_by_similarity(st.sites, st.registry, config.similarity_threshold);
    matches.insert(matches.end(), sim.begin(), sim.end());
    std::vector<OffloadPattern> patterns = propose_block_patterns(matches, device.kind);

    auto evaluator =
        make_evaluator(config, st, device, false, "stage" + std::to_string(stage_index));
    for (auto& p : patterns) {
        Measurement m = evaluator->evaluate(p);
        out.log.push_back({std::move(p), std::move(m), 0.0, -1});
    }
    finish_stage(out, st.baseline);
    return out;
}

StageOutcome run_loop_stage(const RunConfig& config, PlanState& st, const DeviceSpec& device,
                            int stage_index) {
    StageOutcome out;
    out.stage_index = stage_index;
    out.id = {device.kind, OffloadMethod::Loops};
    out.device_name = device.name;
    out.device_price = device.price;

    const LoopInventory& inv = st.residual_inventory;
    out.gene_length = inv.gene_length();
    if (out.gene_length == 0) {
        finish_stage(out, st.baseline);
        return out; // nothing to search; executed with an empty log
    }

    auto evaluator =
        make_evaluator(config, st, device, true, "stage" + std::to_string(stage_index));

    if (device.kind == DeviceKind::Fpga) {
        FpgaStageResult fr = run_fpga_narrowing(inv, st.profile, *evaluator,
                                                config.fpga_narrow_k1, config.fpga_narrow_k2);
        out.narrow_stage1 = fr.stage1;
        out.narrow_stage2 = fr.stage2;
        for (auto& [p, m] : fr.measured)
            out.log.push_back({std::move(p), std::move(m), 0.0, -1});
    } else {
        GaParams params = resolve_ga_params(config.ga, inv.gene_length());
        // Distinct deterministic stream per stage.
        params.rng_seed = config.rng_seed + static_cast<std::uint64_t>(stage_index);
        GaResult ga = run_ga(*evaluator, params, config.parallel_workers);
        for (auto& rec : ga.records)
            out.log.push_back({OffloadPattern::loops(device.kind, rec.bits), rec.measurement,
                               rec.fitness, rec.generation});
    }
    finish_stage(out, st.baseline);
    return out;
}

// The single best ok substitution with improvement > 1.0 is carried into the
// residual code the loop stages search.
void adopt_substitution(const RunConfig& config, PlanState& st,
                        const std::vector<StageOutcome>& outcomes) {
    const StageOutcome* best = nullptr;
    for (const auto& o : outcomes) {
        if (o.skipped || o.id.method != OffloadMethod::FunctionBlock || !o.has_ok_best())
            continue;
        if (o.improvement <= 1.0)
            continue;
        if (!best || o.improvement > best->improvement)
            best = &o;
    }
    if (!best)
        return;
    const OffloadPattern& p = best->best()->pattern;
    for (const auto& site : st.sites) {
        if (site.id != p.site_id)
            continue;
        SubstitutionResult sub =
            substitute_function_block(st.unit, st.inventory, site, p.entry_point);
        st.residual_unit = std::move(sub.unit);
        st.residual_inventory = std::move(sub.residual);
        st.substitution_adopted = true;
        if (config.backend == Backend::Simulated)
            st.adopted_block_seconds = st.profile.block_seconds.at({p.block_name, p.device});
        return;
    }
}

} // namespace

SearchReport run_plan(const RunConfig& config) {
    if (auto errs = config.validate(); !errs.empty())
        throw ConfigError(errs);
    if (config.devices.empty())
        throw NoDevicesError("no devices configured");

    PlanState st;
    st.unit = SourceUnit::from_file(config.sources.at(0));
    st.inventory = scan_loops(st.unit, config.scan_options());
    if (!config.profile_path.empty()) {
        st.profile = AppProfile::load(config.profile_path);
        apply_trip_counts(st.inventory, st.profile);
    }
    if (!config.registry_path.empty())
        st.registry = Registry::load(config.registry_path);
    st.sites = scan_function_blocks(st.unit, st.registry.names());
    st.residual_unit = st.unit;
    st.residual_inventory = st.inventory;

    {
        auto base_eval = make_evaluator(config, st, config.devices.front(), false, "baseline");
        st.baseline = base_eval->measure_baseline();
    }

    SearchReport report;
    report.source_path = st.unit.path;
    report.source_checksum = st.unit.checksum;
    report.rng_seed = config.rng_seed;
    report.baseline = st.baseline;

    bool stop = false;
    bool adopted = false;
    for (std::size_t k = 0; k < stage_plan().size(); ++k) {
        const StageId& id = stage_plan()[k];

        // Loop stages run on the residual of the best adopted substitution.
        if (id.method == OffloadMethod::Loops && !adopted) {
            adopt_substitution(config, st, report.stages);
            adopted = true;
        }

        StageOutcome out;
        if (stop) {
            out.stage_index = static_cast<int>(k);
            out.id = id;
            out.skipped = true;
            out.skip_reason = "early-stop";
        } else if (id.method == OffloadMethod::FunctionBlock && !config.function_blocks_enabled) {
            out.stage_index = static_cast<int>(k);
            out.id = id;
            out.skipped = true;
            out.skip_reason = "disabled";
        } else if (const DeviceSpec* device = config.find_device(id.device); !device) {
            out.stage_index = static_cast<int>(k);
            out.id = id;
            out.skipped = true;
            out.skip_reason = "device-unavailable";
        } else if (id.method == OffloadMethod::FunctionBlock) {
            out = run_block_stage(config, st, *device, static_cast<int>(k));
        } else {
            out = run_loop_stage(config, st, *device, static_cast<int>(k));
        }
        report.stages.push_back(std::move(out));

        if (!stop && satisfied(config.targets, report.stages.back(), st.baseline))
            stop = true;
    }

    FinalSelection sel = select_final(report.stages, st.baseline, config.targets);
    report.final_improvement = sel.improvement;
    report.chosen_stage_index = sel.stage_index;
    report.offload_chosen = sel.stage_index >= 0;
    for (const auto& o : report.stages)
        report.total_wall_cost_seconds += o.wall_cost_seconds;

    if (report.offload_chosen) {
        const StageOutcome& chosen = report.stages[static_cast<std::size_t>(sel.stage_index)];
        report.chosen_pattern = chosen.best()->pattern;
        report.chosen_device = chosen.device_name;
        const OffloadPattern& p = *report.chosen_pattern;
        if (p.method == OffloadMethod::FunctionBlock) {
            for (const auto& site : st.sites)
                if (site.id == p.site_id)
                    report.chosen_source_text =
                        substitute_function_block(st.unit, st.inventory, site, p.entry_point)
                            .unit.text;
        } else {
            report.chosen_source_text =
                insert_parallel_directives(st.residual_unit, st.residual_inventory, p.bits,
                                           config.directive_for(p.device))
                    .text;
        }
    } else {
        report.chosen_device = "none";
        report.chosen_source_text = st.unit.text;
    }
    return report;
}

} // namespace offsearch
