#pragma once

#include <optional>
#include <string>
#include <vector>

#include "offsearch/config.hpp"
#include "offsearch/evaluators.hpp"
#include "offsearch/function_block.hpp"
#include "offsearch/ga_engine.hpp"
#include "offsearch/pattern.hpp"

namespace offsearch {

struct StageId {
    DeviceKind device;
    OffloadMethod method;
    bool operator==(const StageId&) const = default;
};

// Fixed verification order: function blocks before loops, and within each
// method many-core CPU, then GPU, then FPGA.
const std::vector<StageId>& stage_plan();

std::string stage_name(const StageId& id);

struct MeasuredPattern {
    OffloadPattern pattern;
    Measurement measurement;
    double fitness = 0.0;
    int generation = -1; // GA generation; -1 outside loop stages
};

struct StageOutcome {
    int stage_index = 0;
    StageId id{DeviceKind::ManyCoreCpu, OffloadMethod::Loops};
    std::string device_name;
    bool skipped = false;
    std::string skip_reason; // early-stop | device-unavailable | disabled
    std::size_t gene_length = 0;
    std::vector<MeasuredPattern> log;
    std::optional<std::size_t> best_index; // into log; minimal ok time
    double improvement = 0.0;              // baseline / best ok time
    double device_price = 0.0;
    bool fallback_to_baseline = false; // best ok pattern no faster than baseline
    double wall_cost_seconds = 0.0;
    std::vector<int> narrow_stage1; // FPGA loop stages only
    std::vector<int> narrow_stage2;

    bool has_ok_best() const;
    const MeasuredPattern* best() const;
};

struct SearchReport {
    std::string source_path;
    std::uint64_t source_checksum = 0;
    std::uint64_t rng_seed = 0;
    BaselineResult baseline;
    std::vector<StageOutcome> stages;
    bool offload_chosen = false;
    int chosen_stage_index = -1;
    std::optional<OffloadPattern> chosen_pattern;
    std::string chosen_device;
    double final_improvement = 1.0;
    double total_wall_cost_seconds = 0.0;
    std::string chosen_source_text; // rewritten source for the chosen pattern
};

// true iff every set target is met by the outcome's best ok measurement.
bool satisfied(const UserTargets& targets, const StageOutcome& outcome,
               const BaselineResult& baseline);

struct FinalSelection {
    int stage_index = -1; // -1: no offload beats the baseline
    double improvement = 1.0;
};

// Max improvement among ok outcomes within the price budget; ties go to the
// earlier stage; nothing above 1.0 means no offload.
FinalSelection select_final(const std::vector<StageOutcome>& outcomes,
                            const BaselineResult& baseline, const UserTargets& targets);

SearchReport run_plan(const RunConfig& config);

} // namespace offsearch
