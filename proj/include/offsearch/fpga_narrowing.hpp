#pragma once

#include <optional>
#include <vector>

#include "offsearch/evaluators.hpp"

namespace offsearch {

struct LoopMetrics {
    int loop_id = 0;
    double arithmetic_intensity = 0.0; // static ops per byte
    long long loop_count = 0;          // profiled iterations
    double resource_cost = 0.0;
    double ranking_score = 0.0;
};

std::vector<LoopMetrics> compute_loop_metrics(const LoopInventory& inventory,
                                              const AppProfile& profile);

// Stage 1: rank candidates by arithmetic_intensity * loop_count, descending;
// ties to the smaller loop id. Returns at most k1 ids.
std::vector<int> narrow_by_intensity(const LoopInventory& inventory, const AppProfile& profile,
                                     int k1 = 5);

// Stage 2: rank the shortlist by arithmetic_intensity / resource_cost
// (zero costs floored to 1 unit). Returns at most k2 ids.
std::vector<int> narrow_by_resource_efficiency(const std::vector<int>& shortlist,
                                               const std::vector<LoopMetrics>& metrics,
                                               int k2 = 3);

OffloadPattern single_loop_pattern(const LoopInventory& inventory, int loop_id,
                                   DeviceKind device);

// Phase 1: one single-loop pattern per shortlisted loop. Phase 2: one pattern
// combining the two best-performing phase-1 singles (omitted when fewer than
// two came back ok). At most 4 patterns total under the defaults.
std::vector<OffloadPattern> fpga_measurement_plan(const std::vector<int>& top,
                                                  const std::vector<Measurement>& single_results,
                                                  const LoopInventory& inventory,
                                                  DeviceKind device = DeviceKind::Fpga);

struct FpgaStageResult {
    std::vector<LoopMetrics> metrics;
    std::vector<int> stage1;
    std::vector<int> stage2;
    std::vector<std::pair<OffloadPattern, Measurement>> measured;
    std::optional<std::size_t> best_index; // minimal time among ok patterns
};

FpgaStageResult run_fpga_narrowing(const LoopInventory& inventory, const AppProfile& profile,
                                   PatternEvaluator& evaluator, int k1 = 5, int k2 = 3);

} // namespace offsearch
