#include "offsearch/fpga_narrowing.hpp"

#include <algorithm>
#include <map>

#include "offsearch/errors.hpp"

namespace offsearch {

std::vector<LoopMetrics> compute_loop_metrics(const LoopInventory& inventory,
                                              const AppProfile& profile) {
    std::vector<LoopMetrics> out;
    out.reserve(inventory.candidates.size());
    for (int id : inventory.candidates) {
        const LoopStatement& l = inventory.loop(id);
        const LoopProfile& lp = profile.loop(id);
        LoopMetrics m;
        m.loop_id = id;
        m.arithmetic_intensity = static_cast<double>(l.static_op_count) /
                                 static_cast<double>(std::max<long long>(l.static_mem_bytes, 1));
        m.loop_count = lp.iterations != 0 ? lp.iterations : l.trip_count;
        m.resource_cost = lp.resource_cost;
        out.push_back(m);
    }
    return out;
}

namespace {

std::vector<int> take_top(std::vector<LoopMetrics> scored, int k) {
    std::stable_sort(scored.begin(), scored.end(), [](const LoopMetrics& a, const LoopMetrics& b) {
        if (a.ranking_score != b.ranking_score)
            return a.ranking_score > b.ranking_score;
        return a.loop_id < b.loop_id;
    });
    std::vector<int> ids;
    for (const auto& m : scored) {
        if (static_cast<int>(ids.size()) >= k)
            break;
        ids.push_back(m.loop_id);
    }
    return ids;
}

} // namespace

std::vector<int> narrow_by_intensity(const LoopInventory& inventory, const AppProfile& profile,
                                     int k1) {
    std::vector<LoopMetrics> metrics = compute_loop_metrics(inventory, profile);
    for (auto& m : metrics)
        m.ranking_score = m.arithmetic_intensity * static_cast<double>(m.loop_count);
    return take_top(std::move(metrics), k1);
}

std::vector<int> narrow_by_resource_efficiency(const std::vector<int>& shortlist,
                                               const std::vector<LoopMetrics>& metrics,
                                               int k2) {
    std::vector<LoopMetrics> scored;
    for (int id : shortlist) {
        auto it = std::find_if(metrics.begin(), metrics.end(),
                               [&](const LoopMetrics& m) { return m.loop_id == id; });
        if (it == metrics.end())
            continue;
        LoopMetrics m = *it;
        double cost = m.resource_cost > 0.0 ? m.resource_cost : 1.0; // documented floor
        m.ranking_score = m.arithmetic_intensity / cost;
        scored.push_back(m);
    }
    return take_top(std::move(scored), k2);
}

OffloadPattern single_loop_pattern(const LoopInventory& inventory, int loop_id,
                                   DeviceKind device) {
    Gene bits(inventory.candidates.size(), 0);
    for (std::size_t k = 0; k < inventory.candidates.size(); ++k)
        if (inventory.candidates[k] == loop_id)
            bits[k] = 1;
    return OffloadPattern::loops(device, std::move(bits));
}

std::vector<OffloadPattern> fpga_measurement_plan(const std::vector<int>& top,
                                                  const std::vector<Measurement>& single_results,
                                                  const LoopInventory& inventory,
                                                  DeviceKind device) {
    std::vector<OffloadPattern> plan;
    for (int id : top)
        plan.push_back(single_loop_pattern(inventory, id, device));

    // Two best-performing ok singles make the combination pattern.
    std::vector<std::size_t> ok;
    for (std::size_t i = 0; i < single_results.size() && i < top.size(); ++i)
        if (single_results[i].status == MeasureStatus::Ok)
            ok.push_back(i);
    std::sort(ok.begin(), ok.end(), [&](std::size_t a, std::size_t b) {
        if (single_results[a].time_seconds != single_results[b].time_seconds)
            return single_results[a].time_seconds < single_results[b].time_seconds;
        return top[a] < top[b];
    });
    if (ok.size() >= 2) {
        Gene bits(inventory.candidates.size(), 0);
        for (std::size_t j = 0; j < 2; ++j) {
            Gene single = single_loop_pattern(inventory, top[ok[j]], device).bits;
            for (std::size_t k = 0; k < bits.size(); ++k)
                bits[k] = bits[k] || single[k];
        }
        plan.push_back(OffloadPattern::loops(device, std::move(bits)));
    }
    return plan;
}

FpgaStageResult run_fpga_narrowing(const LoopInventory& inventory, const AppProfile& profile,
                                   PatternEvaluator& evaluator, int k1, int k2) {
    FpgaStageResult r;
    r.metrics = compute_loop_metrics(inventory, profile);
    r.stage1 = narrow_by_intensity(inventory, profile, k1);
    r.stage2 = narrow_by_resource_efficiency(r.stage1, r.metrics, k2);

    std::vector<Measurement> singles;
    for (int id : r.stage2) {
        OffloadPattern p = single_loop_pattern(inventory, id, evaluator.device().kind);
        Measurement m = evaluator.evaluate(p);
        singles.push_back(m);
        r.measured.emplace_back(std::move(p), std::move(m));
    }
    std::vector<OffloadPattern> plan =
        fpga_measurement_plan(r.stage2, singles, inventory, evaluator.device().kind);
    for (std::size_t i = r.stage2.size(); i < plan.size(); ++i) {
        Measurement m = evaluator.evaluate(plan[i]);
        r.measured.emplace_back(plan[i], std::move(m));
    }

    for (std::size_t i = 0; i < r.measured.size(); ++i) {
        const Measurement& m = r.measured[i].second;
        if (m.status != MeasureStatus::Ok)
            continue;
        if (!r.best_index || m.time_seconds < r.measured[*r.best_index].second.time_seconds)
            r.best_index = i;
    }
    return r;
}

} // namespace offsearch
