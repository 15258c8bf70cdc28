#include "offsearch/evaluators.hpp"

#include <cmath>
#include <sstream>

#include "offsearch/errors.hpp"

namespace offsearch {

std::string to_string(DeviceKind k) {
    switch (k) {
    case DeviceKind::ManyCoreCpu: return "many-core-cpu";
    case DeviceKind::Gpu: return "gpu";
    case DeviceKind::Fpga: return "fpga";
    }
    return "?";
}

std::string to_string(TimeClass c) {
    switch (c) {
    case TimeClass::Short: return "short";
    case TimeClass::Medium: return "medium";
    case TimeClass::Long: return "long";
    }
    return "?";
}

DeviceKind device_kind_from_string(const std::string& s) {
    if (s == "many-core-cpu" || s == "many-core-CPU" || s == "cpu")
        return DeviceKind::ManyCoreCpu;
    if (s == "gpu" || s == "GPU")
        return DeviceKind::Gpu;
    if (s == "fpga" || s == "FPGA")
        return DeviceKind::Fpga;
    throw InfrastructureError("unknown device kind: " + s);
}

std::string to_string(OffloadMethod m) {
    return m == OffloadMethod::FunctionBlock ? "function-block" : "loops";
}

std::string to_string(MeasureStatus s) {
    switch (s) {
    case MeasureStatus::Ok: return "ok";
    case MeasureStatus::Timeout: return "timeout";
    case MeasureStatus::WrongResult: return "wrong-result";
    case MeasureStatus::CompileFail: return "compile-fail";
    }
    return "?";
}

double improvement_factor(const BaselineResult& baseline, const Measurement& m) {
    return baseline.time_seconds / m.time_seconds;
}

SimResult simulate_time(const OffloadPattern& pattern, const LoopInventory& inventory,
                        const AppProfile& profile, const DeviceSpec& device,
                        double base_extra_seconds) {
    SimResult r;
    r.seconds = base_extra_seconds;

    if (pattern.method == OffloadMethod::FunctionBlock) {
        for (const auto& l : inventory.loops) {
            if (pattern.block_body_span.size() > 0 && pattern.block_body_span.contains(l.span))
                continue;
            r.seconds += profile.loop(l.id).serial_seconds;
        }
        auto it = profile.block_seconds.find({pattern.block_name, device.kind});
        if (it == profile.block_seconds.end()) {
            r.status = MeasureStatus::CompileFail;
            return r;
        }
        r.seconds += it->second;
        return r;
    }

    bool wrong = false;
    double resources = 0.0;
    std::size_t k = 0;
    for (const auto& l : inventory.loops) {
        const LoopProfile& lp = profile.loop(l.id);
        bool offloaded = false;
        if (l.parallel_candidate) {
            if (k >= inventory.candidates.size() || inventory.candidates[k] != l.id)
                throw InfrastructureError("inventory candidates out of sync");
            offloaded = k < pattern.bits.size() && pattern.bits[k] != 0;
            ++k;
        }
        if (!offloaded) {
            r.seconds += lp.serial_seconds;
            continue;
        }
        if (!lp.parallel_safe)
            wrong = true;
        switch (device.kind) {
        case DeviceKind::ManyCoreCpu:
            r.seconds += lp.serial_seconds * (1.0 - lp.parallel_fraction) +
                         lp.serial_seconds * lp.parallel_fraction / device.cores;
            break;
        case DeviceKind::Gpu: {
            r.seconds += lp.serial_seconds * (1.0 - lp.parallel_fraction) +
                         lp.serial_seconds * lp.parallel_fraction / device.cores;
            double events = lp.hoistable ? 1.0 : static_cast<double>(lp.iterations);
            r.seconds += device.transfer_cost_per_byte * lp.bytes_transferred * events;
            break;
        }
        case DeviceKind::Fpga:
            r.seconds += lp.serial_seconds / device.pipeline_depth +
                         device.invocation_latency_seconds;
            resources += lp.resource_cost;
            break;
        }
    }
    r.resources_used = resources;
    if (device.kind == DeviceKind::Fpga && resources > device.resource_capacity)
        r.status = MeasureStatus::CompileFail;
    else if (wrong)
        r.status = MeasureStatus::WrongResult;
    return r;
}

BaselineResult SimulatedEvaluator::measure_baseline() {
    BaselineResult b;
    b.time_seconds = base_extra_;
    for (const auto& l : inventory_.loops)
        b.time_seconds += profile_.loop(l.id).serial_seconds;
    b.output_digest = "simulated";
    return b;
}

Measurement SimulatedEvaluator::evaluate(const OffloadPattern& pattern) {
    SimResult sim = simulate_time(pattern, inventory_, profile_, device_, base_extra_);
    Measurement m;
    m.time_seconds = sim.seconds;
    m.status = sim.status;
    m.resources_used = sim.resources_used;
    m.output_digest = "simulated";
    if (m.status == MeasureStatus::Ok && m.time_seconds > device_.timeout_seconds)
        m.status = MeasureStatus::Timeout;
    m.wall_cost_seconds = std::min(m.time_seconds, device_.timeout_seconds);
    if (device_.kind == DeviceKind::Fpga && m.status != MeasureStatus::CompileFail)
        m.wall_cost_seconds += device_.build_cost_seconds;
    return m;
}

std::vector<double> parse_numeric_output(const std::string& blob) {
    std::vector<double> values;
    std::istringstream in(blob);
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            double v = std::stod(tok, &used);
            if (used != tok.size())
                return {};
            values.push_back(v);
        } catch (const std::exception&) {
            return {};
        }
    }
    return values;
}

bool outputs_match(const std::vector<double>& got_values, const std::string& got_digest,
                   const BaselineResult& baseline, double tolerance) {
    if (!baseline.output_values.empty() && !got_values.empty()) {
        if (got_values.size() != baseline.output_values.size())
            return false;
        for (std::size_t i = 0; i < got_values.size(); ++i) {
            double a = got_values[i], b = baseline.output_values[i];
            double scale = std::max(std::abs(a), std::abs(b));
            if (scale == 0.0)
                continue;
            if (std::abs(a - b) > tolerance * scale)
                return false;
        }
        return true;
    }
    return got_digest == baseline.output_digest;
}

} // namespace offsearch
