#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "offsearch/code_model.hpp"
#include "offsearch/devices.hpp"
#include "offsearch/pattern.hpp"
#include "offsearch/profile.hpp"

namespace offsearch {

enum class MeasureStatus { Ok, Timeout, WrongResult, CompileFail };

std::string to_string(MeasureStatus s);

struct Measurement {
    double time_seconds = 0.0;
    MeasureStatus status = MeasureStatus::Ok;
    std::string output_digest;        // hex hash of the raw output
    std::vector<double> output_values; // numeric outputs when parseable
    double resources_used = 0.0;      // FPGA abstract units
    double wall_cost_seconds = 0.0;   // includes simulated circuit-build time
};

struct BaselineResult {
    double time_seconds = 0.0;
    std::string output_digest;
    std::vector<double> output_values;
};

// post: baseline.time_seconds / measurement.time_seconds; caller must not
// ask for non-ok measurements.
double improvement_factor(const BaselineResult& baseline, const Measurement& m);

// Uniform boundary the GA and the orchestrator measure through.
class PatternEvaluator {
  public:
    virtual ~PatternEvaluator() = default;
    virtual BaselineResult measure_baseline() = 0;
    virtual Measurement evaluate(const OffloadPattern& pattern) = 0;
    virtual const DeviceSpec& device() const = 0;
};

struct SimResult {
    double seconds = 0.0;
    MeasureStatus status = MeasureStatus::Ok;
    double resources_used = 0.0;
};

// Deterministic device cost model.
//   many-core CPU: bit=0 -> serial; bit=1 -> serial*(1-pf) + serial*pf/cores
//   GPU:           CPU term with GPU cores, plus transfer_cost_per_byte*bytes
//                  per offloaded loop (once if hoistable, once per iteration
//                  otherwise)
//   FPGA:          bit=1 -> serial/pipeline_depth + invocation latency;
//                  offloaded resource costs above capacity -> compile-fail
// Offloading any loop with parallel_safe=false -> wrong-result.
SimResult simulate_time(const OffloadPattern& pattern, const LoopInventory& inventory,
                        const AppProfile& profile, const DeviceSpec& device,
                        double base_extra_seconds = 0.0);

class SimulatedEvaluator final : public PatternEvaluator {
  public:
    SimulatedEvaluator(LoopInventory inventory, AppProfile profile, DeviceSpec device,
                       double base_extra_seconds = 0.0)
        : inventory_(std::move(inventory)), profile_(std::move(profile)),
          device_(std::move(device)), base_extra_(base_extra_seconds) {}

    BaselineResult measure_baseline() override;
    Measurement evaluate(const OffloadPattern& pattern) override;
    const DeviceSpec& device() const override { return device_; }

  private:
    LoopInventory inventory_;
    AppProfile profile_;
    DeviceSpec device_;
    double base_extra_; // adopted block-substitution seconds, residual runs
};

// Real-toolchain backend: writes the rewritten source into a per-pattern
// work directory, runs the configured compile and run command templates
// ({src} {exe} {out} {workdir} placeholders), kills the run at timeout and
// compares output against the baseline within a relative tolerance.
class ExternalEvaluator final : public PatternEvaluator {
  public:
    ExternalEvaluator(SourceUnit unit, LoopInventory inventory, DeviceSpec device,
                      std::string work_root, std::string directive_line,
                      double tolerance = 1e-4);

    BaselineResult measure_baseline() override;
    Measurement evaluate(const OffloadPattern& pattern) override;
    const DeviceSpec& device() const override { return device_; }

    void set_baseline(const BaselineResult& b) { baseline_ = b; }

  private:
    Measurement run_in(const std::string& dir, const SourceUnit& source);

    SourceUnit unit_;
    LoopInventory inventory_;
    DeviceSpec device_;
    std::string work_root_;
    std::string directive_line_;
    double tolerance_;
    std::optional<BaselineResult> baseline_;
};

// Numeric outputs are compared element-wise with relative tolerance;
// non-numeric outputs byte-compared.
bool outputs_match(const std::vector<double>& got_values, const std::string& got_digest,
                   const BaselineResult& baseline, double tolerance);

// Splits an output blob into doubles; empty when any token is non-numeric.
std::vector<double> parse_numeric_output(const std::string& blob);

} // namespace offsearch
