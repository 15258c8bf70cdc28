#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "offsearch/code_model.hpp"
#include "offsearch/devices.hpp"
#include "offsearch/ga_engine.hpp"

namespace offsearch {

enum class Backend { Simulated, External };

std::string to_string(Backend b);

// Early-stopping targets; with none set, all six verifications run.
struct UserTargets {
    std::optional<double> target_time_seconds;
    std::optional<double> target_improvement;
    std::optional<double> price_budget;

    bool any() const {
        return target_time_seconds || target_improvement || price_budget;
    }
};

struct RunConfig {
    std::vector<std::string> sources;
    std::string profile_path;
    std::string registry_path;
    Backend backend = Backend::Simulated;
    std::string output_dir = "offsearch-out";
    std::uint64_t rng_seed = 1;
    int parallel_workers = 1;
    double correctness_tolerance = 1e-4;
    double similarity_threshold = 0.8;
    bool function_blocks_enabled = true;
    int fpga_narrow_k1 = 5;
    int fpga_narrow_k2 = 3;
    std::vector<DeviceSpec> devices;
    GaParams ga; // population/generations act as caps; clamped per stage
    UserTargets targets;
    std::map<DeviceKind, std::string> dialects;
    std::vector<std::string> extra_pure_functions;

    static RunConfig load(const std::string& path);
    static RunConfig parse(const std::string& json_text, const std::string& base_dir);

    // Every violation, not just the first.
    std::vector<std::string> validate() const;

    std::string directive_for(DeviceKind kind) const;
    ScanOptions scan_options() const;
    const DeviceSpec* find_device(DeviceKind kind) const;
};

} // namespace offsearch
