#pragma once

#include <map>
#include <string>
#include <utility>

#include "offsearch/code_model.hpp"
#include "offsearch/devices.hpp"

namespace offsearch {

// Per-loop record from the profile sidecar. The minimal line form is
// "<loop_id> <iterations>"; the full form appends
// "<serial_seconds> <parallel_fraction> <bytes_transferred> <parallel_safe>
//  <hoistable> <resource_cost>".
struct LoopProfile {
    long long iterations = 0;
    double serial_seconds = 0.0;
    double parallel_fraction = 0.0;
    double bytes_transferred = 0.0;
    bool parallel_safe = true;
    bool hoistable = true;
    double resource_cost = 0.0;
};

struct AppProfile {
    std::map<int, LoopProfile> loops;
    // "block <name> <device-kind> <accelerated_seconds>" records: modeled
    // time of an accelerated function-block implementation on that device.
    std::map<std::pair<std::string, DeviceKind>, double> block_seconds;

    const LoopProfile& loop(int id) const {
        static const LoopProfile empty{};
        auto it = loops.find(id);
        return it == loops.end() ? empty : it->second;
    }

    bool has_block(const std::string& name, DeviceKind kind) const {
        return block_seconds.count({name, kind}) > 0;
    }

    static AppProfile load(const std::string& path);
    static AppProfile parse(const std::string& text, const std::string& origin);
};

// Copies profiled iteration counts onto the inventory's loops.
void apply_trip_counts(LoopInventory& inventory, const AppProfile& profile);

} // namespace offsearch
