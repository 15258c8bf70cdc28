#pragma once

#include <string>

namespace offsearch {

enum class DeviceKind { ManyCoreCpu, Gpu, Fpga };

// Expected duration of one pattern verification; drives the stage order
// rationale (CPU before GPU before FPGA).
enum class TimeClass { Short = 0, Medium = 1, Long = 2 };

std::string to_string(DeviceKind k);
std::string to_string(TimeClass c);
DeviceKind device_kind_from_string(const std::string& s);

struct DeviceSpec {
    DeviceKind kind = DeviceKind::ManyCoreCpu;
    std::string name;
    double price = 0.0;                      // currency units
    int cores = 1;                           // CPU / GPU
    double transfer_cost_per_byte = 0.0;     // GPU, seconds per byte
    int pipeline_depth = 1;                  // FPGA
    double resource_capacity = 0.0;          // FPGA, abstract units
    double invocation_latency_seconds = 0.0; // FPGA, per offloaded loop
    double build_cost_seconds = 10800.0;     // FPGA circuit build, report metadata
    TimeClass verification_time_class = TimeClass::Short;
    double timeout_seconds = 180.0;
    std::string compile_cmd;                 // external backend templates
    std::string run_cmd;

    static TimeClass default_time_class(DeviceKind k) {
        switch (k) {
        case DeviceKind::ManyCoreCpu: return TimeClass::Short;
        case DeviceKind::Gpu: return TimeClass::Medium;
        case DeviceKind::Fpga: return TimeClass::Long;
        }
        return TimeClass::Short;
    }
};

} // namespace offsearch
