#pragma once

#include <string>

#include "offsearch/code_model.hpp"
#include "offsearch/devices.hpp"
#include "offsearch/gene.hpp"

namespace offsearch {

enum class OffloadMethod { FunctionBlock, Loops };

std::string to_string(OffloadMethod m);

// One concrete offload candidate: either a bit vector over candidate loops
// or a single function-block substitution.
struct OffloadPattern {
    DeviceKind device = DeviceKind::ManyCoreCpu;
    OffloadMethod method = OffloadMethod::Loops;

    Gene bits; // loops method

    // function-block method
    std::string block_name;
    int site_id = -1;
    std::string entry_point;
    ByteSpan site_span;
    ByteSpan block_body_span;

    static OffloadPattern loops(DeviceKind dev, Gene g) {
        OffloadPattern p;
        p.device = dev;
        p.method = OffloadMethod::Loops;
        p.bits = std::move(g);
        return p;
    }

    std::string label() const {
        return method == OffloadMethod::Loops ? gene_to_string(bits) : "block:" + block_name;
    }
};

} // namespace offsearch
