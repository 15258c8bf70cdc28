#pragma once

#include <string>
#include <vector>

#include "offsearch/code_model.hpp"
#include "offsearch/devices.hpp"
#include "offsearch/pattern.hpp"

namespace offsearch {

struct RegistryEntry {
    std::string block_name;
    DeviceKind device_kind = DeviceKind::ManyCoreCpu;
    std::string entry_point; // replacement call text; may contain {args}
    std::vector<std::string> reference_tokens;
    std::string speed_class;
};

// Flat-file registry of accelerated implementations. Record format, one per
// line: name|device-kind|entry point|reference-token file|speed class
// ('#' starts a comment; the token file path is relative to the registry).
struct Registry {
    std::vector<RegistryEntry> entries;

    static Registry load(const std::string& path);
    static Registry parse(const std::string& text, const std::string& base_dir);

    std::vector<std::string> names() const;
};

enum class MatchKind { Name, Similarity };

struct BlockMatch {
    FunctionBlockSite site;
    RegistryEntry entry;
    MatchKind match_kind = MatchKind::Name;
    double similarity = 0.0;
};

// Lower-cased, underscores stripped: tdFir == td_fir.
std::string normalize_block_name(const std::string& name);

// Jaccard index over token 3-gram sets. Sequences shorter than 3 tokens are
// treated as a single gram.
double token_similarity(const std::vector<std::string>& a, const std::vector<std::string>& b);

std::vector<BlockMatch> match_by_name(const std::vector<FunctionBlockSite>& sites,
                                      const Registry& registry);

std::vector<BlockMatch> match_by_similarity(const std::vector<FunctionBlockSite>& sites,
                                            const Registry& registry, double threshold = 0.8);

// One pattern per match for the device, name matches ranked ahead of
// similarity matches; overlapping sites resolved in rank order.
std::vector<OffloadPattern> propose_block_patterns(const std::vector<BlockMatch>& matches,
                                                   DeviceKind device);

} // namespace offsearch
