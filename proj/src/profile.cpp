#include "offsearch/profile.hpp"

#include <fstream>
#include <sstream>

#include "offsearch/errors.hpp"

namespace offsearch {

AppProfile AppProfile::load(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InfrastructureError("cannot read profile sidecar: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

AppProfile AppProfile::parse(const std::string& text, const std::string& origin) {
    AppProfile p;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (std::size_t h = line.find('#'); h != std::string::npos)
            line.erase(h);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first))
            continue;
        auto fail = [&](const std::string& why) -> InfrastructureError {
            return InfrastructureError(origin + ":" + std::to_string(lineno) + ": " + why);
        };
        if (first == "block") {
            std::string name, kind;
            double seconds = 0.0;
            if (!(ls >> name >> kind >> seconds))
                throw fail("block record needs: block <name> <device-kind> <seconds>");
            p.block_seconds[{name, device_kind_from_string(kind)}] = seconds;
            continue;
        }
        LoopProfile lp;
        int id = 0;
        try {
            id = std::stoi(first);
        } catch (const std::exception&) {
            throw fail("expected a loop id or 'block', got '" + first + "'");
        }
        if (!(ls >> lp.iterations))
            throw fail("loop record needs at least: <loop_id> <iterations>");
        double serial, pf, bytes, res;
        int safe, hoist;
        if (ls >> serial >> pf >> bytes >> safe >> hoist >> res) {
            lp.serial_seconds = serial;
            lp.parallel_fraction = pf;
            lp.bytes_transferred = bytes;
            lp.parallel_safe = safe != 0;
            lp.hoistable = hoist != 0;
            lp.resource_cost = res;
        }
        p.loops[id] = lp;
    }
    return p;
}

void apply_trip_counts(LoopInventory& inventory, const AppProfile& profile) {
    for (auto& l : inventory.loops) {
        auto it = profile.loops.find(l.id);
        if (it != profile.loops.end())
            l.trip_count = it->second.iterations;
    }
}

} // namespace offsearch
