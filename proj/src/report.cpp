#include "offsearch/report.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "offsearch/errors.hpp"

namespace offsearch {

using nlohmann::json;

namespace {

std::string hex64(std::uint64_t v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

} // namespace

std::string render_report_text(const SearchReport& report) {
    std::ostringstream out;
    out << "offload search report\n";
    out << "source: " << report.source_path << " (checksum " << hex64(report.source_checksum)
        << ")\n";
    out << "seed: " << report.rng_seed << "\n";
    out << "baseline: " << report.baseline.time_seconds << " s (single core, no offload)\n\n";
    out << "stages (fixed verification order):\n";
    for (const auto& s : report.stages) {
        out << "  [" << s.stage_index + 1 << "] " << stage_name(s.id);
        if (s.skipped) {
            out << " -- skipped (" << s.skip_reason << ")\n";
            continue;
        }
        out << " on " << s.device_name << " (price " << s.device_price << ")\n";
        if (s.id.method == OffloadMethod::Loops)
            out << "      gene length: " << s.gene_length << "\n";
        if (!s.narrow_stage1.empty()) {
            auto join = [](const std::vector<int>& v) {
                std::string j;
                for (int id : v)
                    j += (j.empty() ? "" : ",") + std::to_string(id);
                return j;
            };
            out << "      narrowing: intensity*count -> [" << join(s.narrow_stage1)
                << "], resource efficiency -> [" << join(s.narrow_stage2) << "]\n";
        }
        out << "      measured patterns: " << s.log.size() << "\n";
        if (const MeasuredPattern* best = s.best()) {
            out << "      best: " << best->pattern.label() << " -> "
                << best->measurement.time_seconds << " s ("
                << to_string(best->measurement.status) << ")";
            if (s.has_ok_best())
                out << ", improvement " << s.improvement << "x";
            if (s.fallback_to_baseline)
                out << " [no faster than baseline]";
            out << "\n";
        } else if (s.log.empty()) {
            out << "      no candidates\n";
        } else {
            out << "      no ok pattern\n";
        }
        out << "      verification wall cost: " << s.wall_cost_seconds << " s\n";
    }
    out << "\n";
    if (report.offload_chosen) {
        const auto& chosen = report.stages[static_cast<std::size_t>(report.chosen_stage_index)];
        out << "chosen: " << stage_name(chosen.id) << " on " << report.chosen_device << ", pattern "
            << report.chosen_pattern->label() << "\n";
        out << "final improvement: " << report.final_improvement << "x\n";
    } else {
        out << "chosen: no offload (nothing beat the single-core baseline)\n";
        out << "final improvement: 1.0x\n";
    }
    out << "total verification wall cost: " << report.total_wall_cost_seconds << " s\n";
    return out.str();
}

std::string render_report_records(const SearchReport& report) {
    std::ostringstream out;
    {
        json h;
        h["record"] = "header";
        h["schema_version"] = kReportSchemaVersion;
        h["source"] = report.source_path;
        h["checksum"] = hex64(report.source_checksum);
        h["seed"] = report.rng_seed;
        h["baseline_seconds"] = report.baseline.time_seconds;
        out << h.dump() << "\n";
    }
    for (const auto& s : report.stages) {
        for (const auto& mp : s.log) {
            json m;
            m["record"] = "measurement";
            m["stage"] = s.stage_index;
            m["pattern"] = mp.pattern.label();
            m["method"] = to_string(mp.pattern.method);
            m["time_seconds"] = mp.measurement.time_seconds;
            m["status"] = to_string(mp.measurement.status);
            m["fitness"] = mp.fitness;
            m["generation"] = mp.generation;
            out << m.dump() << "\n";
        }
        json sj;
        sj["record"] = "stage";
        sj["index"] = s.stage_index;
        sj["device"] = to_string(s.id.device);
        sj["method"] = to_string(s.id.method);
        sj["device_name"] = s.device_name;
        sj["skipped"] = s.skipped;
        sj["skip_reason"] = s.skip_reason;
        sj["gene_length"] = s.gene_length;
        sj["measured"] = s.log.size();
        sj["best_pattern"] = s.best_index ? s.best()->pattern.label() : "";
        sj["best_time_seconds"] = s.best_index ? s.best()->measurement.time_seconds : 0.0;
        sj["best_status"] = s.best_index ? to_string(s.best()->measurement.status) : "";
        sj["improvement"] = s.improvement;
        sj["price"] = s.device_price;
        sj["fallback_to_baseline"] = s.fallback_to_baseline;
        sj["wall_cost_seconds"] = s.wall_cost_seconds;
        sj["narrow_stage1"] = s.narrow_stage1;
        sj["narrow_stage2"] = s.narrow_stage2;
        out << sj.dump() << "\n";
    }
    {
        json r;
        r["record"] = "result";
        r["offload"] = report.offload_chosen;
        r["chosen_stage"] = report.chosen_stage_index;
        r["chosen_device"] = report.chosen_device;
        r["chosen_method"] =
            report.chosen_pattern ? to_string(report.chosen_pattern->method) : "";
        r["chosen_pattern"] = report.chosen_pattern ? report.chosen_pattern->label() : "";
        r["improvement"] = report.final_improvement;
        r["total_wall_cost_seconds"] = report.total_wall_cost_seconds;
        out << r.dump() << "\n";
    }
    return out.str();
}

void write_report_files(const SearchReport& report, const std::string& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec)
        throw InfrastructureError("cannot create output directory " + out_dir + ": " +
                                  ec.message());
    {
        std::ofstream f(out_dir + "/report.txt", std::ios::binary);
        if (!f)
            throw InfrastructureError("cannot write report.txt under " + out_dir);
        f << render_report_text(report);
    }
    {
        std::ofstream f(out_dir + "/report.records.jsonl", std::ios::binary);
        if (!f)
            throw InfrastructureError("cannot write report.records.jsonl under " + out_dir);
        f << render_report_records(report);
    }
    {
        std::string name = report.source_path;
        if (std::size_t slash = name.find_last_of('/'); slash != std::string::npos)
            name = name.substr(slash + 1);
        std::ofstream f(out_dir + "/rewritten_" + name, std::ios::binary);
        if (!f)
            throw InfrastructureError("cannot write rewritten source under " + out_dir);
        f << report.chosen_source_text;
    }
}

namespace {

const std::map<std::string, std::set<std::string>>& allowed_keys() {
    static const std::map<std::string, std::set<std::string>> keys = {
        {"header", {"record", "schema_version", "source", "checksum", "seed", "baseline_seconds"}},
        {"measurement",
         {"record", "stage", "pattern", "method", "time_seconds", "status", "fitness",
          "generation"}},
        {"stage",
         {"record", "index", "device", "method", "device_name", "skipped", "skip_reason",
          "gene_length", "measured", "best_pattern", "best_time_seconds", "best_status",
          "improvement", "price", "fallback_to_baseline", "wall_cost_seconds", "narrow_stage1",
          "narrow_stage2"}},
        {"result",
         {"record", "offload", "chosen_stage", "chosen_device", "chosen_method", "chosen_pattern",
          "improvement", "total_wall_cost_seconds"}},
    };
    return keys;
}

} // namespace

std::size_t validate_report_records(const std::string& records_text) {
    std::istringstream in(records_text);
    std::string line;
    std::size_t count = 0;
    bool header_seen = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw InfrastructureError("records line " + std::to_string(lineno) +
                                      ": not valid JSON: " + e.what());
        }
        if (!j.is_object() || !j.contains("record"))
            throw InfrastructureError("records line " + std::to_string(lineno) +
                                      ": missing 'record' key");
        std::string kind = j.at("record").get<std::string>();
        auto it = allowed_keys().find(kind);
        if (it == allowed_keys().end())
            throw InfrastructureError("records line " + std::to_string(lineno) +
                                      ": unknown record type '" + kind + "'");
        for (const auto& [key, value] : j.items())
            if (!it->second.count(key))
                throw InfrastructureError("records line " + std::to_string(lineno) +
                                          ": unknown key '" + key + "' in '" + kind + "' record");
        if (kind == "header") {
            if (header_seen || count != 0)
                throw InfrastructureError("records line " + std::to_string(lineno) +
                                          ": header must be the first and only header record");
            header_seen = true;
            int version = j.at("schema_version").get<int>();
            if (version != kReportSchemaVersion)
                throw InfrastructureError("unsupported report schema version " +
                                          std::to_string(version));
        }
        ++count;
    }
    if (!header_seen)
        throw InfrastructureError("records file has no header record");
    return count;
}

std::size_t validate_report_records_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InfrastructureError("cannot read records file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return validate_report_records(ss.str());
}

} // namespace offsearch
