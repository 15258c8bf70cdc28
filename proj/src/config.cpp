#include "offsearch/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "offsearch/errors.hpp"

namespace offsearch {

using nlohmann::json;

std::string to_string(Backend b) {
    return b == Backend::Simulated ? "simulated" : "external";
}

namespace {

std::string dirname_of(const std::string& path) {
    std::size_t slash = path.find_last_of('/');
    return slash == std::string::npos ? "." : path.substr(0, slash);
}

std::string resolve(const std::string& base, const std::string& path) {
    if (path.empty() || path[0] == '/' || base.empty())
        return path;
    return base + "/" + path;
}

DeviceSpec parse_device(const json& j) {
    DeviceSpec d;
    d.kind = device_kind_from_string(j.at("kind").get<std::string>());
    d.name = j.value("name", to_string(d.kind));
    d.price = j.value("price", 0.0);
    d.cores = j.value("cores", 1);
    d.transfer_cost_per_byte = j.value("transfer_cost_per_byte", 0.0);
    d.pipeline_depth = j.value("pipeline_depth", 1);
    d.resource_capacity = j.value("resource_capacity", 0.0);
    d.invocation_latency_seconds = j.value("invocation_latency_seconds", 0.0);
    d.build_cost_seconds = j.value("build_cost_seconds", 10800.0);
    d.timeout_seconds = j.value("timeout_seconds", 180.0);
    d.compile_cmd = j.value("compile_cmd", std::string{});
    d.run_cmd = j.value("run_cmd", std::string{});
    d.verification_time_class = DeviceSpec::default_time_class(d.kind);
    if (j.contains("verification_time_class")) {
        std::string c = j.at("verification_time_class").get<std::string>();
        d.verification_time_class = c == "short"    ? TimeClass::Short
                                    : c == "medium" ? TimeClass::Medium
                                                    : TimeClass::Long;
    }
    return d;
}

} // namespace

RunConfig RunConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError({"cannot read config file: " + path});
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), dirname_of(path));
}

RunConfig RunConfig::parse(const std::string& json_text, const std::string& base_dir) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ConfigError({std::string("config is not valid JSON: ") + e.what()});
    }
    RunConfig c;
    try {
        for (const auto& s : j.value("sources", json::array()))
            c.sources.push_back(resolve(base_dir, s.get<std::string>()));
        if (j.contains("profile"))
            c.profile_path = resolve(base_dir, j.at("profile").get<std::string>());
        if (j.contains("registry"))
            c.registry_path = resolve(base_dir, j.at("registry").get<std::string>());
        std::string backend = j.value("backend", "simulated");
        if (backend == "simulated")
            c.backend = Backend::Simulated;
        else if (backend == "external")
            c.backend = Backend::External;
        else
            throw ConfigError({"backend must be 'simulated' or 'external', got '" + backend + "'"});
        c.output_dir = j.value("output_dir", c.output_dir);
        c.rng_seed = j.value("rng_seed", c.rng_seed);
        c.parallel_workers = j.value("parallel_workers", 1);
        c.correctness_tolerance = j.value("correctness_tolerance", 1e-4);
        c.similarity_threshold = j.value("similarity_threshold", 0.8);
        c.function_blocks_enabled = j.value("function_blocks_enabled", true);
        c.fpga_narrow_k1 = j.value("fpga_narrow_k1", 5);
        c.fpga_narrow_k2 = j.value("fpga_narrow_k2", 3);
        for (const auto& dj : j.value("devices", json::array()))
            c.devices.push_back(parse_device(dj));
        if (j.contains("ga")) {
            const auto& g = j.at("ga");
            c.ga.population = g.value("population", 16);
            c.ga.generations = g.value("generations", 16);
            c.ga.crossover_rate = g.value("crossover_rate", 0.9);
            c.ga.mutation_rate = g.value("mutation_rate", 0.05);
            c.ga.timeout_seconds = g.value("timeout_seconds", 180.0);
            c.ga.penalty_seconds = g.value("penalty_seconds", 1000.0);
        } else {
            c.ga.population = 16;
            c.ga.generations = 16;
        }
        c.ga.rng_seed = c.rng_seed;
        if (j.contains("targets")) {
            const auto& t = j.at("targets");
            if (t.contains("target_time_seconds") && !t.at("target_time_seconds").is_null())
                c.targets.target_time_seconds = t.at("target_time_seconds").get<double>();
            if (t.contains("target_improvement") && !t.at("target_improvement").is_null())
                c.targets.target_improvement = t.at("target_improvement").get<double>();
            if (t.contains("price_budget") && !t.at("price_budget").is_null())
                c.targets.price_budget = t.at("price_budget").get<double>();
        }
        c.dialects[DeviceKind::ManyCoreCpu] = "#pragma omp parallel for";
        c.dialects[DeviceKind::Gpu] = "#pragma acc kernels loop";
        if (j.contains("dialects"))
            for (const auto& [key, val] : j.at("dialects").items())
                c.dialects[device_kind_from_string(key)] = val.get<std::string>();
        for (const auto& f : j.value("pure_functions", json::array()))
            c.extra_pure_functions.push_back(f.get<std::string>());
    } catch (const ConfigError&) {
        throw;
    } catch (const json::exception& e) {
        throw ConfigError({std::string("config field error: ") + e.what()});
    }
    return c;
}

std::vector<std::string> RunConfig::validate() const {
    std::vector<std::string> errs;
    if (sources.empty())
        errs.push_back("no source files given");
    if (sources.size() > 1)
        errs.push_back("exactly one source file per run is supported");
    if (devices.empty())
        errs.push_back("no devices configured");
    for (const auto& d : devices) {
        if (d.price <= 0.0)
            errs.push_back("device '" + d.name + "': price must be > 0");
        if (d.kind != DeviceKind::Fpga && d.cores < 1)
            errs.push_back("device '" + d.name + "': cores must be >= 1");
        if (d.kind == DeviceKind::Fpga && d.pipeline_depth < 1)
            errs.push_back("device '" + d.name + "': pipeline_depth must be >= 1");
        if (backend == Backend::External && (d.compile_cmd.empty() || d.run_cmd.empty()))
            errs.push_back("device '" + d.name +
                           "': external backend requires compile_cmd and run_cmd");
    }
    for (std::size_t i = 0; i < devices.size(); ++i)
        for (std::size_t k = i + 1; k < devices.size(); ++k)
            if (devices[i].kind == devices[k].kind)
                errs.push_back("duplicate device kind: " + to_string(devices[i].kind));
    if (parallel_workers < 1)
        errs.push_back("parallel_workers must be >= 1");
    if (correctness_tolerance < 0.0)
        errs.push_back("correctness_tolerance must be >= 0");
    if (similarity_threshold < 0.0 || similarity_threshold > 1.0)
        errs.push_back("similarity_threshold must be in [0,1]");
    if (fpga_narrow_k1 < 1 || fpga_narrow_k2 < 1)
        errs.push_back("fpga narrowing counts must be >= 1");
    if (ga.crossover_rate < 0.0 || ga.crossover_rate > 1.0)
        errs.push_back("ga.crossover_rate must be in [0,1]");
    if (ga.mutation_rate < 0.0 || ga.mutation_rate > 1.0)
        errs.push_back("ga.mutation_rate must be in [0,1]");
    if (ga.penalty_seconds <= ga.timeout_seconds)
        errs.push_back("ga.penalty_seconds must exceed ga.timeout_seconds");
    return errs;
}

std::string RunConfig::directive_for(DeviceKind kind) const {
    auto it = dialects.find(kind);
    return it == dialects.end() ? std::string{} : it->second;
}

ScanOptions RunConfig::scan_options() const {
    ScanOptions o = ScanOptions::defaults();
    o.pure_functions.insert(o.pure_functions.end(), extra_pure_functions.begin(),
                            extra_pure_functions.end());
    return o;
}

const DeviceSpec* RunConfig::find_device(DeviceKind kind) const {
    for (const auto& d : devices)
        if (d.kind == kind)
            return &d;
    return nullptr;
}

} // namespace offsearch
