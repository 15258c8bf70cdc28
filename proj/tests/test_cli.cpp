#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace std::string_literals;
namespace fs = std::filesystem;

namespace {

const std::string kCli = OFFSEARCH_CLI_PATH;
const std::string kScenarios = OFFSEARCH_SCENARIO_DIR;

struct CmdOut {
    int exit_code;
    std::string output;
};

CmdOut run_cli(const std::string& args) {
    fs::path tmp = fs::temp_directory_path() / "offsearch_cli_out.txt";
    std::string cmd = kCli + " " + args + " > " + tmp.string() + " 2>&1";
    int rc = std::system(cmd.c_str());
    std::ifstream f(tmp);
    std::ostringstream ss;
    ss << f.rdbuf();
    return {WEXITSTATUS(rc), ss.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("scan reports the published loop counts") {
    CmdOut r = run_cli("scan --config " + kScenarios + "/3mm/config.json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("20 loops, 18 parallel candidates") != std::string::npos);

    CmdOut bt = run_cli("scan --config " + kScenarios + "/nasbt/config.json");
    CHECK(bt.exit_code == 0);
    CHECK(bt.output.find("179 loops, 120 parallel candidates") != std::string::npos);

    CmdOut fir = run_cli("scan --config " + kScenarios + "/tdfir/config.json");
    CHECK(fir.exit_code == 0);
    CHECK(fir.output.find("6 loops, 6 parallel candidates") != std::string::npos);
}

TEST_CASE("run exits zero and names the chosen pattern") {
    fs::path out = fs::temp_directory_path() / "offsearch_cli_run";
    fs::remove_all(out);
    CmdOut r = run_cli("run --config " + kScenarios + "/tdfir/config.json --out " + out.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("fpga function-block") != std::string::npos);
    CHECK(fs::exists(out / "report.txt"));
    CHECK(fs::exists(out / "report.records.jsonl"));
    CHECK(fs::exists(out / "rewritten_tdfir.c"));
    CHECK(slurp(out / "rewritten_tdfir.c").find("td_fir_fpga_accel()") != std::string::npos);
    fs::remove_all(out);
}

TEST_CASE("two runs with the same config and seed write identical records") {
    fs::path a = fs::temp_directory_path() / "offsearch_cli_a";
    fs::path b = fs::temp_directory_path() / "offsearch_cli_b";
    fs::remove_all(a);
    fs::remove_all(b);
    CHECK(run_cli("run --config " + kScenarios + "/tdfir/config.json --out " + a.string())
              .exit_code == 0);
    CHECK(run_cli("run --config " + kScenarios + "/tdfir/config.json --out " + b.string())
              .exit_code == 0);
    CHECK(slurp(a / "report.records.jsonl") == slurp(b / "report.records.jsonl"));
    CHECK_FALSE(slurp(a / "report.records.jsonl").empty());
    fs::remove_all(a);
    fs::remove_all(b);
}

TEST_CASE("a config without devices exits nonzero naming the problem") {
    fs::path cfg = fs::temp_directory_path() / "offsearch_cli_nodev.json";
    {
        std::ofstream f(cfg);
        f << R"({"sources": [")" << kScenarios << R"(/tdfir/tdfir.c"], "devices": []})";
    }
    CmdOut r = run_cli("run --config " + cfg.string());
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("no devices") != std::string::npos);
    fs::remove(cfg);
}

TEST_CASE("a search that finds nothing profitable still exits zero") {
    fs::path dir = fs::temp_directory_path() / "offsearch_cli_flat";
    fs::remove_all(dir);
    fs::create_directories(dir);
    {
        std::ofstream f(dir / "app.c");
        f << "static double a[8];\nint main(void)\n{\n    int i;\n"
             "    for (i = 0; i < 8; i++)\n        a[i] = i;\n    return 0;\n}\n";
    }
    {
        std::ofstream f(dir / "app.profile");
        f << "0 8 1.0 0.0 1e9 1 0 50\n"; // nothing to gain anywhere
    }
    {
        std::ofstream f(dir / "config.json");
        f << R"({"sources": ["app.c"], "profile": "app.profile",
                 "output_dir": ")" << (dir / "out").string() << R"(",
                 "rng_seed": 1,
                 "devices": [
                   {"kind": "many-core-cpu", "price": 100, "cores": 4},
                   {"kind": "gpu", "price": 100, "cores": 64, "transfer_cost_per_byte": 1e-9},
                   {"kind": "fpga", "price": 100, "pipeline_depth": 4, "resource_capacity": 10,
                    "invocation_latency_seconds": 0.5}
                 ]})";
    }
    CmdOut r = run_cli("run --config " + (dir / "config.json").string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("no offload") != std::string::npos);
    CHECK(r.output.find("final improvement: 1.0x") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("inspection subcommands run clean on the shipped scenarios") {
    CHECK(run_cli("ga --config " + kScenarios + "/tdfir/config.json --device many-core-cpu")
              .exit_code == 0);
    CmdOut n = run_cli("narrow --config " + kScenarios + "/tdfir/config.json");
    CHECK(n.exit_code == 0);
    CHECK(n.output.find("stage 2") != std::string::npos);
    CmdOut m = run_cli("match --config " + kScenarios + "/tdfir/config.json");
    CHECK(m.exit_code == 0);
    CHECK(m.output.find("td_fir") != std::string::npos);
}
