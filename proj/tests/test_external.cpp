#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <filesystem>
#include <fstream>

#include "offsearch/errors.hpp"
#include "offsearch/external.hpp"

using namespace offsearch;
namespace fs = std::filesystem;

namespace {

const char* kTwoLoops = R"(
int main(void)
{
    double a[8], b[8];
    int i;
    for (i = 0; i < 8; i++)
        a[i] = i * 1.5;
    for (i = 0; i < 8; i++)
        b[i] = a[i] + 0.5;
    return 0;
}
)";

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() / ("offsearch_ext_" + std::to_string(::getpid()));
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    ~TempDir() { fs::remove_all(dir); }
};

DeviceSpec stub_device(const std::string& run_cmd, double timeout = 30.0) {
    DeviceSpec d;
    d.kind = DeviceKind::ManyCoreCpu;
    d.name = "stub";
    d.price = 1.0;
    d.cores = 4;
    d.timeout_seconds = timeout;
    d.compile_cmd = "cp {src} {exe}"; // the stub "compiler" just copies
    d.run_cmd = run_cmd;
    return d;
}

} // namespace

TEST_CASE("command templates expand every placeholder") {
    std::string cmd = expand_command_template("cc {src} -o {exe} && {exe} > {out} # {workdir}",
                                              "s.c", "prog", "o.txt", "/w");
    CHECK(cmd == "cc s.c -o prog && prog > o.txt # /w");
}

TEST_CASE("run_command reports exit codes and wall time") {
    CommandResult ok = run_command("true", 5.0);
    CHECK(ok.exit_code == 0);
    CHECK_FALSE(ok.timed_out);
    CommandResult fail = run_command("exit 3", 5.0);
    CHECK(fail.exit_code == 3);
}

TEST_CASE("run_command kills a sleeping process group at the deadline") {
    auto start = std::chrono::steady_clock::now();
    CommandResult r = run_command("sleep 5", 0.4);
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(r.timed_out);
    CHECK(elapsed < 2.0);
}

TEST_CASE("external evaluator: stub toolchain end to end") {
    TempDir t;
    SourceUnit unit = SourceUnit::from_text("two.c", kTwoLoops);
    LoopInventory inv = scan_loops(unit);
    REQUIRE(inv.gene_length() == 2);

    ExternalEvaluator ev(unit, inv, stub_device("echo 42 > {out}"), (t.dir / "w").string(),
                         "#pragma omp parallel for");
    BaselineResult base = ev.measure_baseline();
    CHECK(base.output_values == std::vector<double>{42.0});

    Measurement m = ev.evaluate(OffloadPattern::loops(DeviceKind::ManyCoreCpu, {1, 0}));
    CHECK(m.status == MeasureStatus::Ok);
    CHECK(m.time_seconds > 0.0);

    // the rewritten source actually landed in the pattern work directory
    std::ifstream written(t.dir / "w" / "p_10" / "source.c");
    REQUIRE(written.good());
    std::string text((std::istreambuf_iterator<char>(written)),
                     std::istreambuf_iterator<char>());
    CHECK(text.find("#pragma omp parallel for") != std::string::npos);
}

TEST_CASE("external evaluator statuses: timeout, compile-fail, wrong-result") {
    TempDir t;
    SourceUnit unit = SourceUnit::from_text("two.c", kTwoLoops);
    LoopInventory inv = scan_loops(unit);

    SUBCASE("a runner sleeping past the deadline times out") {
        ExternalEvaluator ev(unit, inv, stub_device("echo 1 > {out}; sleep 5", 0.5),
                             (t.dir / "to").string(), "#pragma omp parallel for");
        // baseline must not sleep: use a one-shot flag file to keep it fast
        ExternalEvaluator fast(unit, inv, stub_device("echo 1 > {out}"),
                               (t.dir / "to").string(), "#pragma omp parallel for");
        ev.set_baseline(fast.measure_baseline());
        auto start = std::chrono::steady_clock::now();
        Measurement m = ev.evaluate(OffloadPattern::loops(DeviceKind::ManyCoreCpu, {0, 1}));
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        CHECK(m.status == MeasureStatus::Timeout);
        CHECK(elapsed < 0.5 + 2.0); // status within timeout + 2 s
    }
    SUBCASE("a failing compile command is a compile-fail status") {
        DeviceSpec d = stub_device("echo 1 > {out}");
        d.compile_cmd = "false";
        ExternalEvaluator ev(unit, inv, d, (t.dir / "cf").string(), "#pragma");
        ExternalEvaluator fast(unit, inv, stub_device("echo 1 > {out}"),
                               (t.dir / "cf2").string(), "#pragma");
        ev.set_baseline(fast.measure_baseline());
        CHECK(ev.evaluate(OffloadPattern::loops(DeviceKind::ManyCoreCpu, {1, 1})).status ==
              MeasureStatus::CompileFail);
    }
    SUBCASE("output drift beyond tolerance is a wrong result") {
        ExternalEvaluator base_ev(unit, inv, stub_device("echo 100 > {out}"),
                                  (t.dir / "wr").string(), "#pragma");
        BaselineResult base = base_ev.measure_baseline();
        ExternalEvaluator ev(unit, inv, stub_device("echo 101 > {out}"),
                             (t.dir / "wr2").string(), "#pragma", 1e-4);
        ev.set_baseline(base);
        CHECK(ev.evaluate(OffloadPattern::loops(DeviceKind::ManyCoreCpu, {1, 0})).status ==
              MeasureStatus::WrongResult);
        // within tolerance passes
        ExternalEvaluator near(unit, inv, stub_device("echo 100.000001 > {out}"),
                               (t.dir / "wr3").string(), "#pragma", 1e-4);
        near.set_baseline(base);
        CHECK(near.evaluate(OffloadPattern::loops(DeviceKind::ManyCoreCpu, {1, 0})).status ==
              MeasureStatus::Ok);
    }
    SUBCASE("a nonzero runner exit is a wrong result") {
        ExternalEvaluator fast(unit, inv, stub_device("echo 1 > {out}"),
                               (t.dir / "rc").string(), "#pragma");
        BaselineResult base = fast.measure_baseline();
        ExternalEvaluator ev(unit, inv, stub_device("echo 1 > {out}; exit 9"),
                             (t.dir / "rc2").string(), "#pragma");
        ev.set_baseline(base);
        CHECK(ev.evaluate(OffloadPattern::loops(DeviceKind::ManyCoreCpu, {1, 0})).status ==
              MeasureStatus::WrongResult);
    }
}

TEST_CASE("a failing baseline aborts the stage") {
    TempDir t;
    SourceUnit unit = SourceUnit::from_text("two.c", kTwoLoops);
    LoopInventory inv = scan_loops(unit);
    ExternalEvaluator ev(unit, inv, stub_device("exit 1"), (t.dir / "bf").string(), "#pragma");
    CHECK_THROWS_AS(ev.measure_baseline(), BaselineFailure);
}

TEST_CASE("missing command templates are infrastructure errors") {
    TempDir t;
    SourceUnit unit = SourceUnit::from_text("two.c", kTwoLoops);
    LoopInventory inv = scan_loops(unit);
    DeviceSpec d = stub_device("echo 1 > {out}");
    d.compile_cmd.clear();
    CHECK_THROWS_AS(ExternalEvaluator(unit, inv, d, (t.dir / "x").string(), "#p"),
                    InfrastructureError);
}
