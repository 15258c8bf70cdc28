#include "offsearch/external.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <signal.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include "offsearch/errors.hpp"

namespace offsearch {

namespace fs = std::filesystem;

CommandResult run_command(const std::string& shell_command, double timeout_seconds) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();

    pid_t pid = fork();
    if (pid < 0)
        throw InfrastructureError("fork failed");
    if (pid == 0) {
        setpgid(0, 0); // own process group so the timeout kill reaps children
        execl("/bin/sh", "sh", "-c", shell_command.c_str(), static_cast<char*>(nullptr));
        _exit(127);
    }
    setpgid(pid, pid);

    CommandResult r;
    int status = 0;
    for (;;) {
        pid_t done = waitpid(pid, &status, WNOHANG);
        if (done == pid)
            break;
        if (done < 0)
            throw InfrastructureError("waitpid failed");
        double elapsed = std::chrono::duration<double>(clock::now() - start).count();
        if (timeout_seconds > 0.0 && elapsed >= timeout_seconds) {
            kill(-pid, SIGKILL);
            waitpid(pid, &status, 0);
            r.timed_out = true;
            break;
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(2));
    }
    r.wall_seconds = std::chrono::duration<double>(clock::now() - start).count();
    if (!r.timed_out)
        r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string expand_command_template(std::string templ, const std::string& src,
                                    const std::string& exe, const std::string& out,
                                    const std::string& workdir) {
    auto replace_all = [&](const std::string& key, const std::string& value) {
        std::size_t pos = 0;
        while ((pos = templ.find(key, pos)) != std::string::npos) {
            templ.replace(pos, key.size(), value);
            pos += value.size();
        }
    };
    replace_all("{src}", src);
    replace_all("{exe}", exe);
    replace_all("{out}", out);
    replace_all("{workdir}", workdir);
    return templ;
}

namespace {

std::string read_file_or_empty(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return {};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string digest_of(const std::string& blob) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(blob)));
    return buf;
}

} // namespace

ExternalEvaluator::ExternalEvaluator(SourceUnit unit, LoopInventory inventory, DeviceSpec device,
                                     std::string work_root, std::string directive_line,
                                     double tolerance)
    : unit_(std::move(unit)), inventory_(std::move(inventory)), device_(std::move(device)),
      work_root_(std::move(work_root)), directive_line_(std::move(directive_line)),
      tolerance_(tolerance) {
    if (device_.compile_cmd.empty() || device_.run_cmd.empty())
        throw InfrastructureError("external backend needs compile_cmd and run_cmd for device '" +
                                  device_.name + "'");
}

Measurement ExternalEvaluator::run_in(const std::string& dir, const SourceUnit& source) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw InfrastructureError("cannot create work directory " + dir + ": " + ec.message());

    std::string src = dir + "/source.c";
    std::string exe = dir + "/prog";
    std::string out = dir + "/out.txt";
    {
        std::ofstream f(src, std::ios::binary);
        if (!f)
            throw InfrastructureError("cannot write " + src);
        f << source.text;
    }

    Measurement m;
    CommandResult comp = run_command(
        expand_command_template(device_.compile_cmd, src, exe, out, dir), 0.0);
    m.wall_cost_seconds += comp.wall_seconds;
    if (comp.exit_code != 0) {
        m.status = MeasureStatus::CompileFail;
        return m;
    }

    std::string run_cmd = device_.run_cmd;
    if (run_cmd.find("{out}") == std::string::npos)
        run_cmd += " > {out}"; // program output is the correctness witness
    CommandResult run = run_command(expand_command_template(run_cmd, src, exe, out, dir),
                                    device_.timeout_seconds);
    m.wall_cost_seconds += run.wall_seconds;
    m.time_seconds = run.wall_seconds;
    if (run.timed_out) {
        m.status = MeasureStatus::Timeout;
        return m;
    }
    if (run.exit_code != 0) {
        m.status = MeasureStatus::WrongResult;
        return m;
    }
    std::string blob = read_file_or_empty(out);
    m.output_digest = digest_of(blob);
    m.output_values = parse_numeric_output(blob);
    m.status = MeasureStatus::Ok;
    return m;
}

BaselineResult ExternalEvaluator::measure_baseline() {
    Measurement m = run_in(work_root_ + "/baseline", unit_);
    if (m.status != MeasureStatus::Ok)
        throw BaselineFailure("baseline run failed with status " + to_string(m.status) +
                              " on device '" + device_.name + "'");
    BaselineResult b;
    b.time_seconds = m.time_seconds;
    b.output_digest = m.output_digest;
    b.output_values = m.output_values;
    baseline_ = b;
    return b;
}

Measurement ExternalEvaluator::evaluate(const OffloadPattern& pattern) {
    if (!baseline_)
        throw InfrastructureError("external evaluator used before a baseline was set");

    SourceUnit rewritten = unit_;
    std::string dir;
    if (pattern.method == OffloadMethod::Loops) {
        rewritten = insert_parallel_directives(unit_, inventory_, pattern.bits, directive_line_);
        dir = work_root_ + "/p_" + gene_to_string(pattern.bits);
    } else {
        FunctionBlockSite site;
        site.id = pattern.site_id;
        site.callee_name = pattern.block_name;
        site.span = pattern.site_span;
        site.callee_body_span = pattern.block_body_span;
        std::size_t args_open = unit_.text.find('(', pattern.site_span.begin);
        if (args_open != std::string::npos && args_open < pattern.site_span.end)
            site.call_args = unit_.text.substr(args_open + 1,
                                               pattern.site_span.end - 1 - (args_open + 1));
        rewritten = substitute_function_block(unit_, inventory_, site, pattern.entry_point).unit;
        dir = work_root_ + "/b_" + pattern.block_name + "_" + std::to_string(pattern.site_id);
    }

    Measurement m = run_in(dir, rewritten);
    if (m.status == MeasureStatus::Ok &&
        !outputs_match(m.output_values, m.output_digest, *baseline_, tolerance_))
        m.status = MeasureStatus::WrongResult;
    return m;
}

} // namespace offsearch
