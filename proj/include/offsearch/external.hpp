#pragma once

#include <string>

#include "offsearch/evaluators.hpp"

namespace offsearch {

struct CommandResult {
    int exit_code = -1;
    bool timed_out = false;
    double wall_seconds = 0.0;
};

// Runs `shell_command` through /bin/sh in its own process group; the whole
// group is killed once timeout_seconds elapse. timeout_seconds <= 0 disables
// the deadline.
CommandResult run_command(const std::string& shell_command, double timeout_seconds);

// Fills {src} {exe} {out} {workdir} placeholders.
std::string expand_command_template(std::string templ, const std::string& src,
                                    const std::string& exe, const std::string& out,
                                    const std::string& workdir);

} // namespace offsearch
