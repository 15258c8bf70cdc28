#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace offsearch {

// Thrown by the scanner on unbalanced braces/parens or unreadable input.
struct ScanError : std::runtime_error {
    std::size_t offset;
    ScanError(const std::string& msg, std::size_t at = 0)
        : std::runtime_error(msg), offset(at) {}
};

// Gene length does not match the inventory's candidate count.
struct LengthMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A substitution overlaps a previously replaced region.
struct SpanConflict : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 2^gene_length < population: distinct initial individuals are impossible.
struct InfeasibleDistinct : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Missing toolchain, unwritable work directory, broken command template.
// Aborts a search; per-pattern compile failures are statuses, not errors.
struct InfrastructureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The baseline run failed; there is nothing to compare against.
struct BaselineFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoDevicesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Configuration rejected; carries every violation found, not just the first.
struct ConfigError : std::runtime_error {
    std::vector<std::string> violations;
    explicit ConfigError(std::vector<std::string> errs)
        : std::runtime_error(join(errs)), violations(std::move(errs)) {}

  private:
    static std::string join(const std::vector<std::string>& errs) {
        std::string out = "invalid configuration:";
        for (const auto& e : errs) {
            out += "\n  - ";
            out += e;
        }
        return out;
    }
};

} // namespace offsearch
