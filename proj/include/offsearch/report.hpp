#pragma once

#include <string>

#include "offsearch/orchestrator.hpp"

namespace offsearch {

inline constexpr int kReportSchemaVersion = 1;

// Human-readable stage-by-stage account.
std::string render_report_text(const SearchReport& report);

// Machine-readable JSON Lines: one header record, one record per measured
// pattern, one per stage, one final result record. Deterministic byte-for-byte
// for a given report.
std::string render_report_records(const SearchReport& report);

void write_report_files(const SearchReport& report, const std::string& out_dir);

// Strict read-back: rejects unknown record types, unknown keys and schema
// versions other than kReportSchemaVersion. Returns the number of records.
std::size_t validate_report_records(const std::string& records_text);
std::size_t validate_report_records_file(const std::string& path);

} // namespace offsearch
