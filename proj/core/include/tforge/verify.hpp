#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tforge::verify {

struct Range {
    std::string name;
    std::int64_t lo = 0, hi = 0; // inclusive
};

/// A formula-vs-oracle sweep over a parameter grid.
///
/// Every theorem id takes the parameter names listed by param_names(); each
/// must be covered by one range. Series-valued identities are compared
/// through q^trunc. Tuples whose shape parameters are invalid are dropped
/// from the grid; tuples over the configured caps are recorded as
/// skipped-cap.
struct SweepConfig {
    std::string theorem;
    std::vector<Range> ranges;
    std::int64_t trunc = 8;
    int jobs = 1;
    std::string output; // JSON Lines report path; empty writes no file
};

struct Record {
    std::string theorem;
    std::vector<std::pair<std::string, std::string>> params;
    std::string formula; // formula-side value (decimal string or series text)
    std::string oracle;  // oracle-side value
    std::string status;  // "pass" | "fail" | "skipped-cap"
    std::string note;    // failure detail
};

struct SweepResult {
    std::vector<Record> records;
    std::int64_t passed = 0, failed = 0, skipped = 0;
    bool ok() const { return failed == 0; }
};

/// Registered theorem identifiers.
const std::vector<std::string>& theorem_ids();
/// The grid parameter names a theorem expects, in canonical order.
std::vector<std::string> param_names(const std::string& theorem);

SweepResult run_sweep(const SweepConfig& config);

/// One byte-stable JSON object per record (no timing fields, so repeated
/// runs of the same sweep produce identical files).
std::string to_json_line(const Record& record);

/// Parse "key = value" / "key = lo..hi" sweep files. '#' starts a comment.
SweepConfig parse_config_file(const std::string& path);

} // namespace tforge::verify
