#pragma once

#include "hopfchern/report.hpp"

namespace hopfchern::cli {

/// Sample points used when a symbolic-s computation exceeds its budget.
const std::vector<std::string>& fallback_s_values();

/// One record per mu (or per sampled s after a fallback), sorted by mu.
std::vector<ChernRecord> compute_records(const RunConfig& config);
std::vector<VerifyRow> run_verification(const RunConfig& config);

/// Each writes the report to `out` and returns the exit code.
int cmd_chern(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);
int cmd_table(const RunConfig& config, std::ostream& out);

}  // namespace hopfchern::cli
