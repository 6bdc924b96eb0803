#pragma once

#include "hopfchern/fredholm.hpp"
#include "hopfchern/run_config.hpp"

#include <ostream>

namespace hopfchern::cli {

struct ChernRecord {
  Family family = Family::heegaard;
  int mu = 0;
  std::string s;
  /// Set when the symbolic-s attempt ran out of time and s was sampled.
  bool s_fallback = false;
  std::optional<std::string> rank;
  std::optional<BigInt> chern;
  std::string exact_expr;
  std::string trace_element;
  std::optional<nlohmann::json> base_expression;
  std::map<std::string, bool> checks;
  std::optional<NumericPairing> numeric;
  std::string error;
  double elapsed_ms = 0;

  [[nodiscard]] bool numeric_ok() const;
  /// Empty when no verification was requested.
  [[nodiscard]] std::optional<bool> verified() const;
  [[nodiscard]] bool passed(Mode mode) const;
  [[nodiscard]] nlohmann::json to_json(Mode mode) const;
};

struct VerifyRow {
  std::string suite;
  std::string subject;
  bool passed = false;
  std::string detail;
  double elapsed_ms = 0;
};

nlohmann::json meta_json(const RunConfig& config);

void write_chern(std::ostream& out, const RunConfig& config, const std::vector<ChernRecord>& records);
void write_table(std::ostream& out, const RunConfig& config, const std::vector<ChernRecord>& records);
void write_verify(std::ostream& out, const RunConfig& config, const std::vector<VerifyRow>& rows);

std::string csv_field(const std::string& text);

}  // namespace hopfchern::cli
