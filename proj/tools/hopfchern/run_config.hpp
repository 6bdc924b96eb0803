#pragma once

#include "hopfchern/connection.hpp"

#include <optional>
#include <set>
#include <string>

namespace hopfchern::cli {

/// Bad flag values; exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

enum class Mode { exact, numeric, both };
enum class Format { json, csv, text };

struct MuRange {
  int lo = -2;
  int hi = 2;
  [[nodiscard]] bool empty() const { return lo > hi; }
  [[nodiscard]] std::vector<int> values() const;
};

struct RunConfig {
  Family family = Family::heegaard;
  MuRange mu;
  /// "symbolic" or a rational.
  std::string s_text = "symbolic";
  Mode mode = Mode::exact;
  std::string p_text = "1/3";
  std::string q_text = "1/2";
  int truncation = 64;
  int jobs = 1;
  Format format = Format::text;
  std::string out;
  std::set<std::string> verify;
  double time_budget_secs = 300;
  int degree = 4;
  bool timings = false;

  [[nodiscard]] bool symbolic_s() const { return s_text == "symbolic"; }
  /// The variable s or the parsed rational.
  [[nodiscard]] RF s() const;
  [[nodiscard]] ParamPoint numeric_params(const RF& s) const;
  [[nodiscard]] nlohmann::json to_json() const;
  /// Throws ConfigError on inconsistent settings.
  void validate() const;
};

MuRange parse_mu_range(const std::string& text);
Mode parse_mode(const std::string& text);
Format parse_format(const std::string& text);
std::string mode_name(Mode m);
std::string format_name(Format f);

inline const std::set<std::string>& verify_suites() {
  static const std::set<std::string> names = {"confluence", "connection", "idempotent", "quotient",
                                              "representations"};
  return names;
}
std::set<std::string> parse_verify_list(const std::string& text);

}  // namespace hopfchern::cli
