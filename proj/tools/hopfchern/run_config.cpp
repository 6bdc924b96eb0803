#include "hopfchern/run_config.hpp"

#include <charconv>

namespace hopfchern::cli {

namespace {

int parse_int(std::string_view text, const std::string& what) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ConfigError("invalid " + what + " '" + std::string(text) + "'");
  return value;
}

BigRational parse_param(const std::string& text, const std::string& name) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw ConfigError("invalid rational for --" + name + ": '" + text + "'");
  }
}

}  // namespace

std::vector<int> MuRange::values() const {
  std::vector<int> out;
  for (int mu = lo; mu <= hi; ++mu) out.push_back(mu);
  return out;
}

MuRange parse_mu_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int mu = parse_int(text, "winding number");
    return {mu, mu};
  }
  return {parse_int(std::string_view(text).substr(0, dots), "range start"),
          parse_int(std::string_view(text).substr(dots + 2), "range end")};
}

Mode parse_mode(const std::string& text) {
  if (text == "exact") return Mode::exact;
  if (text == "numeric") return Mode::numeric;
  if (text == "both") return Mode::both;
  throw ConfigError("unknown mode '" + text + "'");
}

Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "text") return Format::text;
  throw ConfigError("unknown format '" + text + "'");
}

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::exact: return "exact";
    case Mode::numeric: return "numeric";
    default: return "both";
  }
}

std::string format_name(Format f) {
  switch (f) {
    case Format::json: return "json";
    case Format::csv: return "csv";
    default: return "text";
  }
}

std::set<std::string> parse_verify_list(const std::string& text) {
  std::set<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string name = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!name.empty()) {
      if (verify_suites().count(name) == 0) throw ConfigError("unknown verification suite '" + name + "'");
      out.insert(name);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

RF RunConfig::s() const {
  if (symbolic_s()) return RF::var(Var::s);
  return RF(parse_param(s_text, "s"));
}

ParamPoint RunConfig::numeric_params(const RF& s_value) const {
  ParamPoint at{{Var::q, parse_param(q_text, "q")}};
  if (family == Family::heegaard) {
    at.emplace(Var::p, parse_param(p_text, "p"));
  } else {
    at.emplace(Var::s, s_value.constant_value());
  }
  return at;
}

void RunConfig::validate() const {
  if (!symbolic_s()) {
    const BigRational s_value = parse_param(s_text, "s");
    if (s_value < 0 || s_value > 1) throw ConfigError("--s must lie in [0,1]");
  }
  if (mode != Mode::exact) {
    if (family == Family::podles && symbolic_s()) throw ConfigError("numeric mode needs a rational --s");
    const BigRational q = parse_param(q_text, "q");
    if (q <= 0 || q >= 1) throw ConfigError("--q must lie in ]0,1[");
    if (family == Family::heegaard) {
      const BigRational p = parse_param(p_text, "p");
      if (p <= 0 || p >= 1) throw ConfigError("--p must lie in ]0,1[");
    }
  }
  if (truncation < 1) throw ConfigError("--truncation must be positive");
  if (jobs < 1) throw ConfigError("--jobs must be positive");
  if (degree < 1) throw ConfigError("--degree must be positive");
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j = {{"family", family_name(family)},
                      {"mu", {{"from", mu.lo}, {"to", mu.hi}}},
                      {"s", s_text},
                      {"mode", mode_name(mode)},
                      {"verify", verify},
                      {"time_budget_secs", time_budget_secs}};
  if (mode != Mode::exact) {
    j["truncation"] = truncation;
    j["q"] = q_text;
    if (family == Family::heegaard) j["p"] = p_text;
  }
  return j;
}

}  // namespace hopfchern::cli
