#include "hopfchern/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace hopfchern::cli {

namespace {

constexpr double kNumericSlack = 1e-9;

std::string bool_text(std::optional<bool> b) {
  if (!b) return "";
  return *b ? "true" : "false";
}

std::string fixed_ms(double ms) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << ms;
  return os.str();
}

std::string checks_text(const std::map<std::string, bool>& checks) {
  std::string out;
  for (const auto& [name, ok] : checks) {
    if (!out.empty()) out += " ";
    out += name + (ok ? "=pass" : "=FAIL");
  }
  return out;
}

}  // namespace

bool ChernRecord::numeric_ok() const {
  return numeric && std::abs(numeric->estimate - mu) <= numeric->tail_bound + kNumericSlack;
}

std::optional<bool> ChernRecord::verified() const {
  if (checks.empty()) return std::nullopt;
  for (const auto& [name, ok] : checks) {
    if (!ok) return false;
  }
  return true;
}

bool ChernRecord::passed(Mode mode) const {
  if (!error.empty() || verified() == std::optional<bool>(false)) return false;
  if (mode != Mode::numeric && !(chern && *chern == mu && rank == std::optional<std::string>("1"))) return false;
  if (mode != Mode::exact && !numeric_ok()) return false;
  return true;
}

nlohmann::json ChernRecord::to_json(Mode mode) const {
  nlohmann::json j = {{"family", family_name(family)}, {"mu", mu}, {"s", s}};
  if (s_fallback) j["s_fallback"] = true;
  if (mode != Mode::numeric) {
    if (rank) j["rank"] = *rank;
    if (chern) j["chern"] = chern->get_si();
    j["exact_expr"] = exact_expr;
    j["trace_element"] = trace_element;
    if (base_expression) j["base_expression"] = *base_expression;
  }
  if (numeric) {
    j["numeric"] = {{"estimate", numeric->estimate}, {"tail_bound", numeric->tail_bound}, {"agrees", numeric_ok()}};
  }
  if (!checks.empty()) j["checks"] = checks;
  if (auto v = verified()) j["verified"] = *v;
  if (!error.empty()) j["error"] = error;
  j["passed"] = passed(mode);
  return j;
}

nlohmann::json meta_json(const RunConfig& config) {
  return {{"version", HOPFCHERN_VERSION}, {"config", config.to_json()}};
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_chern(std::ostream& out, const RunConfig& config, const std::vector<ChernRecord>& records) {
  switch (config.format) {
    case Format::json: {
      nlohmann::json meta = meta_json(config);
      nlohmann::json list = nlohmann::json::array();
      nlohmann::json timings = nlohmann::json::array();
      for (const auto& r : records) {
        list.push_back(r.to_json(config.mode));
        timings.push_back({{"mu", r.mu}, {"s", r.s}, {"elapsed_ms", r.elapsed_ms}});
      }
      if (config.timings) meta["timings"] = timings;
      out << nlohmann::json{{"meta", meta}, {"records", list}}.dump(2) << "\n";
      break;
    }
    case Format::csv:
      out << "family,mu,s,rank,chern,exact_expr,verified,elapsed_ms\n";
      for (const auto& r : records) {
        out << family_name(r.family) << ',' << r.mu << ',' << csv_field(r.s) << ',' << csv_field(r.rank.value_or(""))
            << ',' << (r.chern ? r.chern->get_str() : "") << ',' << csv_field(r.exact_expr) << ','
            << bool_text(r.verified()) << ',' << (config.timings ? fixed_ms(r.elapsed_ms) : "") << "\n";
      }
      break;
    case Format::text:
      for (const auto& r : records) {
        out << family_name(r.family) << " mu=" << r.mu;
        if (r.family == Family::podles) out << " s=" << r.s << (r.s_fallback ? " (sampled)" : "");
        if (config.mode != Mode::numeric) {
          out << " rank=" << r.rank.value_or("?") << " chern=" << (r.chern ? r.chern->get_str() : "?")
              << " pairing=" << r.exact_expr;
        }
        if (r.numeric) out << " numeric=" << r.numeric->estimate << " (tail " << r.numeric->tail_bound << ")";
        if (!r.checks.empty()) out << " [" << checks_text(r.checks) << "]";
        if (config.timings) out << " " << fixed_ms(r.elapsed_ms) << "ms";
        if (!r.error.empty()) out << " error: " << r.error;
        out << (r.passed(config.mode) ? "  ok" : "  FAIL") << "\n";
      }
      break;
  }
}

void write_table(std::ostream& out, const RunConfig& config, const std::vector<ChernRecord>& records) {
  switch (config.format) {
    case Format::json: {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& r : records) {
        nlohmann::json row = {{"family", family_name(r.family)}, {"mu", r.mu}, {"s", r.s}};
        if (r.rank) row["rank"] = *r.rank;
        if (r.chern) row["chern"] = r.chern->get_si();
        if (!r.error.empty()) row["error"] = r.error;
        rows.push_back(row);
      }
      out << nlohmann::json{{"meta", meta_json(config)}, {"records", rows}}.dump(2) << "\n";
      break;
    }
    case Format::csv:
      out << "family,mu,s,rank,chern\n";
      for (const auto& r : records) {
        out << family_name(r.family) << ',' << r.mu << ',' << csv_field(r.s) << ',' << csv_field(r.rank.value_or(""))
            << ',' << (r.chern ? r.chern->get_str() : "") << "\n";
      }
      break;
    case Format::text:
      for (const auto& r : records) {
        out << "(" << r.rank.value_or("?") << ", " << (r.chern ? r.chern->get_str() : "?") << ")  "
            << family_name(r.family) << " mu=" << r.mu;
        if (r.family == Family::podles) out << " s=" << r.s;
        if (!r.error.empty()) out << " error: " << r.error;
        out << "\n";
      }
      break;
  }
}

void write_verify(std::ostream& out, const RunConfig& config, const std::vector<VerifyRow>& rows) {
  switch (config.format) {
    case Format::json: {
      nlohmann::json meta = meta_json(config);
      nlohmann::json list = nlohmann::json::array();
      nlohmann::json timings = nlohmann::json::array();
      for (const auto& r : rows) {
        list.push_back({{"suite", r.suite}, {"subject", r.subject}, {"passed", r.passed}, {"detail", r.detail}});
        timings.push_back({{"suite", r.suite}, {"subject", r.subject}, {"elapsed_ms", r.elapsed_ms}});
      }
      if (config.timings) meta["timings"] = timings;
      out << nlohmann::json{{"meta", meta}, {"records", list}}.dump(2) << "\n";
      break;
    }
    case Format::csv:
      out << "suite,subject,passed,detail,elapsed_ms\n";
      for (const auto& r : rows) {
        out << r.suite << ',' << csv_field(r.subject) << ',' << (r.passed ? "true" : "false") << ','
            << csv_field(r.detail) << ',' << (config.timings ? fixed_ms(r.elapsed_ms) : "") << "\n";
      }
      break;
    case Format::text: {
      std::size_t width = 0;
      for (const auto& r : rows) width = std::max(width, r.suite.size() + r.subject.size() + 1);
      for (const auto& r : rows) {
        const std::string label = r.suite + " " + r.subject;
        out << (r.passed ? "PASS  " : "FAIL  ") << label << std::string(width - label.size() + 2, ' ') << r.detail;
        if (config.timings) out << "  (" << fixed_ms(r.elapsed_ms) << "ms)";
        out << "\n";
      }
      break;
    }
  }
}

}  // namespace hopfchern::cli
