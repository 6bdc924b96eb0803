#include "hopfchern/commands.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace hopfchern;
using namespace hopfchern::cli;

namespace {

RunConfig config_for(Family family, int lo, int hi, std::string s = "symbolic") {
  RunConfig c;
  c.family = family;
  c.mu = {lo, hi};
  c.s_text = std::move(s);
  return c;
}

std::string run_chern(const RunConfig& c, int* code = nullptr) {
  std::ostringstream out;
  const int rc = cmd_chern(c, out);
  if (code != nullptr) *code = rc;
  return out.str();
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(HOPFCHERN_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("mu ranges") {
  CHECK(parse_mu_range("-3..3").values() == std::vector<int>{-3, -2, -1, 0, 1, 2, 3});
  CHECK(parse_mu_range("2").values() == std::vector<int>{2});
  CHECK(parse_mu_range("1..0").empty());
  CHECK_THROWS_AS(parse_mu_range("a..b"), ConfigError);
  CHECK_THROWS_AS(parse_mu_range("1..."), ConfigError);
}

TEST_CASE("option parsing") {
  CHECK(parse_mode("both") == Mode::both);
  CHECK(parse_format("csv") == Format::csv);
  CHECK_THROWS_AS(parse_mode("fast"), ConfigError);
  CHECK(parse_verify_list("").empty());
  CHECK(parse_verify_list("quotient,confluence") == std::set<std::string>{"confluence", "quotient"});
  CHECK_THROWS_AS(parse_verify_list("everything"), ConfigError);
}

TEST_CASE("inconsistent settings") {
  RunConfig c = config_for(Family::podles, -1, 1);
  c.mode = Mode::numeric;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c.s_text = "1/2";
  CHECK_NOTHROW(c.validate());
  c.s_text = "3/2";
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c.s_text = "1/2";
  c.jobs = 0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("generator family records") {
  const auto records = compute_records(config_for(Family::heegaard, -3, 3));
  REQUIRE(records.size() == 7);
  for (int i = 0; i < 7; ++i) {
    CAPTURE(i);
    CHECK(records[i].mu == i - 3);
    REQUIRE(records[i].chern.has_value());
    CHECK(*records[i].chern == BigInt(i - 3));
    CHECK(records[i].rank == "1");
    CHECK(records[i].passed(Mode::exact));
  }
}

TEST_CASE("both modes at a rational deformation") {
  RunConfig c = config_for(Family::podles, -2, 2, "1/2");
  c.mode = Mode::both;
  int code = -1;
  const std::string text = run_chern(c, &code);
  CHECK(code == 0);
  for (const auto& r : compute_records(c)) {
    REQUIRE(r.numeric.has_value());
    CHECK(r.numeric_ok());
    CHECK(r.passed(Mode::both));
  }
  CHECK(text.find("mu=2") != std::string::npos);
}

TEST_CASE("parallel runs are identical") {
  RunConfig c = config_for(Family::podles, -2, 2, "1/2");
  c.format = Format::json;
  const std::string serial = run_chern(c);
  c.jobs = 2;
  CHECK(run_chern(c) == serial);
}

TEST_CASE("golden reports") {
  RunConfig h = config_for(Family::heegaard, -2, 2);
  h.format = Format::json;
  CHECK(run_chern(h) == golden("heegaard_mu-2..2.json"));
  RunConfig p = config_for(Family::podles, -2, 2, "1/2");
  p.format = Format::json;
  CHECK(run_chern(p) == golden("podles_s1-2_mu-2..2.json"));
}

TEST_CASE("csv and table output") {
  RunConfig c = config_for(Family::podles, -1, 1, "1");
  c.format = Format::csv;
  const std::string csv = run_chern(c);
  CHECK(csv.rfind("family,mu,s,rank,chern,exact_expr,verified,elapsed_ms\n", 0) == 0);
  CHECK(csv.find("podles,-1,1,1,-1,") != std::string::npos);

  c.format = Format::text;
  std::ostringstream table;
  CHECK(cmd_table(c, table) == 0);
  const std::string rows = table.str();
  CHECK(rows.find("(1, -1)") != std::string::npos);
  CHECK(rows.find("(1, 0)") != std::string::npos);
  CHECK(rows.find("(1, 1)") != std::string::npos);
}

TEST_CASE("empty range") {
  RunConfig c = config_for(Family::heegaard, 1, 0);
  c.format = Format::json;
  int code = -1;
  const auto doc = nlohmann::json::parse(run_chern(c, &code));
  CHECK(code == 0);
  CHECK(doc["records"].empty());
}

TEST_CASE("verification suites") {
  RunConfig c = config_for(Family::podles, -1, 1, "1/3");
  c.verify = {"quotient", "confluence"};
  c.degree = 3;
  const auto rows = run_verification(c);
  REQUIRE_FALSE(rows.empty());
  for (const auto& row : rows) {
    CAPTURE(row.subject);
    CHECK(row.passed);
  }
  std::ostringstream out;
  CHECK(cmd_verify(c, out) == 0);
}

TEST_CASE("budget fallback samples the deformation") {
  RunConfig c = config_for(Family::podles, 3, 3);
  c.time_budget_secs = 0.001;
  const auto records = compute_records(c);
  REQUIRE(records.size() == fallback_s_values().size());
  for (const auto& r : records) {
    CHECK(r.s_fallback);
    CHECK(r.passed(Mode::exact));
  }
}
