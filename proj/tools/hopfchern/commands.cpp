#include "hopfchern/commands.hpp"

#include "hopfchern/budget.hpp"
#include "hopfchern/presentations.hpp"

#include <spdlog/spdlog.h>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>

namespace hopfchern::cli {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (int x : xs) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

bool wants(const RunConfig& config, const std::string& suite) { return config.verify.count(suite) != 0; }

ConnectionValue connection_for(Family family, int mu, const RF& s) {
  return family == Family::heegaard ? ell_family1(mu) : ell_family2(mu, s);
}

std::optional<QuotientBasis> quotient_for(Family family, int mu, const RF& s) {
  if (family == Family::heegaard) return std::nullopt;
  return quotient_basis(s, std::max(1, std::abs(mu)));
}

VerifyRow connection_row(Family family, int mu, const RF& s) {
  const auto qb = quotient_for(family, mu, s);
  const ConnectionReport report = verify_connection(connection_for(family, mu, s), qb ? &*qb : nullptr);
  std::string detail = std::string("contraction ") + (report.contraction_ok ? "ok" : "fails") + ", canonical map " +
                       (report.canonical_ok ? "ok" : "fails") + ", unit " + (report.unit_ok ? "ok" : "fails");
  return {"connection", "mu=" + std::to_string(mu), report.ok(), detail};
}

VerifyRow idempotent_row(Family family, int mu, const RF& s) {
  const auto qb = quotient_for(family, mu, s);
  const IdempotentMatrix e = idempotent(connection_for(family, mu, s), qb ? &*qb : nullptr);
  std::size_t bad = 0;
  for (const auto& r : idempotent_defect(e)) bad += r.is_zero() ? 0 : 1;
  return {"idempotent", "mu=" + std::to_string(mu), bad == 0,
          std::to_string(e.size) + "x" + std::to_string(e.size) + ", " + std::to_string(bad) + " nonzero entries in E^2-E"};
}

std::vector<VerifyRow> confluence_rows() {
  std::vector<VerifyRow> rows;
  for (const Presentation* pres : {&heegaard(), &qsu2(), &podles()}) {
    const auto t0 = Clock::now();
    const auto overlaps = check_confluence(*pres);
    std::size_t bad_relations = 0;
    const auto residuals = relation_residuals(*pres);
    for (const auto& r : residuals) {
      if (!r.residual.is_zero() || !r.star_residual.is_zero()) ++bad_relations;
    }
    VerifyRow row{"confluence", pres->name(), overlaps.empty() && bad_relations == 0,
                  std::to_string(overlaps.size()) + " unresolved overlaps, " + std::to_string(bad_relations) + "/" +
                      std::to_string(residuals.size()) + " relations with nonzero residual"};
    if (!overlaps.empty()) {
      row.detail += "; first: " + pres->word_string(overlaps.front().word) + " (" + overlaps.front().first_rule +
                    " vs " + overlaps.front().second_rule + ")";
    }
    row.elapsed_ms = ms_since(t0);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<VerifyRow> representation_rows(const RF& s) {
  std::vector<VerifyRow> rows;
  std::vector<ShiftRepresentation> reps;
  reps.push_back(rho1());
  reps.push_back(rho2());
  reps.push_back(sigma1());
  reps.push_back(sigma2());
  reps.push_back(pi_minus(s));
  reps.push_back(pi_plus(s));
  for (const auto& rep : reps) {
    const auto t0 = Clock::now();
    VerifyRow row{"representations", rep.name(), false, ""};
    try {
      row.detail = std::to_string(rep_check(rep)) + " relations hold";
      row.passed = true;
    } catch (const RelationViolated& e) {
      row.detail = e.what();
    }
    row.elapsed_ms = ms_since(t0);
    rows.push_back(std::move(row));
  }

  auto t0 = Clock::now();
  VerifyRow restriction{"representations", "restriction", false, ""};
  try {
    restriction.detail = std::to_string(restriction_check()) + " generator actions agree";
    restriction.passed = true;
  } catch (const MismatchedRestriction& e) {
    restriction.detail = e.what();
  }
  restriction.elapsed_ms = ms_since(t0);
  rows.push_back(std::move(restriction));

  t0 = Clock::now();
  const auto violations = character_violations(heegaard(), heegaard_character());
  rows.push_back({"representations", "character", violations.empty(),
                  std::to_string(violations.size()) + " relations violated by the character", ms_since(t0)});
  return rows;
}

VerifyRow quotient_row(const RF& s, int degree) {
  const auto t0 = Clock::now();
  VerifyRow row{"quotient", "degree<=" + std::to_string(degree), false, ""};
  try {
    const QuotientBasis qb = quotient_basis(s, degree);
    std::vector<int> expected;
    for (int k = 0; k <= degree; ++k) expected.push_back(2 * k + 1);
    row.passed = qb.dimensions() == expected;
    row.detail = "dimensions " + join_ints(qb.dimensions());
  } catch (const std::exception& e) {
    row.detail = e.what();
  }
  row.elapsed_ms = ms_since(t0);
  return row;
}

/// Runs one suite step, turning exceptions into a failed row.
template <class F>
VerifyRow guarded(const std::string& suite, const std::string& subject, double budget_secs, F&& f) {
  const auto t0 = Clock::now();
  VerifyRow row;
  try {
    TimeBudget budget(budget_secs);
    row = f();
  } catch (const std::exception& e) {
    row = {suite, subject, false, e.what()};
  }
  row.elapsed_ms = ms_since(t0);
  return row;
}

/// Suite results shared by every record of a chern run.
std::map<std::string, bool> global_checks(const RunConfig& config) {
  std::map<std::string, bool> out;
  auto all_pass = [](const std::vector<VerifyRow>& rows) {
    for (const auto& r : rows) {
      if (!r.passed) return false;
    }
    return true;
  };
  if (wants(config, "confluence")) out["confluence"] = all_pass(confluence_rows());
  if (wants(config, "representations")) {
    const RF s = config.family == Family::podles ? config.s() : RF(BigRational(1, 2));
    out["representations"] = all_pass(representation_rows(s));
  }
  if (wants(config, "quotient")) out["quotient"] = quotient_row(config.s(), config.degree).passed;
  return out;
}

ChernRecord compute_one(const RunConfig& config, int mu, const RF& s, const std::string& s_label, bool exact_only) {
  const auto t0 = Clock::now();
  ChernRecord rec;
  rec.family = config.family;
  rec.mu = mu;
  rec.s = config.family == Family::podles ? s_label : "";
  if (config.mode != Mode::numeric || exact_only) {
    const PairingResult r = pairing(config.family, mu, s);
    rec.chern = r.chern_integer();
    rec.exact_expr = r.chern.to_string();
    rec.rank = r.rank.to_string();
    rec.trace_element = r.trace_element.to_string();
    if (r.base_expression) rec.base_expression = base_expression_json(*r.base_expression);
    if (!rec.chern) spdlog::error("mu={}: pairing {} is not an integer", mu, rec.exact_expr);
  }
  if (!exact_only) {
    if (wants(config, "connection")) rec.checks["connection"] = connection_row(config.family, mu, s).passed;
    if (wants(config, "idempotent")) rec.checks["idempotent"] = idempotent_row(config.family, mu, s).passed;
    if (config.mode != Mode::exact) {
      rec.numeric = numeric_pairing(config.family, mu, config.numeric_params(s), config.truncation);
    }
  }
  rec.elapsed_ms = ms_since(t0);
  return rec;
}

/// Records for one mu, with the sampled-s fallback for symbolic podles runs.
std::vector<ChernRecord> records_for(const RunConfig& config, int mu, bool exact_only) {
  auto attempt = [&](const RF& s, const std::string& label) {
    try {
      return compute_one(config, mu, s, label, exact_only);
    } catch (const BudgetExceeded&) {
      throw;
    } catch (const std::exception& e) {
      spdlog::error("mu={} s={}: {}", mu, label, e.what());
      ChernRecord rec;
      rec.family = config.family;
      rec.mu = mu;
      rec.s = config.family == Family::podles ? label : "";
      rec.error = e.what();
      return rec;
    }
  };

  if (config.family == Family::heegaard || !config.symbolic_s()) return {attempt(config.s(), config.s_text)};

  try {
    TimeBudget budget(config.time_budget_secs);
    return {attempt(config.s(), "symbolic")};
  } catch (const BudgetExceeded&) {
    spdlog::warn("mu={}: symbolic s exceeded {} s, sampling s in {{0, 1/3, 1/2, 1}}", mu, config.time_budget_secs);
  }
  std::vector<ChernRecord> out;
  for (const auto& label : fallback_s_values()) {
    ChernRecord rec = attempt(RF(parse_rational(label)), label);
    rec.s_fallback = true;
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<ChernRecord> run_parallel(const RunConfig& config, bool exact_only) {
  const std::vector<int> mus = config.mu.values();
  std::vector<std::vector<ChernRecord>> slots(mus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < mus.size(); i = next++) {
      spdlog::info("computing mu={}", mus[i]);
      slots[i] = records_for(config, mus[i], exact_only);
    }
  };
  const auto n_threads = std::min<std::size_t>(static_cast<std::size_t>(config.jobs), mus.size());
  std::vector<std::thread> threads;
  for (std::size_t t = 1; t < n_threads; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();

  std::vector<ChernRecord> out;
  for (auto& slot : slots) {
    for (auto& rec : slot) out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

const std::vector<std::string>& fallback_s_values() {
  static const std::vector<std::string> values = {"0", "1/3", "1/2", "1"};
  return values;
}

std::vector<ChernRecord> compute_records(const RunConfig& config) {
  std::map<std::string, bool> shared;
  if (!config.verify.empty()) shared = global_checks(config);
  std::vector<ChernRecord> records = run_parallel(config, false);
  for (auto& rec : records) rec.checks.insert(shared.begin(), shared.end());
  return records;
}

std::vector<VerifyRow> run_verification(const RunConfig& config) {
  const std::set<std::string> suites = config.verify.empty() ? verify_suites() : config.verify;
  const double budget = config.time_budget_secs;
  std::vector<VerifyRow> rows;
  auto append = [&rows](std::vector<VerifyRow> more) {
    for (auto& r : more) rows.push_back(std::move(r));
  };

  if (suites.count("confluence")) append(confluence_rows());
  if (suites.count("representations")) {
    const RF s = config.family == Family::podles ? config.s() : RF(BigRational(1, 2));
    append(representation_rows(s));
  }
  if (suites.count("quotient")) {
    rows.push_back(guarded("quotient", "degree<=" + std::to_string(config.degree), budget,
                           [&] { return quotient_row(config.s(), config.degree); }));
  }
  for (const std::string suite : {"connection", "idempotent"}) {
    if (!suites.count(suite)) continue;
    for (int mu : config.mu.values()) {
      rows.push_back(guarded(suite, "mu=" + std::to_string(mu), budget, [&] {
        return suite == "connection" ? connection_row(config.family, mu, config.s())
                                     : idempotent_row(config.family, mu, config.s());
      }));
    }
  }
  for (const auto& r : rows) {
    if (!r.passed) spdlog::warn("{} {} failed: {}", r.suite, r.subject, r.detail);
  }
  return rows;
}

int cmd_chern(const RunConfig& config, std::ostream& out) {
  const auto records = compute_records(config);
  write_chern(out, config, records);
  for (const auto& r : records) {
    if (!r.passed(config.mode)) return 1;
  }
  return 0;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  const auto rows = run_verification(config);
  write_verify(out, config, rows);
  for (const auto& r : rows) {
    if (!r.passed) return 1;
  }
  return 0;
}

int cmd_table(const RunConfig& config, std::ostream& out) {
  const auto records = run_parallel(config, true);
  write_table(out, config, records);
  for (const auto& r : records) {
    if (!r.passed(Mode::exact)) return 1;
  }
  return 0;
}

}  // namespace hopfchern::cli
