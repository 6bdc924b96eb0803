#include "hopfchern/connection.hpp"

namespace hopfchern {

std::string family_name(Family f) { return f == Family::heegaard ? "heegaard" : "podles"; }

Family parse_family(std::string_view text) {
  if (text == "heegaard") return Family::heegaard;
  if (text == "podles") return Family::podles;
  throw std::invalid_argument("unknown family '" + std::string(text) + "' (expected heegaard or podles)");
}

const Presentation& ambient(Family f) { return f == Family::heegaard ? heegaard() : qsu2(); }

nlohmann::json ConnectionValue::to_json() const {
  nlohmann::json j = {{"family", family_name(family)}, {"mu", mu}, {"terms", value.to_json()}};
  if (family == Family::podles) j["s"] = s.to_string();
  return j;
}

ConnectionValue ell_family1(int mu) {
  const Presentation& h = heegaard();
  const RF p = RF::var(Var::p);
  const RF q = RF::var(Var::q);
  const NCPolynomial one(h, RF(1));
  const NCPolynomial a = gen(h, "a");
  const NCPolynomial as = gen(h, "a*");
  const NCPolynomial b = gen(h, "b");
  const NCPolynomial bs = gen(h, "b*");

  // ℓ(u) = a*⊗a + q b(1-aa*)⊗b*,  ℓ(u*) = b*⊗b + p a(1-bb*)⊗a*
  std::vector<std::pair<NCPolynomial, NCPolynomial>> step;
  if (mu < 0) {
    step = {{as, a}, {q * nf_mul(b, one - nf_mul(a, as)), bs}};
  } else {
    step = {{bs, b}, {p * nf_mul(a, one - nf_mul(b, bs)), as}};
  }
  TensorSquare value = TensorSquare::unit(h);
  for (int i = 0; i < std::abs(mu); ++i) {
    TensorSquare next(h);
    for (const auto& [l, r] : step) next += value.sandwich(l, r);
    value = std::move(next);
  }
  return {Family::heegaard, mu, RF(), std::move(value)};
}

ConnectionValue ell_family2(int mu, const RF& s) {
  const ScaledPolynomial lift = lift_family2(-mu, s);
  TensorSquare value = coproduct(lift.numerator).map_left(antipode);
  value *= lift.scale;
  return {Family::podles, mu, s, std::move(value)};
}

GroupedConnection group_by_right(const ConnectionValue& c) {
  const Presentation& pres = c.value.presentation();
  std::map<Word, NCPolynomial> groups;
  for (const auto& [k, coeff] : c.value.terms()) {
    groups.try_emplace(k.second, pres).first->second.add_term(k.first, coeff);
  }
  GroupedConnection g;
  for (auto& [w, l] : groups) {
    g.right_words.push_back(w);
    g.left.push_back(std::move(l));
  }
  return g;
}

std::vector<NCPolynomial> projected_right_legs(const ConnectionValue& c, const GroupedConnection& g,
                                               const QuotientBasis* qb) {
  const Presentation& pres = c.value.presentation();
  std::vector<NCPolynomial> out;
  out.reserve(g.right_words.size());
  for (const Word& w : g.right_words) {
    if (c.family == Family::heegaard) {
      out.emplace_back(pres, w);
      continue;
    }
    if (qb == nullptr) throw std::invalid_argument("podles family needs a quotient basis");
    NCPolynomial part(pres);
    for (auto& comp : coaction_family2(NCPolynomial(pres, w), *qb)) {
      if (comp.winding == -c.mu) part = std::move(comp.component);
    }
    out.push_back(std::move(part));
  }
  return out;
}

NCPolynomial IdempotentMatrix::trace() const {
  NCPolynomial t = entries.at(0);
  for (std::size_t i = 1; i < size; ++i) t += at(i, i);
  return t;
}

IdempotentMatrix idempotent(const ConnectionValue& c, const QuotientBasis* qb) {
  const GroupedConnection g = group_by_right(c);
  const std::vector<NCPolynomial> right = projected_right_legs(c, g, qb);
  IdempotentMatrix e;
  e.size = right.size();
  e.entries.reserve(e.size * e.size);
  for (std::size_t i = 0; i < e.size; ++i) {
    for (std::size_t j = 0; j < e.size; ++j) e.entries.push_back(nf_mul(right[i], g.left[j]));
  }
  e.right_legs = right;
  e.left_legs = g.left;
  return e;
}

namespace {

std::vector<NCPolynomial> factored_defect(const IdempotentMatrix& e) {
  const Presentation& pres = e.entries.at(0).presentation();
  WordAccumulator middle_acc;
  for (std::size_t j = 0; j < e.size; ++j) {
    for (const auto& [u, c] : e.left_legs[j].terms()) {
      for (const auto& [v, d] : e.right_legs[j].terms()) {
        for (const auto& [t, f] : pres.nf_concat(u, v)) middle_acc.add(t, c, d, f);
      }
    }
  }
  const NCPolynomial middle(pres, std::move(middle_acc));
  std::vector<NCPolynomial> row_factor;
  row_factor.reserve(e.size);
  for (std::size_t i = 0; i < e.size; ++i) row_factor.push_back(nf_mul(e.right_legs[i], middle));
  std::vector<NCPolynomial> out;
  out.reserve(e.entries.size());
  for (std::size_t i = 0; i < e.size; ++i) {
    for (std::size_t k = 0; k < e.size; ++k) out.push_back(nf_mul(row_factor[i], e.left_legs[k]) - e.at(i, k));
  }
  return out;
}

}  // namespace

std::vector<NCPolynomial> idempotent_defect(const IdempotentMatrix& e) {
  if (e.size > 0 && e.right_legs.size() == e.size && e.left_legs.size() == e.size) return factored_defect(e);
  std::vector<NCPolynomial> out;
  out.reserve(e.entries.size());
  for (std::size_t i = 0; i < e.size; ++i) {
    for (std::size_t k = 0; k < e.size; ++k) {
      const NCPolynomial& target = e.at(i, k);
      const Presentation& pres = target.presentation();
      WordAccumulator acc;
      for (const auto& [w, c] : target.terms()) acc.add(w, -c);
      for (std::size_t j = 0; j < e.size; ++j) {
        for (const auto& [u, c] : e.at(i, j).terms()) {
          for (const auto& [v, d] : e.at(j, k).terms()) {
            for (const auto& [t, f] : pres.nf_concat(u, v)) acc.add(t, c, d, f);
          }
        }
      }
      out.emplace_back(pres, std::move(acc));
    }
  }
  return out;
}

std::size_t star_defect(const IdempotentMatrix& e) {
  std::size_t bad = 0;
  for (std::size_t i = 0; i < e.size; ++i) {
    for (std::size_t j = 0; j < e.size; ++j) {
      if (!(normal_form(star(e.at(i, j))) == e.at(j, i))) ++bad;
    }
  }
  return bad;
}

NCPolynomial trace_element(const ConnectionValue& c) { return c.value.contract_reversed(); }

nlohmann::json ConnectionReport::to_json() const {
  nlohmann::json comps = nlohmann::json::object();
  for (const auto& [n, poly] : canonical_components) comps[std::to_string(n)] = poly.to_string();
  return {{"contraction", contraction_ok},
          {"contraction_residual", contraction_residual.to_string()},
          {"canonical_map", canonical_ok},
          {"canonical_components", comps},
          {"unit", unit_ok}};
}

ConnectionReport verify_connection(const ConnectionValue& c, const QuotientBasis* qb) {
  const Presentation& pres = c.value.presentation();
  const NCPolynomial one(pres, RF(1));
  ConnectionReport report(pres);

  report.contraction_residual = c.value.contract() - one;
  report.contraction_ok = report.contraction_residual.is_zero();

  const GroupedConnection g = group_by_right(c);
  for (std::size_t k = 0; k < g.right_words.size(); ++k) {
    const Word& w = g.right_words[k];
    if (c.family == Family::heegaard) {
      auto& slot = report.canonical_components.try_emplace(pres.grade(w), pres).first->second;
      slot += nf_mul(g.left[k], NCPolynomial(pres, w));
      continue;
    }
    if (qb == nullptr) throw std::invalid_argument("podles family needs a quotient basis");
    for (const auto& comp : coaction_family2(NCPolynomial(pres, w), *qb)) {
      auto& slot = report.canonical_components.try_emplace(comp.winding, pres).first->second;
      slot += nf_mul(g.left[k], comp.component);
    }
  }
  report.canonical_ok = true;
  for (const auto& [n, poly] : report.canonical_components) {
    const bool expected = n == -c.mu ? poly == one : poly.is_zero();
    report.canonical_ok = report.canonical_ok && expected;
  }
  if (report.canonical_components.count(-c.mu) == 0) report.canonical_ok = false;

  const ConnectionValue base = c.family == Family::heegaard ? ell_family1(0) : ell_family2(0, c.s);
  report.unit_ok = base.value == TensorSquare::unit(pres);
  return report;
}

}  // namespace hopfchern
