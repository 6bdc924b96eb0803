#include "hopfchern/fredholm.hpp"

#include <cmath>

namespace hopfchern {

namespace {

RF P() { return RF::var(Var::p); }
RF Q() { return RF::var(Var::q); }

void add_to(XPoly& f, int e, const RF& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = f.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) f.erase(it);
  }
}

XPoly constant(const RF& c) {
  XPoly f;
  add_to(f, 0, c);
  return f;
}

XPoly multiply(const XPoly& a, const XPoly& b) {
  XPoly out;
  for (const auto& [i, c] : a) {
    for (const auto& [j, d] : b) add_to(out, i + j, c * d);
  }
  return out;
}

// f(base^o · x)
XPoly rescale(const XPoly& f, const RF& base, int o) {
  if (o == 0) return f;
  XPoly out;
  for (const auto& [e, c] : f) add_to(out, e, c * base.pow(o * e));
  return out;
}

// f(base^k)
RF evaluate(const XPoly& f, const RF& base, int k) {
  RF out;
  for (const auto& [e, c] : f) out += c * base.pow(k * e);
  return out;
}

XPoly power(const XPoly& f, int n) {
  XPoly out = constant(RF(1));
  for (int i = 0; i < n; ++i) out = multiply(out, f);
  return out;
}

XPoly poly(std::initializer_list<std::pair<int, RF>> terms) {
  XPoly f;
  for (const auto& [e, c] : terms) add_to(f, e, c);
  return f;
}

Action adjoint(const Action& a, const RF& base) {
  switch (a.kind) {
    case Action::Kind::up: return Action::down(rescale(a.poly, base, -1));
    case Action::Kind::down: return Action::up(rescale(a.poly, base, 1));
    default: return a;
  }
}

// Squared weight of the edge (k, k+1) at x = base^k.
XPoly edge_of(const Action& a, const RF& base) {
  return a.kind == Action::Kind::up ? a.poly : rescale(a.poly, base, 1);
}

void add_series(std::map<int, ShiftSeries>& out, const ShiftSeries& s, const RF& c) {
  auto [it, inserted] = out.try_emplace(s.shift);
  it->second.shift = s.shift;
  for (const auto& [e, d] : s.generic) add_to(it->second.generic, e, c * d);
  for (const auto& [k, d] : s.corrections) add_to(it->second.corrections, k, c * d);
  if (it->second.is_zero()) out.erase(it);
}

NCPolynomial specialize(const NCPolynomial& x, const ParamPoint& at) {
  if (at.empty()) return x;
  return map_coefficients(x, [&](const RF& c) {
    RF out = c;
    for (const auto& [v, value] : at) out = out.substitute(v, value);
    return out;
  });
}

}  // namespace

std::string xpoly_string(const XPoly& f) {
  if (f.empty()) return "0";
  std::string out;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + it->second.to_string() + ")";
    if (it->first == 1) out += "*x";
    if (it->first > 1) out += "*x^" + std::to_string(it->first);
  }
  return out;
}

Action Action::scalar(const RF& c) { return {Kind::scalar, constant(c)}; }
Action Action::diagonal(XPoly d) { return {Kind::diagonal, std::move(d)}; }
Action Action::up(XPoly w) { return {Kind::up, std::move(w)}; }
Action Action::down(XPoly w) { return {Kind::down, std::move(w)}; }

bool operator==(const ShiftSeries& a, const ShiftSeries& b) {
  auto same = [](const std::map<int, RF>& x, const std::map<int, RF>& y) {
    if (x.size() != y.size()) return false;
    auto it = y.begin();
    for (const auto& [k, c] : x) {
      if (k != it->first || !(c == it->second)) return false;
      ++it;
    }
    return true;
  };
  return a.shift == b.shift && same(a.generic, b.generic) && same(a.corrections, b.corrections);
}

// ------------------------------------------------------ ShiftRepresentation

ShiftRepresentation::ShiftRepresentation(std::string name, const Presentation& pres, RF base,
                                         std::map<Symbol, Action> actions, ParamPoint specialization)
    : name_(std::move(name)), pres_(&pres), base_(std::move(base)), actions_(std::move(actions)),
      specialization_(std::move(specialization)) {
  std::vector<std::pair<Symbol, Action>> partners;
  for (const auto& [sym, a] : actions_) {
    const Symbol partner = pres_->symbol(sym).star;
    if (actions_.count(partner) == 0) partners.emplace_back(partner, adjoint(a, base_));
  }
  for (auto& [sym, a] : partners) actions_.emplace(sym, std::move(a));
  for (const auto& [sym, a] : actions_) {
    if (a.kind != Action::Kind::up && a.kind != Action::Kind::down) continue;
    XPoly e = edge_of(a, base_);
    if (edge_.empty()) {
      edge_ = std::move(e);
    } else if (!(ShiftSeries{0, edge_, {}} == ShiftSeries{0, e, {}})) {
      throw std::invalid_argument(name_ + ": shifts with different edge weights");
    }
  }
}

const Action& ShiftRepresentation::action(Symbol s) const {
  auto it = actions_.find(s);
  if (it == actions_.end()) {
    throw UnknownSymbol(name_ + " has no action for symbol " +
                        (s < pres_->alphabet_size() ? pres_->symbol(s).name : std::to_string(s)));
  }
  return it->second;
}

ShiftSeries ShiftRepresentation::word_operator(const Word& w) const {
  XPoly coeff = constant(RF(1));
  int offset = 0;
  int lowest = 0;
  std::map<int, int> crossings;  // edge (k+e, k+e+1) -> times crossed
  for (std::size_t i = w.size(); i-- > 0;) {
    const Action& a = action(w[i]);
    switch (a.kind) {
      case Action::Kind::scalar: coeff = multiply(coeff, a.poly); break;
      case Action::Kind::diagonal: coeff = multiply(coeff, rescale(a.poly, base_, offset)); break;
      case Action::Kind::up: ++crossings[offset++]; break;
      case Action::Kind::down: ++crossings[--offset]; break;
    }
    lowest = std::min(lowest, offset);
  }
  for (const auto& [e, n] : crossings) {
    const bool canonical = (offset > 0 && e >= 0 && e < offset) || (offset < 0 && e >= offset && e < 0);
    const int pairs = (n - (canonical ? 1 : 0)) / 2;
    if (pairs > 0) coeff = multiply(coeff, power(rescale(edge_, base_, e), pairs));
  }
  ShiftSeries out;
  out.shift = offset;
  out.generic = coeff;
  // Levels k < -lowest pass below e_0, where the operator vanishes.
  for (int k = std::max(0, -offset); k < -lowest; ++k) add_to(out.corrections, k, -evaluate(coeff, base_, k));
  return out;
}

std::map<int, ShiftSeries> ShiftRepresentation::operator_of(const NCPolynomial& x) const {
  if (&x.presentation() != pres_) throw PresentationMismatch();
  std::map<int, ShiftSeries> out;
  for (const auto& [w, c] : x.terms()) add_series(out, word_operator(w), c);
  return out;
}

// ------------------------------------------------------ shipped modules

namespace {

constexpr Symbol kA = 0;
constexpr Symbol kB = 2;
constexpr Symbol kF0 = 0;
constexpr Symbol kF1 = 1;
constexpr Symbol kK = 0;
constexpr Symbol kL = 1;

ParamPoint specialization_for(const RF& s) {
  if (s == RF::var(Var::s)) return {};
  if (!s.is_constant()) throw std::invalid_argument("s must be a rational number or the symbol s");
  return {{Var::s, s.constant_value()}};
}

}  // namespace

ShiftRepresentation rho1() {
  const RF p = P();
  return {"rho1", s2pq(), p,
          {{kF0, Action::diagonal(poly({{0, 1}, {1, -1}}))}, {kF1, Action::up(poly({{0, 1}, {1, -p}}))}}};
}

ShiftRepresentation rho2() {
  const RF q = Q();
  return {"rho2", s2pq(), q, {{kF0, Action::scalar(1)}, {kF1, Action::up(poly({{0, 1}, {1, -q}}))}}};
}

ShiftRepresentation sigma1() {
  const RF p = P();
  return {"sigma1", heegaard(), p, {{kA, Action::scalar(1)}, {kB, Action::up(poly({{0, 1}, {1, -p}}))}}};
}

ShiftRepresentation sigma2() {
  const RF q = Q();
  return {"sigma2", heegaard(), q, {{kA, Action::up(poly({{0, 1}, {1, -q}}))}, {kB, Action::scalar(1)}}};
}

ShiftRepresentation pi_minus(const RF& s) {
  const RF q = Q();
  const RF s2 = s * s;
  return {"pi_minus",
          podles(),
          q * q,
          {{kK, Action::diagonal(poly({{1, -s2}}))},
           {kL, Action::down(poly({{0, s2}, {1, -s2 * (1 - s2)}, {2, -s2 * s2}}))}},
          specialization_for(s)};
}

ShiftRepresentation pi_plus(const RF& s) {
  const RF q = Q();
  const RF s2 = s * s;
  return {"pi_plus",
          podles(),
          q * q,
          {{kK, Action::diagonal(poly({{1, 1}}))}, {kL, Action::down(poly({{0, s2}, {1, 1 - s2}, {2, -1}}))}},
          specialization_for(s)};
}

std::size_t rep_check(const ShiftRepresentation& rep) {
  const Presentation& pres = rep.presentation();
  std::size_t checked = 0;
  for (const auto& rule : pres.rule_instances(3)) {
    NCPolynomial rel = NCPolynomial(pres, rule.lhs) - NCPolynomial(pres, rule.rhs);
    for (const auto& [shift, series] : rep.operator_of(specialize(rel, rep.specialization()))) {
      throw RelationViolated(rep.name() + ": relation " + pres.word_string(rule.lhs) + " fails in shift " +
                             std::to_string(shift) + ", residual " + xpoly_string(series.generic));
    }
    ++checked;
  }
  return checked;
}

std::size_t restriction_check() {
  std::size_t checked = 0;
  const std::pair<ShiftRepresentation, ShiftRepresentation> pairs[] = {{sigma1(), rho1()}, {sigma2(), rho2()}};
  for (const auto& [ambient_rep, base_rep] : pairs) {
    for (Symbol g = 0; g < s2pq().alphabet_size(); ++g) {
      const auto lifted = ambient_rep.operator_of(heegaard_image(g));
      const auto direct = base_rep.operator_of(NCPolynomial(s2pq(), Word::letter(g)));
      bool same = lifted.size() == direct.size();
      for (auto a = lifted.begin(), b = direct.begin(); same && a != lifted.end(); ++a, ++b) {
        same = a->second == b->second;
      }
      if (!same) {
        throw MismatchedRestriction(ambient_rep.name() + " does not restrict to " + base_rep.name() + " on " +
                                    s2pq().symbol(g).name);
      }
      ++checked;
    }
  }
  return checked;
}

std::optional<DiagonalSeries> diagonal(const Word& w, const ShiftRepresentation& rep) {
  ShiftSeries s = rep.word_operator(w);
  if (s.shift != 0) return std::nullopt;
  return s;
}

DiagonalSeries diagonal(const NCPolynomial& x, const ShiftRepresentation& rep) {
  auto parts = rep.operator_of(x);
  auto it = parts.find(0);
  return it == parts.end() ? DiagonalSeries{} : it->second;
}

RF trace_pairing(const NCPolynomial& x, const ShiftRepresentation& plus, const ShiftRepresentation& minus) {
  const DiagonalSeries dp = diagonal(x, plus);
  const DiagonalSeries dm = diagonal(x, minus);
  auto coefficient = [](const DiagonalSeries& d, int m) {
    auto it = d.generic.find(m);
    return it == d.generic.end() ? RF() : it->second;
  };
  const RF level_independent = coefficient(dp, 0) - coefficient(dm, 0);
  if (!level_independent.is_zero()) {
    throw NotSummable("constant diagonal parts differ by " + level_independent.to_string());
  }
  RF total;
  for (const auto& [d, sign, base] : {std::tuple{&dp, 1, plus.base()}, std::tuple{&dm, -1, minus.base()}}) {
    for (const auto& [m, c] : d->generic) {
      if (m < 0) throw NotSummable("diagonal grows with the level");
      if (m > 0) total += RF(sign) * c / (1 - base.pow(m));
    }
    for (const auto& [k, c] : d->corrections) total += RF(sign) * c;
  }
  return total;
}

// ------------------------------------------------------------- characters

RF apply_character(const NCPolynomial& x, const std::map<Symbol, RF>& values) {
  RF out;
  for (const auto& [w, c] : x.terms()) {
    RF term = c;
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto it = values.find(w[i]);
      if (it == values.end()) throw UnknownSymbol("character has no value for " + x.presentation().symbol(w[i]).name);
      term *= it->second;
    }
    out += term;
  }
  return out;
}

const std::map<Symbol, RF>& heegaard_character() {
  static const std::map<Symbol, RF> values = {{0, 1}, {1, 1}, {2, 1}, {3, 1}};
  return values;
}

std::vector<std::string> character_violations(const Presentation& pres, const std::map<Symbol, RF>& values) {
  std::vector<std::string> out;
  for (const auto& rule : pres.rule_instances(3)) {
    NCPolynomial rel = NCPolynomial(pres, rule.lhs) - NCPolynomial(pres, rule.rhs);
    if (!apply_character(rel, values).is_zero()) out.push_back(pres.word_string(rule.lhs));
  }
  return out;
}

// ---------------------------------------------------------------- pairing

PairingResult pairing(Family family, int mu, const RF& s) {
  if (family == Family::heegaard) {
    NCPolynomial x = trace_element(ell_family1(mu));
    RF chern = trace_pairing(x, sigma2(), sigma1());
    RF rank = apply_character(x, heegaard_character());
    return {family, mu, s, std::move(x), std::nullopt, "", std::move(chern), std::move(rank)};
  }
  NCPolynomial x = trace_element(ell_family2(mu, s));
  Expression e = express_escalating(family, x, s);
  RF chern = trace_pairing(e.value, pi_minus(s), pi_plus(s));
  RF rank = counit(x);
  return {family, mu, s, std::move(x), std::move(e.value), std::move(e.span), std::move(chern), std::move(rank)};
}

BigInt chern_number(Family family, int mu, const RF& s) {
  const PairingResult r = pairing(family, mu, s);
  auto n = r.chern_integer();
  if (!n) throw NotConstant("pairing " + r.chern.to_string() + " is not an integer");
  return *n;
}

RF rank_pairing(Family family, int mu, const RF& s) {
  if (family == Family::heegaard) return apply_character(trace_element(ell_family1(mu)), heegaard_character());
  return counit(trace_element(ell_family2(mu, s)));
}

// ---------------------------------------------------------------- numeric

namespace {

double to_double(const RF& c, const ParamPoint& at) { return rf_eval(c, at).get_d(); }

struct NumericAction {
  Action::Kind kind;
  std::vector<double> value;  // per source level
};

// Diagonal of x on levels 0..n-1 by applying each word to e_k.
double truncated_trace(const NCPolynomial& x, const ShiftRepresentation& rep, const ParamPoint& at, int n) {
  const double base = to_double(rep.base(), at);
  std::size_t longest = 0;
  for (const auto& [w, c] : x.terms()) longest = std::max(longest, w.size());
  const int levels = n + static_cast<int>(longest) + 1;
  std::map<Symbol, NumericAction> actions;
  for (const auto& [w, c] : x.terms()) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (actions.count(w[i]) != 0) continue;
      const Action& a = rep.action(w[i]);
      NumericAction na{a.kind, std::vector<double>(levels)};
      for (int k = 0; k < levels; ++k) {
        double v = 0;
        for (const auto& [e, coef] : a.poly) v += to_double(coef, at) * std::pow(base, k * e);
        if (a.kind == Action::Kind::up || a.kind == Action::Kind::down) {
          if (v < -1e-12) throw ParameterOutOfRange(rep.name() + ": negative squared weight");
          v = std::sqrt(std::max(v, 0.0));
        }
        na.value[static_cast<std::size_t>(k)] = v;
      }
      actions.emplace(w[i], std::move(na));
    }
  }
  double total = 0;
  for (int k = 0; k < n; ++k) {
    double level_sum = 0;
    for (const auto& [w, c] : x.terms()) {
      int level = k;
      double amp = 1;
      for (std::size_t i = w.size(); i-- > 0 && amp != 0;) {
        const NumericAction& na = actions.at(w[i]);
        const double v = na.value[static_cast<std::size_t>(level)];
        switch (na.kind) {
          case Action::Kind::scalar:
          case Action::Kind::diagonal: amp *= v; break;
          case Action::Kind::up: amp *= v; ++level; break;
          case Action::Kind::down:
            if (level == 0) {
              amp = 0;
            } else {
              amp *= v;
              --level;
            }
            break;
        }
      }
      if (level == k) level_sum += to_double(c, at) * amp;
    }
    total += level_sum;
  }
  return total;
}

void require_open_unit(const ParamPoint& at, Var v) {
  auto it = at.find(v);
  if (it == at.end()) throw ParameterOutOfRange(std::string("missing parameter ") + var_name(v));
  if (it->second <= 0 || it->second >= 1) {
    throw ParameterOutOfRange(std::string(1, var_name(v)) + " must lie in ]0,1[");
  }
}

}  // namespace

NumericPairing numeric_pairing(Family family, int mu, const ParamPoint& params, int n) {
  if (n < 1) throw ParameterOutOfRange("truncation must be positive");
  require_open_unit(params, Var::q);
  NCPolynomial x(ambient(family));
  std::optional<ShiftRepresentation> plus;
  std::optional<ShiftRepresentation> minus;
  if (family == Family::heegaard) {
    require_open_unit(params, Var::p);
    x = trace_element(ell_family1(mu));
    plus.emplace(sigma2());
    minus.emplace(sigma1());
  } else {
    auto it = params.find(Var::s);
    if (it == params.end()) throw ParameterOutOfRange("missing parameter s");
    if (it->second < 0 || it->second > 1) throw ParameterOutOfRange("s must lie in [0,1]");
    const RF s(it->second);
    x = express_escalating(family, trace_element(ell_family2(mu, s)), s).value;
    plus.emplace(pi_minus(s));
    minus.emplace(pi_plus(s));
  }
  NumericPairing out;
  out.estimate = truncated_trace(x, *plus, params, n) - truncated_trace(x, *minus, params, n);
  // |D(k)| <= C r^k on the generic part, so the levels >= n add at most C r^n / (1 - r).
  double c_bound = 0;
  double r = 0;
  for (const ShiftRepresentation* rep : {&*plus, &*minus}) {
    const double base = to_double(rep->base(), params);
    for (const auto& [m, c] : diagonal(x, *rep).generic) {
      if (m > 0) {
        c_bound += std::abs(to_double(c, params));
        r = std::max(r, base);
      }
    }
  }
  out.tail_bound = c_bound == 0 ? 0 : c_bound * std::pow(r, n) / (1 - r);
  return out;
}

}  // namespace hopfchern
