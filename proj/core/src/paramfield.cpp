#include "hopfchern/paramfield.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cassert>
#include <cctype>
#include <sstream>

namespace hopfchern {

char var_name(Var v) {
  switch (v) {
    case Var::p: return 'p';
    case Var::q: return 'q';
    case Var::s: return 's';
  }
  return '?';
}

namespace {

constexpr Var kVars[kNumVars] = {Var::p, Var::q, Var::s};
constexpr std::uint64_t kFieldMask = 0xFFFFu;

std::atomic<bool> g_gcd_reduction{true};

}  // namespace

void set_gcd_reduction(bool enabled) { g_gcd_reduction.store(enabled); }
bool gcd_reduction_enabled() { return g_gcd_reduction.load(); }

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(int ep, int eq, int es) {
  if (ep < 0 || eq < 0 || es < 0 || ep > 0x3FFF || eq > 0x3FFF || es > 0x3FFF) {
    throw std::out_of_range("monomial exponent out of range");
  }
  auto deg = static_cast<std::uint64_t>(ep + eq + es);
  return from_key((deg << 48) | (static_cast<std::uint64_t>(es) << 32) |
                  (static_cast<std::uint64_t>(eq) << 16) | static_cast<std::uint64_t>(ep));
}

Monomial Monomial::var(Var v, int power) {
  int e[kNumVars] = {0, 0, 0};
  e[static_cast<int>(v)] = power;
  return of(e[0], e[1], e[2]);
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < kNumVars; ++i) {
    if (((key_ >> (16 * i)) & kFieldMask) > ((other.key_ >> (16 * i)) & kFieldMask)) return false;
  }
  return true;
}

Monomial Monomial::min(const Monomial& a, const Monomial& b) {
  return of(std::min(a.exponent(Var::p), b.exponent(Var::p)),
            std::min(a.exponent(Var::q), b.exponent(Var::q)),
            std::min(a.exponent(Var::s), b.exponent(Var::s)));
}

// --------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(const BigRational& c) : MultiPoly(c, Monomial()) {}

MultiPoly::MultiPoly(const BigRational& c, const Monomial& m) {
  if (c == 0) return;
  BigRational canonical = c;
  canonical.canonicalize();
  terms_.push_back({m, std::move(canonical)});
}

MultiPoly MultiPoly::from_sorted(std::vector<Term> terms) {
  MultiPoly r;
  r.terms_ = std::move(terms);
  return r;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool MultiPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

BigRational MultiPoly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw std::logic_error("constant_value of a non-constant polynomial");
  return terms_[0].coeff;
}

int MultiPoly::total_degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }

int MultiPoly::degree_in(Var v) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
  return d;
}

Monomial MultiPoly::min_monomial() const {
  if (terms_.empty()) return {};
  Monomial m = terms_.front().mono;
  for (const auto& t : terms_) m = Monomial::min(m, t.mono);
  return m;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

std::vector<MultiPoly::Term> merge_terms(const std::vector<MultiPoly::Term>& a,
                                         const std::vector<MultiPoly::Term>& b, bool subtract) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono > a[i].mono) {
      out.push_back({b[j].mono, subtract ? BigRational(-b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      BigRational c = subtract ? BigRational(a[i].coeff - b[j].coeff) : BigRational(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 && a.terms_[0].mono.is_one()) return b.scaled(a.terms_[0].coeff);
  if (b.terms_.size() == 1 && b.terms_[0].mono.is_one()) return a.scaled(b.terms_[0].coeff);
  std::vector<MultiPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) prod.push_back({x.mono * y.mono, x.coeff * y.coeff});
  }
  std::sort(prod.begin(), prod.end(), [](const auto& l, const auto& r) { return l.mono > r.mono; });
  std::vector<MultiPoly::Term> out;
  out.reserve(prod.size());
  for (auto& t : prod) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return MultiPoly::from_sorted(std::move(out));
}

MultiPoly MultiPoly::scaled(const BigRational& c) const {
  if (c == 0) return {};
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

MultiPoly MultiPoly::times_monomial(const Monomial& m) const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;
}

MultiPoly MultiPoly::div_monomial(const Monomial& m) const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) {
    assert(m.divides(t.mono));
    t.mono = t.mono / m;
  }
  return r;
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly result(1L);
  MultiPoly base = *this;
  while (n != 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n != 0) base = base * base;
  }
  return result;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(Var v) const {
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(degree_in(v)) + 1);
  for (const auto& t : terms_) {
    int e = t.mono.exponent(v);
    buckets[static_cast<std::size_t>(e)].push_back({t.mono / Monomial::var(v, e), t.coeff});
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    // Removing a single variable keeps the relative order except for the
    // degree field, so re-sort.
    std::sort(b.begin(), b.end(), [](const auto& l, const auto& r) { return l.mono > r.mono; });
    out.push_back(from_sorted(std::move(b)));
  }
  return out;
}

MultiPoly MultiPoly::substitute(Var v, const BigRational& value) const {
  MultiPoly r;
  auto coeffs = coefficients_in(v);
  BigRational power = 1;
  for (const auto& c : coeffs) {
    r += c.scaled(power);
    power *= value;
  }
  return r;
}

namespace {

BigRational rational_pow(const BigRational& base, int e) {
  BigRational r = 1;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  r.canonicalize();
  return r;
}

}  // namespace

BigRational MultiPoly::eval(const ParamPoint& at) const {
  BigRational total = 0;
  for (const auto& t : terms_) {
    BigRational term = t.coeff;
    for (Var v : kVars) {
      int e = t.mono.exponent(v);
      if (e == 0) continue;
      auto it = at.find(v);
      if (it == at.end()) {
        throw std::invalid_argument(std::string("no value for parameter ") + var_name(v));
      }
      term *= rational_pow(it->second, e);
    }
    total += term;
  }
  return total;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero();
  if (is_zero()) return MultiPoly();
  if (divisor.is_constant()) return scaled(1 / divisor.constant_value());
  const Term& lead = divisor.leading();
  MultiPoly rem = *this;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& rt = rem.leading();
    if (!lead.mono.divides(rt.mono)) return std::nullopt;
    Term qt{rt.mono / lead.mono, rt.coeff / lead.coeff};
    rem -= divisor.times_monomial(qt.mono).scaled(qt.coeff);
    quotient.push_back(std::move(qt));
  }
  // Quotient terms come out in strictly descending order.
  return from_sorted(std::move(quotient));
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return {};
  return scaled(1 / leading().coeff);
}

namespace {

std::string monomial_string(const Monomial& m) {
  std::string out;
  for (Var v : kVars) {
    int e = m.exponent(v);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += var_name(v);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::string rational_string(const BigRational& c) {
  return c.get_den() == 1 ? c.get_num().get_str() : c.get_str();
}

}  // namespace

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    BigRational c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += rational_string(c);
    } else if (c == 1) {
      out += monomial_string(t.mono);
    } else {
      out += rational_string(c) + '*' + monomial_string(t.mono);
    }
  }
  return out;
}

// --------------------------------------------------------------------- gcd

namespace {

MultiPoly gcd_impl(const MultiPoly& a, const MultiPoly& b);

MultiPoly content_in(const MultiPoly& a, Var v) {
  MultiPoly g;
  for (const auto& c : a.coefficients_in(v)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : gcd_impl(g, c);
    if (g.is_constant()) return MultiPoly(1L);
  }
  return g;
}

MultiPoly exact(const MultiPoly& a, const MultiPoly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw std::logic_error("gcd: inexact division");
  return *std::move(q);
}

/// Pseudo-remainder of a by b viewed as univariate polynomials in v.
MultiPoly pseudo_remainder(MultiPoly a, const MultiPoly& b, Var v) {
  const int db = b.degree_in(v);
  const MultiPoly lcb = b.coefficients_in(v).back();
  int da = a.degree_in(v);
  while (!a.is_zero() && da >= db) {
    MultiPoly lca = a.coefficients_in(v).back();
    a = a * lcb - (b * lca).times_monomial(Monomial::var(v, da - db));
    da = a.is_zero() ? -1 : a.degree_in(v);
  }
  return a;
}

/// The only variable occurring in a, or nullopt when there are several or none.
std::optional<Var> sole_variable(const MultiPoly& a) {
  std::optional<Var> found;
  for (Var v : kVars) {
    if (!a.contains(v)) continue;
    if (found) return std::nullopt;
    found = v;
  }
  return found;
}

using Dense = std::vector<BigRational>;

Dense to_dense(const MultiPoly& a, Var v) {
  Dense d(static_cast<std::size_t>(a.degree_in(v)) + 1);
  for (const auto& t : a.terms()) d[static_cast<std::size_t>(t.mono.exponent(v))] = t.coeff;
  return d;
}

MultiPoly from_dense(const Dense& d, Var v) {
  std::vector<MultiPoly::Term> terms;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] != 0) terms.push_back({Monomial::var(v, static_cast<int>(i)), d[i]});
  }
  return MultiPoly::from_sorted(std::move(terms));
}

/// Monic Euclid over Q on dense coefficient vectors.
MultiPoly univariate_gcd(const MultiPoly& a0, const MultiPoly& b0, Var v) {
  Dense a = to_dense(a0, v);
  Dense b = to_dense(b0, v);
  if (a.size() < b.size()) std::swap(a, b);
  auto make_monic = [](Dense& d) {
    const BigRational lead = d.back();
    for (auto& c : d) c /= lead;
  };
  make_monic(b);
  while (!b.empty()) {
    // a <- a mod b
    while (a.size() >= b.size()) {
      const BigRational f = a.back();
      const std::size_t shift = a.size() - b.size();
      if (f != 0) {
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
      }
      a.pop_back();
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    if (!a.empty()) make_monic(a);
    std::swap(a, b);
  }
  return from_dense(a, v);
}

/// a and b with every variable except v replaced by the given values.
MultiPoly specialize_except(const MultiPoly& a, Var v, const std::array<BigRational, kNumVars>& at) {
  MultiPoly out = a;
  for (Var w : kVars) {
    if (w != v && out.contains(w)) out = out.substitute(w, at[static_cast<std::size_t>(w)]);
  }
  return out;
}

/// True when the gcd of a and b provably has degree 0 in v: at a point where
/// both degrees in v survive, any common factor involving v would survive too.
bool free_of_in_gcd(const MultiPoly& a, const MultiPoly& b, Var v) {
  static const std::array<std::array<BigRational, kNumVars>, 3> points = {
      {{BigRational(3), BigRational(5), BigRational(7)},
       {BigRational(-2), BigRational(11), BigRational(4)},
       {BigRational(13), BigRational(-6), BigRational(17)}}};
  for (const auto& at : points) {
    const MultiPoly sa = specialize_except(a, v, at);
    const MultiPoly sb = specialize_except(b, v, at);
    if (sa.degree_in(v) != a.degree_in(v) || sb.degree_in(v) != b.degree_in(v)) continue;
    return univariate_gcd(sa, sb, v).is_constant();
  }
  return false;
}

MultiPoly gcd_impl(const MultiPoly& a0, const MultiPoly& b0) {
  if (a0.is_zero()) return b0.monic();
  if (b0.is_zero()) return a0.monic();
  if (a0.is_constant() || b0.is_constant()) return MultiPoly(1L);
  if (auto va = sole_variable(a0)) {
    if (sole_variable(b0) == va) return univariate_gcd(a0, b0, *va);
  }

  const Monomial ma = a0.min_monomial();
  const Monomial mb = b0.min_monomial();
  const MultiPoly mono_gcd(BigRational(1), Monomial::min(ma, mb));
  MultiPoly a = a0.div_monomial(ma);
  MultiPoly b = b0.div_monomial(mb);
  if (a.is_constant() || b.is_constant()) return mono_gcd;
  if (a.monic() == b.monic()) return a.monic() * mono_gcd;

  // A variable present in only one argument cannot occur in the gcd.
  for (Var v : kVars) {
    const bool in_a = a.contains(v);
    const bool in_b = b.contains(v);
    if (in_a && !in_b) return gcd_impl(content_in(a, v), b) * mono_gcd;
    if (in_b && !in_a) return gcd_impl(a, content_in(b, v)) * mono_gcd;
  }

  bool coprime = true;
  for (Var v : kVars) {
    if (a.contains(v) && !free_of_in_gcd(a, b, v)) {
      coprime = false;
      break;
    }
  }
  if (coprime) return mono_gcd;

  Var main = Var::p;
  int best = -1;
  for (Var v : kVars) {
    if (!a.contains(v)) continue;
    int d = std::max(a.degree_in(v), b.degree_in(v));
    if (best < 0 || d < best) {
      best = d;
      main = v;
    }
  }

  const MultiPoly ca = content_in(a, main);
  const MultiPoly cb = content_in(b, main);
  const MultiPoly content_gcd = gcd_impl(ca, cb);
  MultiPoly pa = exact(a, ca);
  MultiPoly pb = exact(b, cb);
  if (pa.degree_in(main) < pb.degree_in(main)) std::swap(pa, pb);

  while (true) {
    MultiPoly r = pseudo_remainder(pa, pb, main);
    if (r.is_zero()) break;
    if (r.degree_in(main) == 0) {
      pb = MultiPoly(1L);
      break;
    }
    pa = std::move(pb);
    pb = exact(r, content_in(r, main)).monic();
  }
  return (content_gcd * pb).monic() * mono_gcd;
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) { return gcd_impl(a, b); }

// -------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(const BigRational& c) : num_(c), den_(1L) {
  if (num_.is_zero()) return;
  const BigRational k = num_.leading().coeff;
  if (k.get_den() != 1) {
    num_ = MultiPoly(BigRational(k.get_num()));
    den_ = MultiPoly(BigRational(k.get_den()));
  }
}

RationalFunction::RationalFunction(MultiPoly num) : num_(std::move(num)), den_(1L) { normalize(); }

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RationalFunction::normalize() {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = MultiPoly(1L);
    return;
  }
  const Monomial common = Monomial::min(num_.min_monomial(), den_.min_monomial());
  if (!common.is_one()) {
    num_ = num_.div_monomial(common);
    den_ = den_.div_monomial(common);
  }
  if (gcd_reduction_enabled() && !num_.is_monomial() && !den_.is_monomial()) {
    MultiPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact(num_, g);
      den_ = exact(den_, g);
    }
  }
  // Scale to integer coefficients with no common integer factor.
  BigInt lcm_den = 1;
  for (const auto* poly : {&num_, &den_}) {
    for (const auto& t : poly->terms()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  BigInt content = 0;
  for (const auto* poly : {&num_, &den_}) {
    for (const auto& t : poly->terms()) {
      BigInt n = t.coeff.get_num() * (lcm_den / t.coeff.get_den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
    }
  }
  BigRational factor(lcm_den, content);
  if (den_.leading().coeff < 0) factor = -factor;
  if (factor != 1) {
    num_ = num_.scaled(factor);
    den_ = den_.scaled(factor);
  }
}

BigRational RationalFunction::constant_value() const {
  if (!is_constant()) throw std::logic_error("constant_value of a non-constant rational function");
  return num_.constant_value() / den_.constant_value();
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RationalFunction();
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
  }
  // Cross-cancel before multiplying to keep intermediate sizes down.
  MultiPoly a = num_;
  MultiPoly b = den_;
  MultiPoly c = o.num_;
  MultiPoly d = o.den_;
  if (gcd_reduction_enabled()) {
    if (!a.is_monomial() && !d.is_monomial()) {
      MultiPoly g = gcd(a, d);
      if (!g.is_constant()) {
        a = exact(a, g);
        d = exact(d, g);
      }
    }
    if (!c.is_monomial() && !b.is_monomial()) {
      MultiPoly g = gcd(c, b);
      if (!g.is_constant()) {
        c = exact(c, g);
        b = exact(b, g);
      }
    }
  }
  num_ = a * c;
  den_ = b * d;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  RationalFunction r = *this;
  r.num_ = num_.pow(static_cast<unsigned>(n));
  r.den_ = den_.pow(static_cast<unsigned>(n));
  r.normalize();
  return r;
}

bool RationalFunction::equals(const RationalFunction& o) const { return (num_ * o.den_ - o.num_ * den_).is_zero(); }

BigRational RationalFunction::eval(const ParamPoint& at) const {
  BigRational d = den_.eval(at);
  if (d == 0) throw PoleAtPoint("denominator " + den_.to_string() + " vanishes at the evaluation point");
  return num_.eval(at) / d;
}

RationalFunction RationalFunction::substitute(Var v, const BigRational& value) const {
  MultiPoly d = den_.substitute(v, value);
  if (d.is_zero()) {
    throw PoleAtPoint("denominator " + den_.to_string() + " vanishes at " + var_name(v) + "=" + value.get_str());
  }
  return {num_.substitute(v, value), d};
}

std::optional<BigInt> RationalFunction::as_integer() const {
  if (num_.is_zero()) return BigInt(0);
  // Candidate constant from leading coefficients, confirmed by cross-multiplication.
  if (num_.leading().mono != den_.leading().mono) return std::nullopt;
  BigRational c = num_.leading().coeff / den_.leading().coeff;
  if (!(num_ - den_.scaled(c)).is_zero()) return std::nullopt;
  if (c.get_den() != 1) return std::nullopt;
  return c.get_num();
}

std::string RationalFunction::to_string() const {
  if (num_.is_zero()) return "0";
  std::string n = num_.is_monomial() ? num_.to_string() : "(" + num_.to_string() + ")";
  if (den_.is_one()) return n;
  return n + "/" + (den_.is_constant() ? den_.to_string() : "(" + den_.to_string() + ")");
}

void RFAccumulator::add_fraction(MultiPoly num, MultiPoly den) {
  if (num.is_zero()) return;
  for (auto& [d, n] : parts_) {
    if (d == den) {
      n += num;
      return;
    }
  }
  parts_.emplace_back(std::move(den), std::move(num));
}

void RFAccumulator::add(const RF& x) { add_fraction(x.num(), x.den()); }

void RFAccumulator::add_product(const RF& x, const RF& y) {
  if (x.is_zero() || y.is_zero()) return;
  add_fraction(x.num() * y.num(), x.den() * y.den());
}

void RFAccumulator::add_product(const RF& x, const RF& y, const RF& z) {
  if (x.is_zero() || y.is_zero() || z.is_zero()) return;
  add_fraction(x.num() * y.num() * z.num(), x.den() * y.den() * z.den());
}

RF RFAccumulator::value() const {
  RF total;
  for (const auto& [d, n] : parts_) {
    if (!n.is_zero()) total += RF(n, d);
  }
  return total;
}

RationalFunction rf_arith(const RationalFunction& x, const RationalFunction& y, ArithOp op) {
  switch (op) {
    case ArithOp::add: return x + y;
    case ArithOp::sub: return x - y;
    case ArithOp::mul: return x * y;
    case ArithOp::div: return x / y;
  }
  throw std::invalid_argument("unknown arithmetic op");
}

// ------------------------------------------------------------------ parser

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  RationalFunction parse_all() {
    RationalFunction r = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expr() {
    RationalFunction r = term();
    while (true) {
      if (accept('+')) {
        r += term();
      } else if (accept('-')) {
        r -= term();
      } else {
        return r;
      }
    }
  }

  RationalFunction term() {
    RationalFunction r = unary();
    while (true) {
      if (accept('*')) {
        r *= unary();
      } else if (accept('/')) {
        r /= unary();
      } else {
        return r;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (accept('^')) {
      bool negative = accept('-');
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
      if (start == pos_) fail("expected exponent");
      int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      return base.pow(negative ? -e : e);
    }
    return base;
  }

  RationalFunction atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
      return RationalFunction(BigRational(BigInt(std::string(text_.substr(start, pos_ - start)))));
    }
    ++pos_;
    switch (c) {
      case 'p': return RationalFunction::var(Var::p);
      case 'q': return RationalFunction::var(Var::q);
      case 's': return RationalFunction::var(Var::s);
      default: --pos_; fail(std::string("unexpected character '") + c + "'");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction RationalFunction::parse(std::string_view text) { return ExprParser(text).parse_all(); }

BigRational parse_rational(std::string_view text) {
  RationalFunction r = RationalFunction::parse(text);
  if (!r.is_constant()) throw ParseError("expected a rational constant, got '" + std::string(text) + "'");
  return r.constant_value();
}

}  // namespace hopfchern
