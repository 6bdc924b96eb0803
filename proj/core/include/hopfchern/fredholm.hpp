#pragma once

// Weighted-shift representations on l^2(N) with basis e_0, e_1, ... and the
// trace pairings built from them.
//
// At level k the geometric variable is x = base^k. A generator acts by a
// scalar, by a diagonal D(x), or by a shift up or down whose squared weight
// W(x) is evaluated at the source level. All shifts of one representation
// share a single edge function E(x), the squared weight between levels k and
// k + 1 at x = base^k, so matrix coefficients of zero-shift words are
// polynomials in x.

#include "hopfchern/subspan.hpp"

namespace hopfchern {

class RelationViolated : public std::runtime_error {
 public:
  explicit RelationViolated(const std::string& what) : std::runtime_error(what) {}
};

class MismatchedRestriction : public std::runtime_error {
 public:
  explicit MismatchedRestriction(const std::string& what) : std::runtime_error(what) {}
};

class UnknownSymbol : public std::invalid_argument {
 public:
  explicit UnknownSymbol(const std::string& what) : std::invalid_argument(what) {}
};

class NotSummable : public std::domain_error {
 public:
  explicit NotSummable(const std::string& what) : std::domain_error(what) {}
};

class NotConstant : public std::domain_error {
 public:
  explicit NotConstant(const std::string& what) : std::domain_error(what) {}
};

class ParameterOutOfRange : public std::invalid_argument {
 public:
  explicit ParameterOutOfRange(const std::string& what) : std::invalid_argument(what) {}
};

/// Polynomial in x: power -> coefficient, no zero coefficients.
using XPoly = std::map<int, RF>;

std::string xpoly_string(const XPoly& f);

struct Action {
  enum class Kind { scalar, diagonal, up, down };
  Kind kind = Kind::scalar;
  /// The scalar as a constant polynomial, D(x), or the squared weight W(x).
  XPoly poly;

  static Action scalar(const RF& c);
  static Action diagonal(XPoly d);
  static Action up(XPoly w);
  static Action down(XPoly w);
};

/// Matrix coefficients of an operator moving every e_k to level k + shift:
/// the coefficient at level k is (generic(base^k) + corrections[k]) times
/// the square roots of the edge weights between k and k + shift.
struct ShiftSeries {
  int shift = 0;
  XPoly generic;
  /// Finitely many low levels where the generic formula does not apply.
  std::map<int, RF> corrections;

  [[nodiscard]] bool is_zero() const { return generic.empty() && corrections.empty(); }
  friend bool operator==(const ShiftSeries& a, const ShiftSeries& b);
};

using DiagonalSeries = ShiftSeries;

class ShiftRepresentation {
 public:
  /// Star partners missing from `actions` get the adjoint action. With a
  /// nonempty specialization the relations of `pres` are checked after
  /// substituting those parameter values.
  ShiftRepresentation(std::string name, const Presentation& pres, RF base, std::map<Symbol, Action> actions,
                      ParamPoint specialization = {});

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] const Presentation& presentation() const { return *pres_; }
  [[nodiscard]] const RF& base() const { return base_; }
  [[nodiscard]] const ParamPoint& specialization() const { return specialization_; }
  [[nodiscard]] const Action& action(Symbol s) const;
  [[nodiscard]] bool has_action(Symbol s) const { return actions_.count(s) != 0; }
  /// E(x); empty when no generator shifts.
  [[nodiscard]] const XPoly& edge_weight() const { return edge_; }

  [[nodiscard]] ShiftSeries word_operator(const Word& w) const;
  /// Nonzero parts of the operator of x keyed by shift.
  [[nodiscard]] std::map<int, ShiftSeries> operator_of(const NCPolynomial& x) const;

 private:
  std::string name_;
  const Presentation* pres_;
  RF base_;
  std::map<Symbol, Action> actions_;
  ParamPoint specialization_;
  XPoly edge_;
};

ShiftRepresentation rho1();
ShiftRepresentation rho2();
ShiftRepresentation sigma1();
ShiftRepresentation sigma2();
/// s must be a rational constant or the symbol s.
ShiftRepresentation pi_minus(const RF& s);
ShiftRepresentation pi_plus(const RF& s);

/// Checks every rewrite rule (run patterns up to length 3) as an operator
/// identity; throws RelationViolated naming the first failing rule. Returns
/// the number of relations checked.
std::size_t rep_check(const ShiftRepresentation& rep);

/// sigma1 and sigma2 on the images of f0, f1, f1* against rho1 and rho2;
/// throws MismatchedRestriction. Returns the number of comparisons.
std::size_t restriction_check();

/// Matrix coefficient <e_k, w e_k> as a series in k; nullopt when the net
/// shift of w is nonzero.
std::optional<DiagonalSeries> diagonal(const Word& w, const ShiftRepresentation& rep);
DiagonalSeries diagonal(const NCPolynomial& x, const ShiftRepresentation& rep);

/// Σ_k <e_k, (plus(x) - minus(x)) e_k> in closed form. NotSummable when the
/// level-independent parts do not cancel.
RF trace_pairing(const NCPolynomial& x, const ShiftRepresentation& plus, const ShiftRepresentation& minus);

/// A character given by the values of the generators, applied to x.
RF apply_character(const NCPolynomial& x, const std::map<Symbol, RF>& values);
/// a, a*, b, b* -> 1 on heegaard().
const std::map<Symbol, RF>& heegaard_character();
/// Rules whose two sides differ under the character.
std::vector<std::string> character_violations(const Presentation& pres, const std::map<Symbol, RF>& values);

struct PairingResult {
  Family family;
  int mu;
  RF s;
  NCPolynomial trace_element;
  /// The trace element in the base generators (podles family).
  std::optional<NCPolynomial> base_expression;
  std::string span;
  RF chern;
  RF rank;

  [[nodiscard]] std::optional<BigInt> chern_integer() const { return chern.as_integer(); }
};

/// The trace element of the line bundle with label mu paired with the
/// Fredholm module (sigma2, sigma1) or (pi_minus, pi_plus), and with the
/// character (heegaard_character or the counit).
PairingResult pairing(Family family, int mu, const RF& s = RF());
/// pairing(...).chern as an integer; NotConstant otherwise.
BigInt chern_number(Family family, int mu, const RF& s = RF());
RF rank_pairing(Family family, int mu, const RF& s = RF());

struct NumericPairing {
  double estimate = 0;
  double tail_bound = 0;
};

/// Truncated trace over levels 0..n-1 with square roots taken in double
/// precision. params needs p and q (heegaard) or q and s (podles), with p, q
/// in ]0,1[ and s in [0,1].
NumericPairing numeric_pairing(Family family, int mu, const ParamPoint& params, int n);

}  // namespace hopfchern
