#pragma once

// Exact arithmetic in Q(p, q, s).
//
// MultiPoly stores a sparse polynomial in the deformation parameters p, q, s
// with arbitrary-precision rational coefficients, terms kept in descending
// graded-lex order (p < q < s). RationalFunction is a quotient of two such
// polynomials kept in a canonical scaled form: integer coefficients, no
// common rational scalar, no common monomial factor, positive leading
// denominator coefficient. Common polynomial factors are removed by a
// recursive primitive-PRS gcd unless that reduction is switched off with
// set_gcd_reduction(false); equality never depends on it.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hopfchern {

using BigInt = mpz_class;
using BigRational = mpq_class;

enum class Var : std::uint8_t { p = 0, q = 1, s = 2 };
inline constexpr int kNumVars = 3;

char var_name(Var v);

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by the zero rational function") {}
};

class PoleAtPoint : public std::domain_error {
 public:
  explicit PoleAtPoint(const std::string& what) : std::domain_error(what) {}
};

class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// Point of evaluation; variables not present are left unassigned.
using ParamPoint = std::map<Var, BigRational>;

/// Exponent triple packed as (total degree, e_s, e_q, e_p) in 16-bit fields,
/// so integer comparison of keys is the graded-lex order and monomial
/// multiplication is key addition.
class Monomial {
 public:
  constexpr Monomial() = default;
  static Monomial from_key(std::uint64_t key) {
    Monomial m;
    m.key_ = key;
    return m;
  }
  static Monomial of(int ep, int eq, int es);
  static Monomial var(Var v, int power = 1);

  [[nodiscard]] std::uint64_t key() const { return key_; }
  [[nodiscard]] int exponent(Var v) const {
    return static_cast<int>((key_ >> (16 * static_cast<int>(v))) & 0xFFFFu);
  }
  [[nodiscard]] int degree() const { return static_cast<int>(key_ >> 48); }
  [[nodiscard]] bool is_one() const { return key_ == 0; }
  [[nodiscard]] bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& o) const { return from_key(key_ + o.key_); }
  /// Requires divides(*this, o) in reverse: o must divide *this.
  Monomial operator/(const Monomial& o) const { return from_key(key_ - o.key_); }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.key_ <=> b.key_; }

  static Monomial min(const Monomial& a, const Monomial& b);

 private:
  std::uint64_t key_ = 0;
};

class MultiPoly {
 public:
  struct Term {
    Monomial mono;
    BigRational coeff;
  };

  MultiPoly() = default;
  explicit MultiPoly(const BigRational& c);
  explicit MultiPoly(long c) : MultiPoly(BigRational(c)) {}
  MultiPoly(const BigRational& c, const Monomial& m);
  static MultiPoly var(Var v) { return MultiPoly(BigRational(1), Monomial::var(v)); }
  /// Terms must already be sorted descending and free of zeros.
  static MultiPoly from_sorted(std::vector<Term> terms);

  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  [[nodiscard]] bool is_monomial() const { return terms_.size() == 1; }
  [[nodiscard]] bool is_one() const;
  [[nodiscard]] BigRational constant_value() const;
  [[nodiscard]] const Term& leading() const { return terms_.front(); }
  [[nodiscard]] int total_degree() const;
  [[nodiscard]] int degree_in(Var v) const;
  [[nodiscard]] bool contains(Var v) const { return degree_in(v) > 0; }
  /// Componentwise minimum of the exponents over all terms.
  [[nodiscard]] Monomial min_monomial() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  [[nodiscard]] MultiPoly scaled(const BigRational& c) const;
  [[nodiscard]] MultiPoly times_monomial(const Monomial& m) const;
  /// Every term's monomial must be divisible by m.
  [[nodiscard]] MultiPoly div_monomial(const Monomial& m) const;
  [[nodiscard]] MultiPoly pow(unsigned n) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Coefficients of v^0, v^1, ..., v^deg as polynomials free of v.
  [[nodiscard]] std::vector<MultiPoly> coefficients_in(Var v) const;
  [[nodiscard]] MultiPoly substitute(Var v, const BigRational& value) const;
  /// Evaluate with every occurring variable assigned; throws otherwise.
  [[nodiscard]] BigRational eval(const ParamPoint& at) const;

  /// Exact quotient when `divisor` divides *this, std::nullopt otherwise.
  [[nodiscard]] std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;
  /// Divide by the leading coefficient.
  [[nodiscard]] MultiPoly monic() const;

  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<Term> terms_;  // descending monomial order, no zero coefficients
};

/// Greatest common divisor over Q, returned monic (zero only if both are zero).
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

/// Toggles full gcd cancellation in RationalFunction normalization. Content
/// and monomial reduction always run. Intended for benchmarking.
void set_gcd_reduction(bool enabled);
bool gcd_reduction_enabled();

class RationalFunction {
 public:
  RationalFunction() : num_(), den_(1L) {}
  RationalFunction(long c) : RationalFunction(BigRational(c)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const BigRational& c);                          // NOLINT(google-explicit-constructor)
  explicit RationalFunction(MultiPoly num);
  RationalFunction(MultiPoly num, MultiPoly den);

  static RationalFunction var(Var v) { return RationalFunction(MultiPoly::var(v)); }
  static RationalFunction parse(std::string_view text);

  [[nodiscard]] const MultiPoly& num() const { return num_; }
  [[nodiscard]] const MultiPoly& den() const { return den_; }

  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_one() const { return num_.is_one() && den_.is_one(); }
  [[nodiscard]] bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Value of a constant function (requires is_constant()).
  [[nodiscard]] BigRational constant_value() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  [[nodiscard]] RationalFunction inverse() const;
  [[nodiscard]] RationalFunction pow(int n) const;

  /// Cross-multiplication zero test; never uses floating point.
  [[nodiscard]] bool equals(const RationalFunction& o) const;
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) { return a.equals(b); }

  /// Throws PoleAtPoint when the denominator vanishes at `at`.
  [[nodiscard]] BigRational eval(const ParamPoint& at) const;
  [[nodiscard]] RationalFunction substitute(Var v, const BigRational& value) const;
  [[nodiscard]] bool contains(Var v) const { return num_.contains(v) || den_.contains(v); }

  /// n when the function is identically the integer n.
  [[nodiscard]] std::optional<BigInt> as_integer() const;

  /// Parenthesized text over p, q, s with integer literals; parse() inverts it.
  [[nodiscard]] std::string to_string() const;

 private:
  void normalize();

  MultiPoly num_;
  MultiPoly den_;
};

using RF = RationalFunction;

/// Sum of products of rational functions, kept as numerators grouped by
/// unnormalized denominator; one normalization happens in value().
class RFAccumulator {
 public:
  void add(const RF& x);
  void add_product(const RF& x, const RF& y);
  void add_product(const RF& x, const RF& y, const RF& z);
  [[nodiscard]] bool empty() const { return parts_.empty(); }
  [[nodiscard]] RF value() const;

 private:
  void add_fraction(MultiPoly num, MultiPoly den);
  std::vector<std::pair<MultiPoly, MultiPoly>> parts_;  // (denominator, numerator)
};

// Free-function forms of the module operations.
enum class ArithOp { add, sub, mul, div };
RationalFunction rf_arith(const RationalFunction& x, const RationalFunction& y, ArithOp op);
inline bool rf_equals(const RationalFunction& x, const RationalFunction& y) { return x.equals(y); }
inline BigRational rf_eval(const RationalFunction& x, const ParamPoint& at) { return x.eval(at); }
inline std::optional<BigInt> rf_as_integer(const RationalFunction& x) { return x.as_integer(); }

/// Parses "a/b", "-3", "1/2" into a BigRational.
BigRational parse_rational(std::string_view text);

}  // namespace hopfchern
