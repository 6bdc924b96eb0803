#pragma once

// Rewriting coinvariant elements of an ambient algebra in monomials of the
// base generators (f0, f1, f1* or K, L, L*) by exact linear algebra.

#include "hopfchern/connection.hpp"
#include "hopfchern/linalg.hpp"

namespace hopfchern {

class NotInSpan : public std::runtime_error {
 public:
  explicit NotInSpan(NCPolynomial residual);
  [[nodiscard]] const NCPolynomial& residual() const { return residual_; }

 private:
  NCPolynomial residual_;
};

/// Base algebra of a family: s2pq() or podles().
const Presentation& base_presentation(Family f);

/// Formal base monomials with their normal-formed ambient images.
class SpanningSet {
 public:
  SpanningSet(Family family, RF s, std::vector<Word> monomials);

  [[nodiscard]] Family family() const { return family_; }
  [[nodiscard]] const RF& s() const { return s_; }
  [[nodiscard]] const Presentation& ambient_presentation() const { return ambient(family_); }
  [[nodiscard]] const Presentation& base() const { return base_presentation(family_); }
  /// Words over the base generators.
  [[nodiscard]] const std::vector<Word>& monomials() const { return monomials_; }
  [[nodiscard]] const std::vector<NCPolynomial>& images() const { return images_; }
  [[nodiscard]] std::size_t size() const { return monomials_.size(); }

  /// x as a combination of monomials (a polynomial over base()); NotInSpan
  /// carries the part of x outside the span.
  [[nodiscard]] NCPolynomial express(const NCPolynomial& x) const;

 private:
  Family family_;
  RF s_;
  std::vector<Word> monomials_;
  std::vector<NCPolynomial> images_;
  std::shared_ptr<const Echelon<Word>> echelon_;
};

/// Ordered monomials with ambient degree <= bound: K^i L^j and K^i L*^j,
/// each generator of degree 2. The heegaard family uses
/// f0^i (f1 f1*)^m f1^j and f0^i (f1 f1*)^m f1*^j, where the pair f1 f1*
/// also counts 2 since its image is aa* + bb* - 1.
SpanningSet build_span(Family family, int degree_bound, const RF& s = RF());

/// Every word in the base generators of length <= length_bound.
SpanningSet word_fallback_span(Family family, int length_bound, const RF& s = RF());

/// Ambient image of a base polynomial, normal-formed.
NCPolynomial ambient_image(const NCPolynomial& base_poly, const RF& s = RF());

struct Expression {
  NCPolynomial value;
  /// Which spanning set succeeded.
  std::string span;
};

/// express with escalation: ordered monomials at the degree of x, then +2
/// twice, then the word span at the last length.
Expression express_escalating(Family family, const NCPolynomial& x, const RF& s = RF());

/// {"monomial": "coefficient"} in the base generator names.
nlohmann::json base_expression_json(const NCPolynomial& base_poly);

}  // namespace hopfchern
