#pragma once

// Hopf structure of quantum SU(2), tensor squares, the U(1) coactions of
// both families, and the quotient coalgebra by the coideal right ideal
// generated by K, L - s, L* - s.

#include "hopfchern/linalg.hpp"
#include "hopfchern/ncalg.hpp"
#include "hopfchern/presentations.hpp"

#include <memory>
#include <nlohmann/json.hpp>

namespace hopfchern {

class DegenerateQuotient : public std::runtime_error {
 public:
  explicit DegenerateQuotient(const std::string& what) : std::runtime_error(what) {}
};

class DegreeExceeded : public std::out_of_range {
 public:
  explicit DegreeExceeded(const std::string& what) : std::out_of_range(what) {}
};

/// Σ c · left ⊗ right with both legs normal words, each pair stored once.
class TensorSquare {
 public:
  using Key = std::pair<Word, Word>;

  explicit TensorSquare(const Presentation& pres) : pres_(&pres) {}
  TensorSquare(const Presentation& pres, KeyedAccumulator<Key>&& acc) : pres_(&pres), terms_(std::move(acc).finish()) {}
  static TensorSquare unit(const Presentation& pres);
  /// Simple tensor x ⊗ y of normal-form polynomials.
  static TensorSquare simple(const NCPolynomial& x, const NCPolynomial& y);

  [[nodiscard]] const Presentation& presentation() const { return *pres_; }
  [[nodiscard]] const std::map<Key, RF>& terms() const& { return terms_; }
  [[nodiscard]] std::map<Key, RF> terms() && { return std::move(terms_); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  void add_term(const Word& left, const Word& right, const RF& c);
  TensorSquare& operator+=(const TensorSquare& o);
  TensorSquare& operator-=(const TensorSquare& o);
  TensorSquare& operator*=(const RF& c);
  friend TensorSquare operator+(TensorSquare a, const TensorSquare& b) { return a += b; }
  friend TensorSquare operator-(TensorSquare a, const TensorSquare& b) { return a -= b; }
  friend TensorSquare operator*(TensorSquare a, const RF& c) { return a *= c; }
  /// Componentwise product with both legs normal-formed.
  friend TensorSquare operator*(const TensorSquare& a, const TensorSquare& b);
  friend bool operator==(const TensorSquare& a, const TensorSquare& b);

  /// x·(left leg) ⊗ (right leg)·y, legs normal-formed.
  [[nodiscard]] TensorSquare sandwich(const NCPolynomial& x, const NCPolynomial& y) const;
  /// Σ c · left · right, normal-formed.
  [[nodiscard]] NCPolynomial contract() const;
  /// Σ c · right · left, normal-formed.
  [[nodiscard]] NCPolynomial contract_reversed() const;
  /// Apply linear maps to the legs.
  [[nodiscard]] TensorSquare map_left(const std::function<NCPolynomial(const NCPolynomial&)>& f) const;
  [[nodiscard]] TensorSquare map_right(const std::function<NCPolynomial(const NCPolynomial&)>& f) const;

  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] nlohmann::json to_json() const;

 private:
  const Presentation* pres_;
  std::map<Key, RF> terms_;
};

/// Three-fold tensors for coassociativity checks.
using TensorCube = std::map<std::tuple<Word, Word, Word>, RF>;

TensorSquare coproduct(const NCPolynomial& x);
RF counit(const NCPolynomial& x);
NCPolynomial antipode(const NCPolynomial& x);
/// (Δ⊗id)Δ(x) and (id⊗Δ)Δ(x).
std::pair<TensorCube, TensorCube> coassociativity_sides(const NCPolynomial& x);

struct WindingComponent {
  NCPolynomial component;
  int winding;
};

/// Splits x by the heegaard() grading.
std::vector<WindingComponent> coaction_family1(const NCPolynomial& x);

/// numerator / scale.
struct ScaledPolynomial {
  NCPolynomial numerator;
  RF scale;
  [[nodiscard]] NCPolynomial value() const { return numerator * scale; }
};

/// The lift i(u^n): ordered products of the elements h_j (n > 0) or k_j
/// (n < 0), with the scalar denominators kept apart.
ScaledPolynomial lift_family2(int n, const RF& s);

/// Truncation of the quotient coalgebra O(SU_q(2))/J_s to degree d.
class QuotientBasis {
 public:
  [[nodiscard]] int degree_bound() const { return d_; }
  [[nodiscard]] int search_degree() const { return search_degree_; }
  [[nodiscard]] const RF& s() const { return s_; }
  [[nodiscard]] const std::vector<Word>& representatives() const { return reps_; }
  /// Quotient dimension of the degree <= k part, k = 0..d.
  [[nodiscard]] const std::vector<int>& dimensions() const { return dims_; }

  /// Coordinates of a word of length <= d over the representatives.
  [[nodiscard]] std::map<std::size_t, RF> coordinates(const Word& w) const;
  /// Class of a word as a combination of the group-likes g_n, keyed by n.
  [[nodiscard]] std::map<int, RF> windings(const Word& w) const;
  /// Class of a polynomial by winding.
  [[nodiscard]] std::map<int, RF> windings(const NCPolynomial& x) const;

  [[nodiscard]] nlohmann::json to_json() const;

 private:
  friend QuotientBasis quotient_basis(const RF& s, int d);
  struct Priority {
    bool operator()(const Word& a, const Word& b) const;
  };
  struct Cache;

  int d_ = 0;
  int search_degree_ = 0;
  RF s_;
  std::vector<Word> reps_;
  std::vector<int> dims_;
  std::shared_ptr<const Echelon<Word, Priority>> ideal_;
  // The ideal rows plus numerator(i(u^n)) - marker_n / scale_n for |n| <= d.
  std::shared_ptr<const Echelon<Word, Priority>> windings_;
  std::shared_ptr<Cache> cache_;
};

/// All normal words of qsu2() with length <= n, in Word order.
std::vector<Word> qsu2_normal_words(int n);

/// Computes the truncation; representatives are the non-pivot normal words
/// when α-pure words are eliminated last. Throws DegenerateQuotient when the
/// dimension in some degree k <= d is not 2k+1.
QuotientBasis quotient_basis(const RF& s, int d);

/// (id ⊗ π)Δ(x) split by winding.
std::vector<WindingComponent> coaction_family2(const NCPolynomial& x, const QuotientBasis& qb);

}  // namespace hopfchern
