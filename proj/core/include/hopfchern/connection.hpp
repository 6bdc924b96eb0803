#pragma once

// Strong connections on the two U(1) fibrations, the idempotents of the
// associated line bundles, and the degree-0 trace elements.
//
// The corepresentation with label mu uses the group-like u^{-mu}.

#include "hopfchern/quantumhopf.hpp"

#include <optional>

namespace hopfchern {

enum class Family { heegaard, podles };

std::string family_name(Family f);
Family parse_family(std::string_view text);
const Presentation& ambient(Family f);

struct ConnectionValue {
  Family family;
  int mu;
  /// Podles parameter (unused for the heegaard family).
  RF s;
  /// Σ l_i ⊗ r_i with normal-form legs, merged.
  TensorSquare value;

  [[nodiscard]] nlohmann::json to_json() const;
};

ConnectionValue ell_family1(int mu);
ConnectionValue ell_family2(int mu, const RF& s);

/// Right legs grouped: ℓ = Σ_k left[k] ⊗ right[k] with distinct right words.
struct GroupedConnection {
  std::vector<Word> right_words;
  std::vector<NCPolynomial> left;
};
GroupedConnection group_by_right(const ConnectionValue& c);

/// Winding -mu part of each right word (identity for the heegaard family,
/// which is graded). The podles family needs a quotient of degree >= |mu|.
std::vector<NCPolynomial> projected_right_legs(const ConnectionValue& c, const GroupedConnection& g,
                                               const QuotientBasis* qb);

struct IdempotentMatrix {
  std::size_t size = 0;
  /// Row-major entries E_ij = r_i · l_j, normal-formed.
  std::vector<NCPolynomial> entries;
  /// The factors r_i and l_j when known; empty for a bare matrix.
  std::vector<NCPolynomial> right_legs;
  std::vector<NCPolynomial> left_legs;

  [[nodiscard]] const NCPolynomial& at(std::size_t i, std::size_t j) const { return entries[i * size + j]; }
  [[nodiscard]] NCPolynomial trace() const;
};

IdempotentMatrix idempotent(const ConnectionValue& c, const QuotientBasis* qb = nullptr);
/// Entrywise residual E·E - E; all zero for an idempotent. With known
/// factors E·E is evaluated as r_i (Σ_j l_j r_j) l_k, otherwise by the
/// full matrix product.
std::vector<NCPolynomial> idempotent_defect(const IdempotentMatrix& e);
/// Number of (i, j) with star(E_ij) != E_ji after normal form.
std::size_t star_defect(const IdempotentMatrix& e);

/// normal_form(Σ r_i · l_i).
NCPolynomial trace_element(const ConnectionValue& c);

struct ConnectionReport {
  explicit ConnectionReport(const Presentation& pres) : contraction_residual(pres) {}
  bool contraction_ok = false;
  NCPolynomial contraction_residual;
  bool canonical_ok = false;
  /// Σ l_i · (winding-n part of r_i) by n.
  std::map<int, NCPolynomial> canonical_components;
  bool unit_ok = false;
  [[nodiscard]] bool ok() const { return contraction_ok && canonical_ok && unit_ok; }
  [[nodiscard]] nlohmann::json to_json() const;
};

/// The podles family needs a quotient basis of degree >= |mu|.
ConnectionReport verify_connection(const ConnectionValue& c, const QuotientBasis* qb = nullptr);

}  // namespace hopfchern
