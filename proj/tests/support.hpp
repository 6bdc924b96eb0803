#pragma once

// Seeded generators for property tests.

#include "hopfchern/ncalg.hpp"

#include <random>

namespace hopfchern::test {

inline std::mt19937& rng() {
  static std::mt19937 gen(20240611u);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline MultiPoly random_poly(int max_terms = 2, int max_exp = 1) {
  MultiPoly out;
  const int n = uniform(1, max_terms);
  for (int i = 0; i < n; ++i) {
    const auto mono = Monomial::of(uniform(0, max_exp), uniform(0, max_exp), uniform(0, max_exp));
    BigRational c(uniform(-4, 4), uniform(1, 3));
    c.canonicalize();
    out += MultiPoly(c, mono);
  }
  return out;
}

inline MultiPoly random_nonzero_poly() {
  MultiPoly out;
  while (out.is_zero()) out = random_poly();
  return out;
}

inline RF random_rf() { return RF(random_poly(), random_nonzero_poly()); }

/// A generic point of ]0,1[^3 unlikely to hit a pole.
inline ParamPoint random_point() {
  auto r = [] { return BigRational(uniform(1, 96), 97); };
  return {{Var::p, r()}, {Var::q, r()}, {Var::s, r()}};
}

inline Word random_word(const Presentation& pres, int max_len) {
  Word w;
  const int len = uniform(0, max_len);
  for (int i = 0; i < len; ++i) w.push(static_cast<Symbol>(uniform(0, static_cast<int>(pres.alphabet_size()) - 1)));
  return w;
}

/// Small polynomial with integer coefficients in the given presentation.
inline NCPolynomial random_nc(const Presentation& pres, int max_terms = 3, int max_len = 3) {
  NCPolynomial x(pres);
  const int n = uniform(1, max_terms);
  for (int i = 0; i < n; ++i) x.add_term(random_word(pres, max_len), RF(uniform(-3, 3)));
  return x;
}

}  // namespace hopfchern::test
