#include "hopfchern/presentations.hpp"

#include <algorithm>

namespace hopfchern {

namespace {

RF P() { return RF::var(Var::p); }
RF Q() { return RF::var(Var::q); }
RF S() { return RF::var(Var::s); }

Word repeat(Symbol s, int n) {
  Word w;
  for (int i = 0; i < n; ++i) w.push(s);
  return w;
}

TermList sorted(TermList t) {
  std::sort(t.begin(), t.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return t;
}

// a = 0, a* = 1, b = 2, b* = 3
Presentation* make_heegaard() {
  const RF p = P();
  const RF q = Q();
  std::vector<SymbolInfo> symbols = {{"a", 1, 1}, {"a*", 0, -1}, {"b", 3, -1}, {"b*", 2, 1}};
  std::vector<LiteralRule> rules = {
      {{1, 0}, sorted({{Word{0, 1}, q}, {Word(), 1 - q}})},
      {{3, 2}, sorted({{Word{2, 3}, p}, {Word(), 1 - p}})},
      {{2, 0}, {{Word{0, 2}, 1}}},
      {{2, 1}, {{Word{1, 2}, 1}}},
      {{3, 0}, {{Word{0, 3}, 1}}},
      {{3, 1}, {{Word{1, 3}, 1}}},
  };
  // (1 - aa*)(1 - bb*) = 0 generates  a a*^j b^k b* = a*^{j-1} b^k b* + a a*^j b^{k-1} - a*^{j-1} b^{k-1}.
  RunPattern disc{"a a*^j b^k b*",
                  {{0, false}, {1, true}, {2, true}, {3, false}},
                  [](const std::vector<int>& runs) {
                    const int j = runs[0];
                    const int k = runs[1];
                    const Word astar_tail = repeat(1, j - 1);
                    const Word b_head = repeat(2, k - 1);
                    return sorted({{astar_tail + repeat(2, k) + Word{3}, RF(1)},
                                   {Word{0} + repeat(1, j) + b_head, RF(1)},
                                   {astar_tail + b_head, RF(-1)}});
                  }};
  return new Presentation("HEEGAARD", std::move(symbols), true, std::move(rules), {std::move(disc)});
}

// alpha = 0, alpha* = 1, gamma = 2, gamma* = 3
Presentation* make_qsu2() {
  const RF q = Q();
  const RF qinv = RF(1) / q;
  std::vector<SymbolInfo> symbols = {
      {"alpha", 1, 0, 1}, {"alpha*", 0, 0, 1}, {"gamma", 3, 0, 0}, {"gamma*", 2, 0, 0}};
  std::vector<LiteralRule> rules = {
      {{2, 0}, {{Word{0, 2}, qinv}}},
      {{3, 0}, {{Word{0, 3}, qinv}}},
      {{2, 1}, {{Word{1, 2}, q}}},
      {{3, 1}, {{Word{1, 3}, q}}},
      {{3, 2}, {{Word{2, 3}, 1}}},
      {{1, 0}, sorted({{Word(), 1}, {Word{2, 3}, -1}})},
      {{0, 1}, sorted({{Word(), 1}, {Word{2, 3}, -(q * q)}})},
  };
  return new Presentation("QSU2", std::move(symbols), false, std::move(rules));
}

// f0 = 0, f1 = 1, f1* = 2
Presentation* make_s2pq() {
  const RF p = P();
  const RF q = Q();
  std::vector<SymbolInfo> symbols = {{"f0", 0}, {"f1", 2}, {"f1*", 1}};
  std::vector<LiteralRule> rules = {
      {{2, 1}, sorted({{Word{1, 2}, q}, {Word{0}, p - q}, {Word(), 1 - p}})},
      {{1, 0}, sorted({{Word{0, 1}, 1 / p}, {Word{1}, -(1 - p) / p}})},
      {{2, 0}, sorted({{Word{0, 2}, p}, {Word{2}, 1 - p}})},
      {{0, 1, 2}, sorted({{Word{1, 2}, 1}, {Word{0}, -1}, {Word{0, 0}, 1}})},
  };
  return new Presentation("S2PQ", std::move(symbols), false, std::move(rules));
}

// K = 0, L = 1, L* = 2
Presentation* make_podles() {
  const RF q = Q();
  const RF s = S();
  const RF q2 = q * q;
  const RF s2 = s * s;
  std::vector<SymbolInfo> symbols = {{"K", 0}, {"L", 2}, {"L*", 1}};
  std::vector<LiteralRule> rules = {
      {{1, 0}, {{Word{0, 1}, q2}}},
      {{2, 0}, {{Word{0, 2}, 1 / q2}}},
      {{2, 1}, sorted({{Word{0, 0}, -1}, {Word{0}, 1 - s2}, {Word(), s2}})},
      {{1, 2}, sorted({{Word{0, 0}, -(q2 * q2)}, {Word{0}, (1 - s2) * q2}, {Word(), s2}})},
  };
  return new Presentation("PODLES", std::move(symbols), false, std::move(rules));
}

}  // namespace

const Presentation& heegaard() {
  static const Presentation* pres = make_heegaard();
  return *pres;
}

const Presentation& qsu2() {
  static const Presentation* pres = make_qsu2();
  return *pres;
}

const Presentation& s2pq() {
  static const Presentation* pres = make_s2pq();
  return *pres;
}

const Presentation& podles() {
  static const Presentation* pres = make_podles();
  return *pres;
}

NCPolynomial heegaard_image(Symbol base_generator) {
  const Presentation& h = heegaard();
  switch (base_generator) {
    case 0: return normal_form(NCPolynomial(h, Word{2, 3}));
    case 1: return normal_form(NCPolynomial(h, Word{0, 2}));
    case 2: return normal_form(NCPolynomial(h, Word{3, 1}));
    default: throw std::out_of_range("heegaard_image: unknown base generator");
  }
}

NCPolynomial qsu2_image(Symbol base_generator, const RF& s) {
  const Presentation& u = qsu2();
  const RF q = Q();
  const RF t = 1 - s * s;
  NCPolynomial image(u);
  switch (base_generator) {
    case 0:  // s(gamma alpha + alpha* gamma*) + (1 - s^2) gamma* gamma
      image = NCPolynomial(u, Word{2, 0}, s) + NCPolynomial(u, Word{1, 3}, s) + NCPolynomial(u, Word{3, 2}, t);
      break;
    case 1:  // s(alpha^2 - q gamma*^2) + (1 - s^2) alpha gamma*
      image = NCPolynomial(u, Word{0, 0}, s) + NCPolynomial(u, Word{3, 3}, -(q * s)) + NCPolynomial(u, Word{0, 3}, t);
      break;
    case 2:
      image = star(qsu2_image(1, s));
      break;
    default: throw std::out_of_range("qsu2_image: unknown base generator");
  }
  return normal_form(image);
}

}  // namespace hopfchern
