#include "hopfchern/fredholm.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace hopfchern;
using hopfchern::test::uniform;

namespace {

const RF p = RF::var(Var::p);
const RF q = RF::var(Var::q);
const RF s_sym = RF::var(Var::s);
const RF half(BigRational(1, 2));

NCPolynomial S2(std::string_view name) { return gen(s2pq(), name); }
NCPolynomial P2(std::string_view name) { return gen(podles(), name); }
NCPolynomial H(std::string_view name) { return gen(heegaard(), name); }

RF value_at_one(const XPoly& f) {
  RF total;
  for (const auto& [k, c] : f) total += c;
  return total;
}

/// Random words over the base generators; no normal form is needed since the
/// representations act on words.
NCPolynomial random_base(const Presentation& pres) {
  return hopfchern::test::random_nc(pres, 3, 3);
}

BigRational rational(int n, int d) {
  BigRational x(n, d);
  x.canonicalize();
  return x;
}

}  // namespace

TEST_CASE("shipped representations satisfy their relations") {
  CHECK(rep_check(rho1()) == 4);
  CHECK(rep_check(rho2()) == 4);
  CHECK(rep_check(sigma1()) > 0);
  CHECK(rep_check(sigma2()) > 0);
  for (const RF& s : {s_sym, half, RF(0), RF(1), RF(BigRational(1, 3))}) {
    CAPTURE(s.to_string());
    CHECK(rep_check(pi_minus(s)) == 4);
    CHECK(rep_check(pi_plus(s)) == 4);
  }
}

TEST_CASE("a wrong weight is detected") {
  const ShiftRepresentation bad("bad", s2pq(), p,
                                {{0, Action::diagonal({{0, RF(1)}, {1, RF(-1)}})},
                                 {1, Action::up({{0, RF(1)}, {1, -q}})}});
  CHECK_THROWS_AS(rep_check(bad), RelationViolated);
}

TEST_CASE("restriction to the mirror sphere") {
  CHECK(restriction_check() == 6);
  const NCPolynomial f0 = heegaard_image(0);
  const NCPolynomial f1 = heegaard_image(1);
  CHECK(diagonal(f0, sigma1()) == diagonal(S2("f0"), rho1()));
  CHECK(diagonal(f0, sigma1()).generic == XPoly{{0, RF(1)}, {1, RF(-1)}});
  CHECK(diagonal(f0, sigma2()).generic == XPoly{{0, RF(1)}});
  CHECK(sigma2().operator_of(f1) == rho2().operator_of(S2("f1")));
  CHECK(sigma2().edge_weight() == XPoly{{0, RF(1)}, {1, -q}});
  CHECK(sigma1().operator_of(f1) == rho1().operator_of(S2("f1")));
}

TEST_CASE("relations as identities in the level variable") {
  const NCPolynomial rel = nc_mul(S2("f1*"), S2("f1")) - q * nc_mul(S2("f1"), S2("f1*")) - (p - q) * S2("f0") -
                           NCPolynomial(s2pq(), 1 - p);
  CHECK(diagonal(rel, rho1()).is_zero());
  CHECK(diagonal(rel, rho2()).is_zero());

  for (const RF& s : {s_sym, half}) {
    const RF s2 = s * s;
    const NCPolynomial sphere = nc_mul(P2("L*"), P2("L")) + nc_mul(P2("K"), P2("K")) - (1 - s2) * P2("K") -
                                NCPolynomial(podles(), s2);
    CHECK(diagonal(sphere, pi_plus(s)).is_zero());
    CHECK(diagonal(sphere, pi_minus(s)).is_zero());
  }

  const NCPolynomial one(heegaard(), RF(1));
  const auto d = diagonal(one - nc_mul(H("a"), H("a*")), sigma2());
  CHECK(d.generic == XPoly{{1, RF(1)}});
  CHECK(diagonal(one - nc_mul(H("b"), H("b*")), sigma2()).is_zero());
}

TEST_CASE("lowest weights vanish") {
  for (const RF& s : {s_sym, half, RF(1)}) {
    CHECK(value_at_one(pi_plus(s).action(1).poly).is_zero());
    CHECK(value_at_one(pi_minus(s).action(1).poly).is_zero());
  }
}

TEST_CASE("diagonals of words") {
  const auto f1s_f1 = diagonal(Word{2, 1}, rho1());
  REQUIRE(f1s_f1.has_value());
  CHECK(f1s_f1->generic == XPoly{{0, RF(1)}, {1, -p}});
  CHECK(f1s_f1->corrections.empty());

  const auto k = diagonal(Word{0}, pi_minus(s_sym));
  REQUIRE(k.has_value());
  CHECK(k->generic == XPoly{{1, -s_sym * s_sym}});

  CHECK_FALSE(diagonal(Word{0}, sigma2()).has_value());
  CHECK(xpoly_string(f1s_f1->generic) == "(-p)*x + (1)");
}

TEST_CASE("trace pairing examples") {
  CHECK(trace_pairing(S2("f0"), rho2(), rho1()) == RF(1) / (1 - p));
  CHECK(trace_pairing(P2("K"), pi_minus(s_sym), pi_plus(s_sym)) == -(1 + s_sym * s_sym) / (1 - q * q));
  // the two constants agree, so the unit pairs to zero
  CHECK(trace_pairing(NCPolynomial(s2pq(), RF(1)), rho2(), rho1()).is_zero());
  CHECK(trace_pairing(S2("f1"), rho2(), rho1()).is_zero());
}

TEST_CASE("non-summable difference") {
  const ShiftRepresentation doubled("doubled", s2pq(), p,
                                    {{0, Action::scalar(2)}, {1, Action::up({{0, RF(1)}, {1, -p}})}});
  CHECK_THROWS_AS(trace_pairing(S2("f0"), doubled, rho1()), NotSummable);
  CHECK_THROWS_AS(trace_pairing(H("a"), rho2(), rho1()), PresentationMismatch);
}

TEST_CASE("pairing is linear") {
  for (int i = 0; i < 15; ++i) {
    const NCPolynomial x = random_base(s2pq());
    const NCPolynomial y = random_base(s2pq());
    const RF c(uniform(-3, 3));
    CHECK(trace_pairing(x + c * y, rho2(), rho1()) ==
          trace_pairing(x, rho2(), rho1()) + c * trace_pairing(y, rho2(), rho1()));
    const NCPolynomial u = random_base(podles());
    const NCPolynomial v = random_base(podles());
    CHECK(trace_pairing(u + v, pi_minus(half), pi_plus(half)) ==
          trace_pairing(u, pi_minus(half), pi_plus(half)) + trace_pairing(v, pi_minus(half), pi_plus(half)));
  }
}

TEST_CASE("pairing is a trace") {
  for (int i = 0; i < 15; ++i) {
    const NCPolynomial x = random_base(s2pq());
    const NCPolynomial y = random_base(s2pq());
    CHECK(trace_pairing(nc_mul(x, y), rho2(), rho1()) == trace_pairing(nc_mul(y, x), rho2(), rho1()));
    const NCPolynomial u = random_base(podles());
    const NCPolynomial v = random_base(podles());
    for (const RF& s : {half, s_sym}) {
      CHECK(trace_pairing(nc_mul(u, v), pi_minus(s), pi_plus(s)) ==
            trace_pairing(nc_mul(v, u), pi_minus(s), pi_plus(s)));
    }
  }
}

TEST_CASE("generator line bundle, step by step") {
  const PairingResult r = pairing(Family::heegaard, -1);
  const NCPolynomial one(heegaard(), RF(1));
  const NCPolynomial aa = nc_mul(H("a"), H("a*"));
  CHECK(r.trace_element == normal_form(aa + q * nc_mul(nc_mul(H("b*"), H("b")), one - aa)));
  CHECK(diagonal(r.trace_element, sigma2()).generic == XPoly{{0, RF(1)}, {1, q - 1}});
  CHECK(diagonal(r.trace_element, sigma1()).generic == XPoly{{0, RF(1)}});
  CHECK(r.chern == RF(-1));
  CHECK(r.rank == RF(1));
}

TEST_CASE("chern numbers equal the winding number") {
  for (int mu = -4; mu <= 4; ++mu) {
    CAPTURE(mu);
    CHECK(chern_number(Family::heegaard, mu) == mu);
    CHECK(rank_pairing(Family::heegaard, mu) == RF(1));
  }
  for (int mu = -3; mu <= 3; ++mu) {
    CAPTURE(mu);
    const PairingResult r = pairing(Family::podles, mu, half);
    CHECK(r.chern_integer() == BigInt(mu));
    CHECK(r.rank == RF(1));
    REQUIRE(r.base_expression.has_value());
  }
  for (int mu = -2; mu <= 2; ++mu) {
    CAPTURE(mu);
    CHECK(chern_number(Family::podles, mu, s_sym) == mu);
    CHECK(rank_pairing(Family::podles, mu, s_sym) == RF(1));
  }
  CHECK(chern_number(Family::podles, 1, RF(1)) == 1);
  CHECK(chern_number(Family::podles, -1, RF(0)) == -1);
}

TEST_CASE("mirror sphere path agrees") {
  for (int mu = -3; mu <= 3; ++mu) {
    CAPTURE(mu);
    const NCPolynomial x = trace_element(ell_family1(mu));
    const Expression e = express_escalating(Family::heegaard, x);
    CHECK(trace_pairing(e.value, rho2(), rho1()) == RF(mu));
  }
}

TEST_CASE("characters") {
  CHECK(character_violations(heegaard(), heegaard_character()).empty());
  const std::map<Symbol, RF> zero = {{0, RF(0)}, {1, RF(0)}, {2, RF(0)}, {3, RF(0)}};
  CHECK_FALSE(character_violations(heegaard(), zero).empty());
  for (int mu = -3; mu <= 3; ++mu) {
    CHECK(apply_character(trace_element(ell_family1(mu)), heegaard_character()) == RF(1));
  }
}

TEST_CASE("numeric pairing examples") {
  const ParamPoint heegaard_point = {{Var::p, rational(1, 3)}, {Var::q, rational(1, 2)}};
  const NumericPairing n1 = numeric_pairing(Family::heegaard, -1, heegaard_point, 64);
  CHECK(std::abs(n1.estimate + 1) < 1e-12);
  CHECK(n1.tail_bound < 1e-15);

  const ParamPoint podles_point = {{Var::q, rational(1, 2)}, {Var::s, rational(1, 2)}};
  const NumericPairing n2 = numeric_pairing(Family::podles, 1, podles_point, 64);
  CHECK(std::abs(n2.estimate - 1) < 1e-10);

  CHECK(numeric_pairing(Family::heegaard, 0, heegaard_point, 64).estimate == 0.0);
  CHECK(numeric_pairing(Family::podles, 0, podles_point, 64).estimate == 0.0);
}

TEST_CASE("numeric and exact pairings agree at random points") {
  for (int i = 0; i < 5; ++i) {
    const ParamPoint hp = {{Var::p, rational(uniform(1, 9), 10)}, {Var::q, rational(uniform(1, 9), 10)}};
    const ParamPoint pp = {{Var::q, rational(uniform(1, 9), 10)}, {Var::s, rational(uniform(0, 10), 10)}};
    for (int mu = -2; mu <= 2; ++mu) {
      CAPTURE(mu);
      const NumericPairing a = numeric_pairing(Family::heegaard, mu, hp, 64);
      const double ea = pairing(Family::heegaard, mu).chern.eval(hp).get_d();
      CHECK(std::abs(a.estimate - ea) <= a.tail_bound + 1e-9);
      const NumericPairing b = numeric_pairing(Family::podles, mu, pp, 64);
      const RF s(pp.at(Var::s));
      const double eb = pairing(Family::podles, mu, s).chern.eval(pp).get_d();
      CHECK(std::abs(b.estimate - eb) <= b.tail_bound + 1e-9);
    }
  }
}

TEST_CASE("tail bound shrinks with the truncation") {
  const ParamPoint at = {{Var::p, rational(9, 10)}, {Var::q, rational(9, 10)}};
  const NumericPairing coarse = numeric_pairing(Family::heegaard, 2, at, 16);
  const NumericPairing fine = numeric_pairing(Family::heegaard, 2, at, 128);
  CHECK(fine.tail_bound < coarse.tail_bound);
  CHECK(std::abs(coarse.estimate - 2) <= coarse.tail_bound + 1e-9);
  CHECK(std::abs(fine.estimate - 2) <= fine.tail_bound + 1e-9);
}

TEST_CASE("parameters out of range") {
  CHECK_THROWS_AS(numeric_pairing(Family::heegaard, 1, {{Var::p, rational(1, 2)}, {Var::q, rational(1, 1)}}, 64),
                  ParameterOutOfRange);
  CHECK_THROWS_AS(numeric_pairing(Family::podles, 1, {{Var::q, rational(1, 2)}, {Var::s, rational(2, 1)}}, 64),
                  ParameterOutOfRange);
  CHECK_THROWS_AS(numeric_pairing(Family::podles, 1, {{Var::q, rational(1, 2)}}, 64), ParameterOutOfRange);
}
