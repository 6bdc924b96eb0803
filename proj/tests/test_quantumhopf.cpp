#include "hopfchern/quantumhopf.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace hopfchern;
using hopfchern::test::random_nc;
using hopfchern::test::random_word;

namespace {

const RF q = RF::var(Var::q);
const RF s_sym = RF::var(Var::s);
const RF half(BigRational(1, 2));

NCPolynomial U(std::string_view name) { return gen(qsu2(), name); }
NCPolynomial unit() { return NCPolynomial(qsu2(), RF(1)); }
NCPolynomial word(const Word& w) { return NCPolynomial(qsu2(), w); }

/// (ε ⊗ id)Δ(x) and (id ⊗ ε)Δ(x).
std::pair<NCPolynomial, NCPolynomial> counit_sides(const NCPolynomial& x) {
  NCPolynomial left(qsu2()), right(qsu2());
  for (const auto& [k, c] : coproduct(x).terms()) {
    left.add_term(k.second, c * counit(word(k.first)));
    right.add_term(k.first, c * counit(word(k.second)));
  }
  return {left, right};
}

/// m(S ⊗ id)Δ(x) and m(id ⊗ S)Δ(x).
std::pair<NCPolynomial, NCPolynomial> antipode_sides(const NCPolynomial& x) {
  const TensorSquare dx = coproduct(x);
  return {dx.map_left(antipode).contract(), dx.map_right(antipode).contract()};
}

std::vector<NCPolynomial> hopf_sample() {
  std::vector<NCPolynomial> xs = {unit(), U("alpha"), U("alpha*"), U("gamma"), U("gamma*")};
  for (int i = 0; i < 20; ++i) {
    Word w = random_word(qsu2(), 4);
    xs.push_back(normal_form(word(w)));
  }
  return xs;
}

std::map<int, NCPolynomial> by_winding(const std::vector<WindingComponent>& parts) {
  std::map<int, NCPolynomial> out;
  for (const auto& part : parts) out.emplace(part.winding, part.component);
  return out;
}

}  // namespace

TEST_CASE("coproduct examples") {
  CHECK(coproduct(unit()) == TensorSquare::unit(qsu2()));
  const TensorSquare expected =
      TensorSquare::simple(U("alpha"), U("alpha")) - TensorSquare::simple(U("gamma*"), U("gamma")) * q;
  CHECK(coproduct(U("alpha")) == expected);
  const NCPolynomial ag = nf_mul(U("alpha"), U("gamma"));
  CHECK(coproduct(ag) == coproduct(U("alpha")) * coproduct(U("gamma")));
}

TEST_CASE("counit examples") {
  CHECK(counit(U("alpha")) == RF(1));
  CHECK(counit(U("gamma")).is_zero());
  CHECK(counit(qsu2_image(0, s_sym)).is_zero());
  CHECK(counit(qsu2_image(1, s_sym)) == s_sym);
}

TEST_CASE("antipode examples") {
  CHECK(antipode(U("alpha")) == U("alpha*"));
  const NCPolynomial gg = nf_mul(U("gamma"), U("gamma*"));
  CHECK(antipode(gg) == gg);
  CHECK(antipode_sides(U("alpha")).first == unit());
}

TEST_CASE("hopf axioms on generators and random words") {
  for (const auto& x : hopf_sample()) {
    CAPTURE(x.to_string());
    const auto [lhs, rhs] = coassociativity_sides(x);
    CHECK(lhs == rhs);
    const auto [el, er] = counit_sides(x);
    CHECK(el == x);
    CHECK(er == x);
    const auto [sl, sr] = antipode_sides(x);
    CHECK(sl == unit() * counit(x));
    CHECK(sr == unit() * counit(x));
  }
}

TEST_CASE("coproduct is multiplicative") {
  for (int i = 0; i < 10; ++i) {
    const NCPolynomial x = normal_form(random_nc(qsu2(), 2, 2));
    const NCPolynomial y = normal_form(random_nc(qsu2(), 2, 2));
    CHECK(coproduct(nf_mul(x, y)) == coproduct(x) * coproduct(y));
  }
}

TEST_CASE("antipode reverses products") {
  for (int i = 0; i < 20; ++i) {
    const NCPolynomial x = normal_form(random_nc(qsu2(), 2, 3));
    const NCPolynomial y = normal_form(random_nc(qsu2(), 2, 3));
    CHECK(antipode(nf_mul(x, y)) == nf_mul(antipode(y), antipode(x)));
  }
}

TEST_CASE("tensor square arithmetic") {
  const TensorSquare a = TensorSquare::simple(U("alpha"), U("gamma"));
  const TensorSquare b = TensorSquare::simple(U("gamma*"), unit());
  CHECK((a + b) - b == a);
  CHECK((a * b) * a == a * (b * a));
  CHECK((a * RF(0)).is_zero());
  CHECK(a.contract() == nf_mul(U("alpha"), U("gamma")));
  CHECK(a.contract_reversed() == nf_mul(U("gamma"), U("alpha")));
  CHECK(a.sandwich(U("alpha*"), U("gamma*")) ==
        TensorSquare::simple(nf_mul(U("alpha*"), U("alpha")), nf_mul(U("gamma"), U("gamma*"))));
}

TEST_CASE("heegaard coaction by winding") {
  const Presentation& h = heegaard();
  const NCPolynomial ab = normal_form(nc_mul(gen(h, "a"), gen(h, "b")));
  const NCPolynomial bb = normal_form(nc_mul(gen(h, "b"), gen(h, "b*")));
  auto parts = coaction_family1(ab);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].winding == 0);
  CHECK(parts[0].component == ab);
  parts = coaction_family1(bb);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].winding == 0);
  parts = coaction_family1(gen(h, "a"));
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].winding == 1);

  for (int i = 0; i < 20; ++i) {
    const Word u = random_word(h, 3);
    const Word v = random_word(h, 3);
    const NCPolynomial uv = normal_form(NCPolynomial(h, u + v));
    if (uv.is_zero()) continue;
    const auto split = coaction_family1(uv);
    REQUIRE(split.size() == 1);
    CHECK(split[0].winding == h.grade(u) + h.grade(v));
  }
  for (int i = 0; i < 10; ++i) {
    NCPolynomial x(h, RF(1));
    for (int k = 0; k < 3; ++k) x = nf_mul(x, heegaard_image(static_cast<Symbol>(hopfchern::test::uniform(0, 2))));
    const auto split = coaction_family1(x);
    if (x.is_zero()) continue;
    REQUIRE(split.size() == 1);
    CHECK(split[0].winding == 0);
  }
}

TEST_CASE("lift of group-likes") {
  CHECK(lift_family2(0, s_sym).value() == unit());
  const ScaledPolynomial h0 = lift_family2(1, s_sym);
  const NCPolynomial expected =
      (U("alpha") + s_sym * (U("gamma") - q * U("gamma*")) + s_sym * s_sym * U("alpha*")) *
      (1 + s_sym * s_sym).inverse();
  CHECK(h0.value() == expected);
  const NCPolynomial k0 =
      (U("alpha*") - s_sym * (U("gamma") - q * U("gamma*")) + s_sym * s_sym * U("alpha")) *
      (1 + s_sym * s_sym).inverse();
  CHECK(lift_family2(-1, s_sym).value() == k0);
  // products increase from left to right
  const RF q_inv = q.inverse();
  const NCPolynomial k1 = (U("alpha*") - q_inv * s_sym * (U("gamma") - q * U("gamma*")) +
                           q_inv * q_inv * s_sym * s_sym * U("alpha")) *
                          (1 + q_inv * q_inv * s_sym * s_sym).inverse();
  CHECK(lift_family2(-2, s_sym).value() == nf_mul(k0, k1));
  CHECK(lift_family2(3, RF(0)).value() == nf_pow(U("alpha"), 3));
}

TEST_CASE("quotient dimensions and representatives") {
  const QuotientBasis d1 = quotient_basis(half, 1);
  CHECK(d1.dimensions() == std::vector<int>{1, 3});
  CHECK(d1.representatives() == std::vector<Word>{Word(), Word{0}, Word{1}});

  const QuotientBasis d2 = quotient_basis(RF(BigRational(1, 3)), 2);
  CHECK(d2.dimensions() == std::vector<int>{1, 3, 5});
  CHECK(d2.representatives() == std::vector<Word>{Word(), Word{0}, Word{1}, Word{0, 0}, Word{1, 1}});

  CHECK(quotient_basis(s_sym, 1).dimensions() == d1.dimensions());
  CHECK(quotient_basis(RF(0), 3).dimensions() == std::vector<int>{1, 3, 5, 7});
  CHECK(quotient_basis(RF(1), 2).dimensions() == std::vector<int>{1, 3, 5});
}

TEST_CASE("group-likes span the quotient") {
  for (const RF& s : {half, RF(1), s_sym}) {
    const QuotientBasis qb = quotient_basis(s, 2);
    for (int n = -2; n <= 2; ++n) {
      const auto w = qb.windings(lift_family2(n, s).value());
      REQUIRE(w.size() == 1);
      CHECK(w.begin()->first == n);
      CHECK(w.begin()->second == RF(1));
    }
    // the generators of the coideal right ideal vanish in the quotient
    CHECK(qb.windings(qsu2_image(0, s)).empty());
    CHECK(qb.windings(qsu2_image(1, s) - unit() * s).empty());
    CHECK(qb.windings(qsu2_image(2, s) - unit() * s).empty());
  }
}

TEST_CASE("winding split of alpha") {
  const auto w = quotient_basis(half, 1).windings(Word{0});
  CHECK(w == std::map<int, RF>{{-1, RF(BigRational(1, 5))}, {1, RF(BigRational(4, 5))}});
  const auto w0 = quotient_basis(RF(0), 1).windings(Word{0});
  CHECK(w0 == std::map<int, RF>{{1, RF(1)}});
  CHECK_THROWS_AS(quotient_basis(half, 1).windings(Word{0, 0}), DegreeExceeded);
}

TEST_CASE("podles coaction") {
  const QuotientBasis qb0 = quotient_basis(RF(0), 2);
  CHECK(by_winding(coaction_family2(unit(), qb0)) == std::map<int, NCPolynomial>{{0, unit()}});
  CHECK(by_winding(coaction_family2(U("alpha"), qb0)) == std::map<int, NCPolynomial>{{1, U("alpha")}});

  for (const RF& s : {half, s_sym}) {
    const QuotientBasis qb = quotient_basis(s, 2);
    for (Symbol g : {0, 1, 2}) {
      const NCPolynomial x = qsu2_image(g, s);
      CHECK(by_winding(coaction_family2(x, qb)) == std::map<int, NCPolynomial>{{0, x}});
    }
  }
  CHECK_THROWS_AS(coaction_family2(nf_pow(U("alpha"), 3), qb0), DegreeExceeded);
}

TEST_CASE("quotient json") {
  const auto j = quotient_basis(half, 2).to_json();
  CHECK(j.at("dimensions") == nlohmann::json::array({1, 3, 5}));
}
