#include "hopfchern/subspan.hpp"

#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace hopfchern;

namespace {

const RF q = RF::var(Var::q);
const RF s_sym = RF::var(Var::s);
const RF half(BigRational(1, 2));

std::set<std::string> names(const SpanningSet& span) {
  std::set<std::string> out;
  for (const Word& w : span.monomials()) out.insert(span.base().word_string(w));
  return out;
}

NCPolynomial B(Family f, std::string_view name) { return gen(base_presentation(f), name); }

}  // namespace

TEST_CASE("ordered monomials of the podles sphere") {
  CHECK(names(build_span(Family::podles, 2, half)) == std::set<std::string>{"1", "K", "L", "L*"});
  CHECK(names(build_span(Family::podles, 4, half)) ==
        std::set<std::string>{"1", "K", "L", "L*", "K K", "K L", "K L*", "L L", "L* L*"});
  CHECK(build_span(Family::podles, 0, half).size() == 1);
}

TEST_CASE("ordered monomials of the mirror sphere") {
  // the pair f1 f1* is needed to reach a a*
  CHECK(names(build_span(Family::heegaard, 2)) == std::set<std::string>{"1", "f0", "f1", "f1*", "f1 f1*"});
  CHECK(build_span(Family::heegaard, 4).size() == 14);
}

TEST_CASE("word spans") {
  CHECK(names(word_fallback_span(Family::heegaard, 1)) == std::set<std::string>{"1", "f0", "f1", "f1*"});
  const auto words = names(word_fallback_span(Family::podles, 2, half));
  CHECK(words.count("L K") == 1);
  CHECK(words.count("K L") == 1);
  CHECK(words.size() == 13);
}

TEST_CASE("images are normal forms of the embedding") {
  const SpanningSet span = build_span(Family::podles, 2, s_sym);
  for (std::size_t i = 0; i < span.size(); ++i) {
    CHECK(span.images()[i] == ambient_image(NCPolynomial(span.base(), span.monomials()[i]), s_sym));
    CHECK(normal_form(span.images()[i]) == span.images()[i]);
  }
  CHECK(ambient_image(B(Family::podles, "K"), s_sym) == qsu2_image(0, s_sym));
  CHECK(ambient_image(B(Family::heegaard, "f1"), RF()) == heegaard_image(1));
}

TEST_CASE("generators express as themselves") {
  for (const RF& s : {half, s_sym}) {
    const SpanningSet span = build_span(Family::podles, 2, s);
    CHECK(span.express(qsu2_image(0, s)) == B(Family::podles, "K"));
    CHECK(span.express(qsu2_image(1, s)) == B(Family::podles, "L"));
  }
}

TEST_CASE("a a* in the mirror sphere") {
  const Presentation& h = heegaard();
  const NCPolynomial aa = normal_form(nc_mul(gen(h, "a"), gen(h, "a*")));
  const NCPolynomial e = build_span(Family::heegaard, 2).express(aa);
  const NCPolynomial expected =
      normal_form(nc_mul(B(Family::heegaard, "f1"), B(Family::heegaard, "f1*"))) - B(Family::heegaard, "f0") +
      NCPolynomial(s2pq(), RF(1));
  CHECK(e == expected);
  CHECK(ambient_image(e, RF()) == aa);
}

TEST_CASE("trace elements are expressed at their degree") {
  for (int mu = -3; mu <= 3; ++mu) {
    CAPTURE(mu);
    const NCPolynomial x1 = trace_element(ell_family1(mu));
    const int d1 = static_cast<int>(x1.max_length());
    const NCPolynomial e1 = build_span(Family::heegaard, d1 + d1 % 2).express(x1);
    CHECK(ambient_image(e1, RF()) == x1);

    const NCPolynomial x2 = trace_element(ell_family2(mu, half));
    const int d2 = static_cast<int>(x2.max_length());
    const NCPolynomial e2 = build_span(Family::podles, d2 + d2 % 2, half).express(x2);
    CHECK(ambient_image(e2, half) == x2);
  }
  for (int mu = -2; mu <= 2; ++mu) {
    const NCPolynomial x = trace_element(ell_family2(mu, s_sym));
    const Expression e = express_escalating(Family::podles, x, s_sym);
    CHECK(ambient_image(e.value, s_sym) == x);
    CHECK(e.span.rfind("ordered monomials", 0) == 0);
  }
}

TEST_CASE("podles trace element for mu = 1") {
  const NCPolynomial x = trace_element(ell_family2(1, half));
  const Expression e = express_escalating(Family::podles, x, half);
  const NCPolynomial expected = NCPolynomial(podles(), RF(1)) + B(Family::podles, "K") * ((4 * q * q - 4) / 5);
  CHECK(e.value == expected);
  const auto j = base_expression_json(e.value);
  CHECK(j.at("1") == "1");
  CHECK(j.size() == 2);
}

TEST_CASE("elements outside the subalgebra") {
  const Presentation& h = heegaard();
  try {
    (void)build_span(Family::heegaard, 2).express(gen(h, "a"));
    FAIL("expected NotInSpan");
  } catch (const NotInSpan& e) {
    CHECK(e.residual() == gen(h, "a"));
  }
  CHECK_THROWS_AS(express_escalating(Family::heegaard, gen(h, "a")), NotInSpan);
  CHECK_THROWS_AS(build_span(Family::podles, 2, half).express(gen(qsu2(), "alpha")), NotInSpan);
  CHECK_THROWS_AS(build_span(Family::podles, -1, half), std::invalid_argument);
}

TEST_CASE("solver is deterministic") {
  const NCPolynomial x = trace_element(ell_family2(-2, half));
  const SpanningSet span = build_span(Family::podles, 4, half);
  const NCPolynomial e1 = span.express(x);
  const NCPolynomial e2 = build_span(Family::podles, 4, half).express(x);
  CHECK(e1 == e2);
  CHECK(span.express(x) == e1);
}

TEST_CASE("random elements of the subalgebra") {
  for (int i = 0; i < 10; ++i) {
    NCPolynomial base(podles());
    for (int t = 0; t < 3; ++t) {
      base.add_term(hopfchern::test::random_word(podles(), 2), RF(hopfchern::test::uniform(-3, 3)));
    }
    const NCPolynomial x = ambient_image(base, half);
    const Expression e = express_escalating(Family::podles, x, half);
    CHECK(ambient_image(e.value, half) == x);
  }
}
