#include "hopfchern/subspan.hpp"

namespace hopfchern {

NotInSpan::NotInSpan(NCPolynomial residual)
    : std::runtime_error("element is not in the span: residual " + residual.to_string()),
      residual_(std::move(residual)) {}

const Presentation& base_presentation(Family f) { return f == Family::heegaard ? s2pq() : podles(); }

namespace {

NCPolynomial generator_image(Family family, Symbol g, const RF& s) {
  return family == Family::heegaard ? heegaard_image(g) : qsu2_image(g, s);
}

NCPolynomial word_image(Family family, const Word& w, const RF& s) {
  const Presentation& amb = ambient(family);
  NCPolynomial out(amb, RF(1));
  for (std::size_t i = 0; i < w.size(); ++i) out = nf_mul(out, generator_image(family, w[i], s));
  return out;
}

// Symbol ids shared by s2pq() and podles(): self-adjoint, raising, lowering.
constexpr Symbol kDiag = 0;
constexpr Symbol kRaise = 1;
constexpr Symbol kLower = 2;

Word power_word(std::initializer_list<std::pair<Word, int>> parts) {
  Word w;
  for (const auto& [piece, n] : parts) {
    for (int i = 0; i < n; ++i) w += piece;
  }
  return w;
}

}  // namespace

SpanningSet::SpanningSet(Family family, RF s, std::vector<Word> monomials)
    : family_(family), s_(std::move(s)), monomials_(std::move(monomials)) {
  auto echelon = std::make_shared<Echelon<Word>>();
  images_.reserve(monomials_.size());
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    images_.push_back(word_image(family_, monomials_[i], s_));
    Echelon<Word>::Vector v(images_.back().terms().begin(), images_.back().terms().end());
    echelon->insert(std::move(v), i);
  }
  echelon_ = std::move(echelon);
}

NCPolynomial SpanningSet::express(const NCPolynomial& x) const {
  if (&x.presentation() != &ambient_presentation()) throw PresentationMismatch();
  auto [residual, combo] = echelon_->reduce({x.terms().begin(), x.terms().end()});
  if (!residual.empty()) throw NotInSpan(NCPolynomial(ambient_presentation(), std::move(residual)));
  NCPolynomial out(base());
  for (const auto& [idx, c] : combo) out.add_term(monomials_[idx], c);
  return out;
}

SpanningSet build_span(Family family, int degree_bound, const RF& s) {
  if (degree_bound < 0) throw std::invalid_argument("build_span: negative degree bound");
  const int half = degree_bound / 2;
  const Word diag = Word::letter(kDiag);
  const Word raise = Word::letter(kRaise);
  const Word lower = Word::letter(kLower);
  const Word pair = raise + lower;
  const int max_pairs = family == Family::heegaard ? half : 0;
  std::vector<Word> monomials;
  for (int total = 0; total <= half; ++total) {
    for (int m = 0; m <= std::min(total, max_pairs); ++m) {
      for (int i = total - m; i >= 0; --i) {
        const int j = total - m - i;
        monomials.push_back(power_word({{diag, i}, {pair, m}, {raise, j}}));
        if (j > 0) monomials.push_back(power_word({{diag, i}, {pair, m}, {lower, j}}));
      }
    }
  }
  return {family, s, std::move(monomials)};
}

SpanningSet word_fallback_span(Family family, int length_bound, const RF& s) {
  if (length_bound < 0) throw std::invalid_argument("word_fallback_span: negative length bound");
  std::vector<Word> monomials{Word()};
  std::vector<Word> layer{Word()};
  for (int len = 1; len <= length_bound; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (Symbol g : {kDiag, kRaise, kLower}) next.push_back(Word(w).push(g));
    }
    monomials.insert(monomials.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return {family, s, std::move(monomials)};
}

NCPolynomial ambient_image(const NCPolynomial& base_poly, const RF& s) {
  const Family family = &base_poly.presentation() == &s2pq() ? Family::heegaard : Family::podles;
  if (family == Family::podles && &base_poly.presentation() != &podles()) throw PresentationMismatch();
  WordAccumulator acc;
  for (const auto& [w, c] : base_poly.terms()) {
    for (const auto& [t, d] : word_image(family, w, s).terms()) acc.add(t, c, d);
  }
  return {ambient(family), std::move(acc)};
}

Expression express_escalating(Family family, const NCPolynomial& x, const RF& s) {
  const int degree = static_cast<int>(x.max_length());
  int bound = degree + (degree % 2);
  for (int attempt = 0; attempt < 3; ++attempt, bound += 2) {
    try {
      return {build_span(family, bound, s).express(x), "ordered monomials of degree <= " + std::to_string(bound)};
    } catch (const NotInSpan&) {
    }
  }
  const int length = (bound - 2) / 2;
  return {word_fallback_span(family, length, s).express(x), "base words of length <= " + std::to_string(length)};
}

nlohmann::json base_expression_json(const NCPolynomial& base_poly) {
  nlohmann::json out = nlohmann::json::object();
  const Presentation& pres = base_poly.presentation();
  for (const auto& [w, c] : base_poly.terms()) out[pres.word_string(w)] = c.to_string();
  return out;
}

}  // namespace hopfchern
