#include "hopfchern/quantumhopf.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>

namespace hopfchern {

namespace {

constexpr Symbol kAlpha = 0;
constexpr Symbol kAlphaStar = 1;
constexpr Symbol kGamma = 2;
constexpr Symbol kGammaStar = 3;

RF Q() { return RF::var(Var::q); }

template <class Map, class K>
void accumulate(Map& m, const K& k, const RF& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

void require_qsu2(const Presentation& pres) {
  if (&pres != &qsu2()) throw PresentationMismatch();
}

}  // namespace

// ------------------------------------------------------------ TensorSquare

TensorSquare TensorSquare::unit(const Presentation& pres) {
  TensorSquare t(pres);
  t.add_term(Word(), Word(), RF(1));
  return t;
}

TensorSquare TensorSquare::simple(const NCPolynomial& x, const NCPolynomial& y) {
  if (&x.presentation() != &y.presentation()) throw PresentationMismatch();
  TensorSquare t(x.presentation());
  for (const auto& [l, c] : x.terms()) {
    for (const auto& [r, d] : y.terms()) t.add_term(l, r, c * d);
  }
  return t;
}

void TensorSquare::add_term(const Word& left, const Word& right, const RF& c) {
  accumulate(terms_, Key{left, right}, c);
}

TensorSquare& TensorSquare::operator+=(const TensorSquare& o) {
  if (pres_ != o.pres_) throw PresentationMismatch();
  for (const auto& [k, c] : o.terms_) accumulate(terms_, k, c);
  return *this;
}

TensorSquare& TensorSquare::operator-=(const TensorSquare& o) {
  if (pres_ != o.pres_) throw PresentationMismatch();
  for (const auto& [k, c] : o.terms_) accumulate(terms_, k, -c);
  return *this;
}

TensorSquare& TensorSquare::operator*=(const RF& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else if (!c.is_one()) {
    for (auto& [k, d] : terms_) d *= c;
  }
  return *this;
}

TensorSquare operator*(const TensorSquare& a, const TensorSquare& b) {
  if (a.pres_ != b.pres_) throw PresentationMismatch();
  const Presentation& pres = *a.pres_;
  KeyedAccumulator<TensorSquare::Key> acc;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      const RF c = ca * cb;
      const TermList left = pres.nf_concat(ka.first, kb.first);
      const TermList right = pres.nf_concat(ka.second, kb.second);
      for (const auto& [l, dl] : left) {
        const RF cl = c * dl;
        for (const auto& [r, dr] : right) acc.add({l, r}, cl, dr);
      }
    }
  }
  return {pres, std::move(acc)};
}

bool operator==(const TensorSquare& a, const TensorSquare& b) {
  if (a.pres_ != b.pres_ || a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [k, c] : a.terms_) {
    if (k != it->first || !(c == it->second)) return false;
    ++it;
  }
  return true;
}

TensorSquare TensorSquare::sandwich(const NCPolynomial& x, const NCPolynomial& y) const {
  const Presentation& pres = *pres_;
  KeyedAccumulator<Key> acc;
  for (const auto& [k, c] : terms_) {
    NCPolynomial left = nf_mul(x, NCPolynomial(pres, k.first));
    NCPolynomial right = nf_mul(NCPolynomial(pres, k.second), y);
    for (const auto& [l, dl] : left.terms()) {
      for (const auto& [r, dr] : right.terms()) acc.add({l, r}, c, dl, dr);
    }
  }
  return {pres, std::move(acc)};
}

NCPolynomial TensorSquare::contract() const {
  WordAccumulator acc;
  for (const auto& [k, c] : terms_) {
    for (const auto& [w, d] : pres_->nf_concat(k.first, k.second)) acc.add(w, c, d);
  }
  return {*pres_, std::move(acc)};
}

NCPolynomial TensorSquare::contract_reversed() const {
  WordAccumulator acc;
  for (const auto& [k, c] : terms_) {
    for (const auto& [w, d] : pres_->nf_concat(k.second, k.first)) acc.add(w, c, d);
  }
  return {*pres_, std::move(acc)};
}

TensorSquare TensorSquare::map_left(const std::function<NCPolynomial(const NCPolynomial&)>& f) const {
  KeyedAccumulator<Key> acc;
  for (const auto& [k, c] : terms_) {
    for (const auto& [l, d] : f(NCPolynomial(*pres_, k.first)).terms()) acc.add({l, k.second}, c, d);
  }
  return {*pres_, std::move(acc)};
}

TensorSquare TensorSquare::map_right(const std::function<NCPolynomial(const NCPolynomial&)>& f) const {
  KeyedAccumulator<Key> acc;
  for (const auto& [k, c] : terms_) {
    for (const auto& [r, d] : f(NCPolynomial(*pres_, k.second)).terms()) acc.add({k.first, r}, c, d);
  }
  return {*pres_, std::move(acc)};
}

std::string TensorSquare::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.to_string() + " [" + pres_->word_string(k.first) + "] (x) [" + pres_->word_string(k.second) + "]";
  }
  return out;
}

nlohmann::json TensorSquare::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : terms_) {
    terms.push_back({{"coefficient", c.to_string()},
                     {"left", pres_->word_string(k.first)},
                     {"right", pres_->word_string(k.second)}});
  }
  return terms;
}

// ------------------------------------------------------------- Hopf maps

namespace {

TensorSquare letter_coproduct(Symbol x) {
  const Presentation& u = qsu2();
  const RF q = Q();
  TensorSquare t(u);
  auto L = [](Symbol s) { return Word::letter(s); };
  switch (x) {
    case kAlpha:
      t.add_term(L(kAlpha), L(kAlpha), 1);
      t.add_term(L(kGammaStar), L(kGamma), -q);
      break;
    case kAlphaStar:
      t.add_term(L(kAlphaStar), L(kAlphaStar), 1);
      t.add_term(L(kGamma), L(kGammaStar), -q);
      break;
    case kGamma:
      t.add_term(L(kGamma), L(kAlpha), 1);
      t.add_term(L(kAlphaStar), L(kGamma), 1);
      break;
    case kGammaStar:
      t.add_term(L(kGammaStar), L(kAlphaStar), 1);
      t.add_term(L(kAlpha), L(kGammaStar), 1);
      break;
    default: throw std::out_of_range("coproduct: unknown symbol");
  }
  return t;
}

class CoproductCache {
 public:
  const TensorSquare& get(const Word& w) {
    {
      std::shared_lock lock(mutex_);
      auto it = cache_.find(w);
      if (it != cache_.end()) return it->second;
    }
    TensorSquare value = w.empty() ? TensorSquare::unit(qsu2())
                                   : get(w.sub(0, w.size() - 1)) * letter_coproduct(w[w.size() - 1]);
    std::unique_lock lock(mutex_);
    return cache_.try_emplace(w, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<Word, TensorSquare, WordHash> cache_;
};

CoproductCache& coproduct_cache() {
  static CoproductCache cache;
  return cache;
}

}  // namespace

TensorSquare coproduct(const NCPolynomial& x) {
  require_qsu2(x.presentation());
  KeyedAccumulator<TensorSquare::Key> acc;
  for (const auto& [w, c] : x.terms()) {
    const TensorSquare& dw = coproduct_cache().get(w);
    for (const auto& [k, d] : dw.terms()) acc.add(k, c, d);
  }
  return {qsu2(), std::move(acc)};
}

RF counit(const NCPolynomial& x) {
  require_qsu2(x.presentation());
  RF total;
  for (const auto& [w, c] : x.terms()) {
    bool vanishes = false;
    for (std::size_t i = 0; i < w.size(); ++i) vanishes = vanishes || w[i] == kGamma || w[i] == kGammaStar;
    if (!vanishes) total += c;
  }
  return total;
}

NCPolynomial antipode(const NCPolynomial& x) {
  const Presentation& u = qsu2();
  require_qsu2(x.presentation());
  const RF q = Q();
  NCPolynomial out(u);
  for (const auto& [w, c] : x.terms()) {
    Word image;
    int gammas = 0;
    int gamma_stars = 0;
    for (std::size_t i = w.size(); i-- > 0;) {
      switch (w[i]) {
        case kAlpha: image.push(kAlphaStar); break;
        case kAlphaStar: image.push(kAlpha); break;
        case kGamma: image.push(kGamma); ++gammas; break;
        default: image.push(kGammaStar); ++gamma_stars; break;
      }
    }
    RF factor = c * RF(-1).pow(gammas + gamma_stars) * q.pow(gammas - gamma_stars);
    for (const auto& [t, d] : u.nf_word(image)) out.add_term(t, factor * d);
  }
  return out;
}

std::pair<TensorCube, TensorCube> coassociativity_sides(const NCPolynomial& x) {
  const Presentation& u = qsu2();
  TensorCube left;
  TensorCube right;
  for (const auto& [k, c] : coproduct(x).terms()) {
    for (const auto& [k1, d] : coproduct(NCPolynomial(u, k.first)).terms()) {
      accumulate(left, std::make_tuple(k1.first, k1.second, k.second), c * d);
    }
    for (const auto& [k2, d] : coproduct(NCPolynomial(u, k.second)).terms()) {
      accumulate(right, std::make_tuple(k.first, k2.first, k2.second), c * d);
    }
  }
  return {std::move(left), std::move(right)};
}

// --------------------------------------------------------------- coaction

std::vector<WindingComponent> coaction_family1(const NCPolynomial& x) {
  const Presentation& h = heegaard();
  if (&x.presentation() != &h) throw PresentationMismatch();
  std::map<int, NCPolynomial> parts;
  for (const auto& [w, c] : normal_form(x).terms()) {
    parts.try_emplace(h.grade(w), h).first->second.add_term(w, c);
  }
  std::vector<WindingComponent> out;
  for (auto& [n, poly] : parts) out.push_back({std::move(poly), n});
  return out;
}

ScaledPolynomial lift_family2(int n, const RF& s) {
  const Presentation& u = qsu2();
  const RF q = Q();
  const RF s2 = s * s;
  ScaledPolynomial out{NCPolynomial(u, RF(1)), RF(1)};
  const NCPolynomial alpha = gen(u, "alpha");
  const NCPolynomial alpha_star = gen(u, "alpha*");
  const NCPolynomial gamma_part = gen(u, "gamma") - q * gen(u, "gamma*");
  for (int j = 0; j < std::abs(n); ++j) {
    const RF qj = q.pow(j);
    const RF q2j = qj * qj;
    NCPolynomial factor(u);
    if (n > 0) {
      factor = alpha + qj * s * gamma_part + q2j * s2 * alpha_star;
      out.scale *= (1 + q2j * s2).inverse();
    } else {
      factor = q2j * alpha_star - qj * s * gamma_part + s2 * alpha;
      out.scale *= (q2j + s2).inverse();
    }
    out.numerator = nf_mul(out.numerator, factor);
  }
  return out;
}

// --------------------------------------------------------------- quotient

namespace {

// 0 for words mixing letters, 1 for α*-powers, 2 for α-powers and the unit.
int purity(const Word& w) {
  bool all_alpha = true;
  bool all_alpha_star = true;
  for (std::size_t i = 0; i < w.size(); ++i) {
    all_alpha = all_alpha && w[i] == kAlpha;
    all_alpha_star = all_alpha_star && w[i] == kAlphaStar;
  }
  if (all_alpha) return 2;
  return all_alpha_star ? 1 : 0;
}

bool is_alpha_power(const Word& w) { return purity(w) != 0; }

// Winding markers are single letters outside the qsu2() alphabet.
constexpr int kMarkerBase = 0x80;
constexpr int kMarkerOffset = 0x40;

Word winding_marker(int n) { return Word::letter(static_cast<Symbol>(kMarkerBase + kMarkerOffset + n)); }
bool is_marker(const Word& w) { return w.size() == 1 && w[0] >= kMarkerBase; }
int marker_winding(const Word& w) { return static_cast<int>(w[0]) - kMarkerBase - kMarkerOffset; }

}  // namespace

bool QuotientBasis::Priority::operator()(const Word& a, const Word& b) const {
  const bool ma = is_marker(a);
  const bool mb = is_marker(b);
  if (ma || mb) return ma == mb ? a[0] < b[0] : mb;
  if (a.size() != b.size()) return a.size() > b.size();
  const int pa = purity(a);
  const int pb = purity(b);
  if (pa != pb) return pa < pb;
  return a < b;
}

struct QuotientBasis::Cache {
  std::shared_mutex mutex;
  std::unordered_map<Word, std::map<int, RF>, WordHash> windings;
};

std::vector<Word> qsu2_normal_words(int n) {
  std::vector<Word> out;
  for (int len = 0; len <= n; ++len) {
    for (int a = 0; a <= len; ++a) {
      for (int m = 0; m + a <= len; ++m) {
        const int k = len - a - m;
        for (Symbol head : {kAlpha, kAlphaStar}) {
          if (head == kAlphaStar && a == 0) continue;
          Word w;
          for (int i = 0; i < a; ++i) w.push(head);
          for (int i = 0; i < m; ++i) w.push(kGamma);
          for (int i = 0; i < k; ++i) w.push(kGammaStar);
          out.push_back(std::move(w));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

QuotientBasis quotient_basis(const RF& s, int d) {
  if (d < 1) throw std::invalid_argument("quotient_basis: degree bound must be >= 1");
  const Presentation& u = qsu2();
  const NCPolynomial generators[3] = {qsu2_image(0, s), qsu2_image(1, s) - NCPolynomial(u, s),
                                      qsu2_image(2, s) - NCPolynomial(u, s)};
  const std::vector<Word> low_words = qsu2_normal_words(d);

  std::string last_failure;
  for (int search = d + 2; search <= d + 4; search += 2) {
    auto ideal = std::make_shared<Echelon<Word, QuotientBasis::Priority>>(false);
    std::size_t tag = 0;
    for (const Word& w : qsu2_normal_words(search - 2)) {
      for (const auto& g : generators) {
        Echelon<Word, QuotientBasis::Priority>::Vector v;
        for (const auto& [t, c] : nf_mul(g, NCPolynomial(u, w)).terms()) v.emplace(t, c);
        ideal->insert(std::move(v), tag++);
      }
    }
    QuotientBasis qb;
    qb.d_ = d;
    qb.search_degree_ = search;
    qb.s_ = s;
    for (const Word& w : low_words) {
      if (!ideal->is_pivot(w)) qb.reps_.push_back(w);
    }
    bool ok = true;
    for (int k = 0; k <= d; ++k) {
      int dim = 0;
      for (const Word& w : qb.reps_) dim += static_cast<int>(w.size()) <= k ? 1 : 0;
      qb.dims_.push_back(dim);
      if (dim != 2 * k + 1) {
        ok = false;
        last_failure = "dimension " + std::to_string(dim) + " in degree " + std::to_string(k);
      }
    }
    if (!ok) continue;
    qb.ideal_ = ideal;
    qb.cache_ = std::make_shared<QuotientBasis::Cache>();

    // Reducing a word against the ideal and the rows numerator(i(u^n)) -
    // marker_n / scale_n leaves only markers, whose coefficients are the
    // windings.
    auto full = std::make_shared<Echelon<Word, QuotientBasis::Priority>>(*ideal);
    for (int k = 0; k <= d; ++k) {
      for (int n : {k, -k}) {
        if (k == 0 && n < 0) continue;
        const ScaledPolynomial g = lift_family2(n, s);
        Echelon<Word, QuotientBasis::Priority>::Vector v;
        for (const auto& [t, c] : g.numerator.terms()) v.emplace(t, c);
        v.emplace(winding_marker(n), -g.scale.inverse());
        full->insert(std::move(v), tag++);
        if (full->is_pivot(winding_marker(n))) {
          throw DegenerateQuotient("group-like classes are linearly dependent");
        }
      }
    }
    qb.windings_ = full;
    return qb;
  }
  throw DegenerateQuotient("quotient by J_s is degenerate at s = " + s.to_string() + ": " + last_failure);
}

std::map<std::size_t, RF> QuotientBasis::coordinates(const Word& w) const {
  if (static_cast<int>(w.size()) > d_) {
    throw DegreeExceeded("word of length " + std::to_string(w.size()) + " exceeds quotient degree bound " +
                         std::to_string(d_));
  }
  Echelon<Word, Priority>::Vector v;
  v.emplace(w, RF(1));
  auto [residual, combo] = ideal_->reduce(std::move(v));
  std::map<std::size_t, RF> out;
  for (auto& [t, c] : residual) {
    auto it = std::lower_bound(reps_.begin(), reps_.end(), t);
    if (it == reps_.end() || *it != t) throw std::logic_error("quotient reduction left a non-representative word");
    out.emplace(static_cast<std::size_t>(it - reps_.begin()), std::move(c));
  }
  return out;
}

std::map<int, RF> QuotientBasis::windings(const Word& w) const {
  {
    std::shared_lock lock(cache_->mutex);
    auto it = cache_->windings.find(w);
    if (it != cache_->windings.end()) return it->second;
  }
  if (static_cast<int>(w.size()) > d_) {
    throw DegreeExceeded("word of length " + std::to_string(w.size()) + " exceeds quotient degree bound " +
                         std::to_string(d_));
  }
  Echelon<Word, Priority>::Vector v;
  v.emplace(w, RF(1));
  std::map<int, RF> out;
  for (auto& [t, c] : windings_->reduce(std::move(v)).first) {
    if (!is_marker(t)) throw std::logic_error("quotient reduction left a word");
    out.emplace(marker_winding(t), std::move(c));
  }
  std::unique_lock lock(cache_->mutex);
  cache_->windings.try_emplace(w, out);
  return out;
}

std::map<int, RF> QuotientBasis::windings(const NCPolynomial& x) const {
  std::map<int, RF> out;
  for (const auto& [w, c] : x.terms()) {
    for (const auto& [n, e] : windings(w)) accumulate(out, n, c * e);
  }
  return out;
}

nlohmann::json QuotientBasis::to_json() const {
  nlohmann::json reps = nlohmann::json::array();
  for (const Word& w : reps_) reps.push_back(qsu2().word_string(w));
  bool alpha_powers = std::all_of(reps_.begin(), reps_.end(), is_alpha_power);
  return {{"s", s_.to_string()},
          {"degree_bound", d_},
          {"search_degree", search_degree_},
          {"dimensions", dims_},
          {"representatives", reps},
          {"representatives_are_alpha_powers", alpha_powers}};
}

std::vector<WindingComponent> coaction_family2(const NCPolynomial& x, const QuotientBasis& qb) {
  const Presentation& u = qsu2();
  require_qsu2(x.presentation());
  if (static_cast<int>(x.max_length()) > qb.degree_bound()) {
    throw DegreeExceeded("coaction_family2: input degree exceeds the quotient degree bound");
  }
  std::map<int, WordAccumulator> parts;
  for (const auto& [k, c] : coproduct(x).terms()) {
    for (const auto& [n, e] : qb.windings(k.second)) parts[n].add(k.first, c, e);
  }
  std::vector<WindingComponent> out;
  for (auto& [n, acc] : parts) {
    NCPolynomial poly(u, std::move(acc));
    if (!poly.is_zero()) out.push_back({std::move(poly), n});
  }
  return out;
}

}  // namespace hopfchern
