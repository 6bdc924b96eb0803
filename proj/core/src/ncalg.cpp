#include "hopfchern/ncalg.hpp"

#include "hopfchern/budget.hpp"

#include <algorithm>
#include <sstream>

namespace hopfchern {

Word::Word(std::initializer_list<Symbol> letters) {
  for (Symbol s : letters) letters_.push_back(static_cast<char>(s));
}

namespace {

void accumulate(std::map<Word, RF>& acc, const Word& w, const RF& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

void acc_add(WordAccumulator& acc, const Word& w, const RF& c, const RF& d) {
  if (c.is_one()) {
    acc.add(w, d);
  } else {
    acc.add(w, c, d);
  }
}

TermList to_terms(WordAccumulator&& acc) {
  auto m = std::move(acc).finish();
  TermList out;
  out.reserve(m.size());
  for (auto& [w, c] : m) out.emplace_back(w, std::move(c));
  return out;
}

}  // namespace

// ------------------------------------------------------------ Presentation

Presentation::Presentation(std::string name, std::vector<SymbolInfo> symbols, bool graded,
                           std::vector<LiteralRule> rules, std::vector<RunPattern> patterns,
                           int pattern_check_bound)
    : name_(std::move(name)),
      symbols_(std::move(symbols)),
      graded_(graded),
      rules_(std::move(rules)),
      patterns_(std::move(patterns)) {
  rules_by_last_.resize(symbols_.size());
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if (rules_[i].lhs.empty()) throw TerminationViolation("rule with empty left side");
    rules_by_last_.at(rules_[i].lhs[rules_[i].lhs.size() - 1]).push_back(i);
  }
  validate(pattern_check_bound);
}

void Presentation::validate(int pattern_check_bound) const {
  for (std::size_t s = 0; s < symbols_.size(); ++s) {
    Symbol t = symbols_[s].star;
    if (t >= symbols_.size() || symbols_[t].star != s) {
      throw std::invalid_argument(name_ + ": star table is not an involution at " + symbols_[s].name);
    }
  }
  for (const auto& p : patterns_) {
    for (std::size_t i = 1; i < p.elements.size(); ++i) {
      if (p.elements[i].symbol == p.elements[i - 1].symbol) {
        throw std::invalid_argument(name_ + ": pattern " + p.name + " has adjacent equal letters");
      }
    }
  }
  for (const auto& rule : rule_instances(pattern_check_bound)) {
    for (const auto& [w, c] : rule.rhs) {
      if (!less(w, rule.lhs)) {
        throw TerminationViolation(name_ + ": rule " + word_string(rule.lhs) + " -> ... has right-side word " +
                                   word_string(w) + " not below its left side");
      }
      if (graded_ && grade(w) != grade(rule.lhs)) {
        throw std::invalid_argument(name_ + ": rule " + word_string(rule.lhs) + " is not homogeneous");
      }
    }
  }
}

Symbol Presentation::symbol_id(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].name == name) return static_cast<Symbol>(i);
  }
  throw std::invalid_argument(name_ + ": unknown symbol '" + std::string(name) + "'");
}

std::vector<LiteralRule> Presentation::rule_instances(int bound) const {
  std::vector<LiteralRule> out = rules_;
  for (const auto& p : patterns_) {
    std::size_t runs = 0;
    for (const auto& e : p.elements) runs += e.run ? 1 : 0;
    std::vector<int> lengths(runs, 1);
    while (true) {
      Word lhs;
      std::size_t r = 0;
      for (const auto& e : p.elements) {
        int n = e.run ? lengths[r++] : 1;
        for (int i = 0; i < n; ++i) lhs.push(e.symbol);
      }
      out.push_back({lhs, p.rhs(lengths)});
      std::size_t k = 0;
      while (k < runs && lengths[k] == bound) lengths[k++] = 1;
      if (k == runs) break;
      ++lengths[k];
    }
  }
  return out;
}

bool Presentation::less(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  int wa = 0;
  int wb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    wa += symbols_[a[i]].weight;
    wb += symbols_[b[i]].weight;
  }
  if (wa != wb) return wa < wb;
  return a < b;
}

Word Presentation::star(const Word& w) const {
  Word out;
  for (std::size_t i = w.size(); i-- > 0;) out.push(symbols_[w[i]].star);
  return out;
}

int Presentation::grade(const Word& w) const {
  int g = 0;
  for (std::size_t i = 0; i < w.size(); ++i) g += symbols_[w[i]].grade;
  return g;
}

std::string Presentation::word_string(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0) out += ' ';
    out += symbols_.at(w[i]).name;
  }
  return out;
}

Word Presentation::parse_word(std::string_view text) const {
  Word out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    out.push(symbol_id(tok));
  }
  return out;
}

std::optional<std::vector<int>> Presentation::match_pattern_at(const RunPattern& p, const Word& w, std::size_t pos,
                                                               std::size_t* len) const {
  std::vector<int> runs;
  std::size_t i = pos;
  for (const auto& e : p.elements) {
    if (i >= w.size() || w[i] != e.symbol) return std::nullopt;
    if (e.run) {
      std::size_t start = i;
      while (i < w.size() && w[i] == e.symbol) ++i;
      runs.push_back(static_cast<int>(i - start));
    } else {
      ++i;
    }
  }
  *len = i - pos;
  return runs;
}

std::optional<RuleMatch> Presentation::find_match(const Word& w) const {
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (const auto& rule : rules_) {
      if (w.letters().compare(pos, rule.lhs.size(), rule.lhs.letters()) == 0) {
        return RuleMatch{pos, rule.lhs.size(), rule.rhs};
      }
    }
    for (const auto& p : patterns_) {
      std::size_t len = 0;
      if (auto runs = match_pattern_at(p, w, pos, &len)) return RuleMatch{pos, len, p.rhs(*runs)};
    }
  }
  return std::nullopt;
}

std::optional<RuleMatch> Presentation::match_suffix(const Word& w) const {
  if (w.empty()) return std::nullopt;
  const Symbol last = w[w.size() - 1];
  for (std::size_t idx : rules_by_last_[last]) {
    const Word& lhs = rules_[idx].lhs;
    if (lhs.size() <= w.size() && w.letters().compare(w.size() - lhs.size(), lhs.size(), lhs.letters()) == 0) {
      return RuleMatch{w.size() - lhs.size(), lhs.size(), rules_[idx].rhs};
    }
  }
  for (const auto& p : patterns_) {
    std::vector<int> runs;
    std::size_t i = w.size();
    bool ok = true;
    for (auto e = p.elements.rbegin(); e != p.elements.rend(); ++e) {
      if (i == 0 || w[i - 1] != e->symbol) {
        ok = false;
        break;
      }
      if (e->run) {
        std::size_t end = i;
        while (i > 0 && w[i - 1] == e->symbol) --i;
        runs.push_back(static_cast<int>(end - i));
      } else {
        --i;
      }
    }
    if (!ok) continue;
    std::reverse(runs.begin(), runs.end());
    return RuleMatch{i, w.size() - i, p.rhs(runs)};
  }
  return std::nullopt;
}

const TermList& Presentation::nf_append(const Word& v, Symbol x) const {
  std::string key = v.letters();
  key.push_back(static_cast<char>(x));
  {
    std::shared_lock lock(cache_mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  Word w(key);
  TermList result;
  if (auto m = match_suffix(w)) {
    Word prefix = w.sub(0, m->pos);
    WordAccumulator acc;
    for (const auto& [r, c] : m->rhs) {
      for (const auto& [t, d] : nf_concat(prefix, r)) acc.add(t, c, d);
    }
    result = to_terms(std::move(acc));
  } else {
    result.emplace_back(std::move(w), RF(1));
  }
  std::unique_lock lock(cache_mutex_);
  return cache_.try_emplace(std::move(key), std::move(result)).first->second;
}

TermList Presentation::nf_concat(const Word& w_normal, const Word& tail) const {
  if (tail.empty()) return {{w_normal, RF(1)}};
  poll_budget();
  TermList cur{{w_normal, RF(1)}};
  for (std::size_t i = 0; i < tail.size(); ++i) {
    WordAccumulator next;
    for (const auto& [v, c] : cur) {
      for (const auto& [t, d] : nf_append(v, tail[i])) acc_add(next, t, c, d);
    }
    cur = to_terms(std::move(next));
  }
  return cur;
}

TermList Presentation::nf_word(const Word& w) const { return nf_concat(Word(), w); }

std::size_t Presentation::cache_size() const {
  std::shared_lock lock(cache_mutex_);
  return cache_.size();
}

void Presentation::clear_cache() const {
  std::unique_lock lock(cache_mutex_);
  cache_.clear();
}

// ------------------------------------------------------------ NCPolynomial

NCPolynomial::NCPolynomial(const Presentation& pres, const RF& c) : pres_(&pres) {
  if (!c.is_zero()) terms_.emplace(Word(), c);
}

NCPolynomial::NCPolynomial(const Presentation& pres, const Word& w, const RF& c) : pres_(&pres) {
  if (!c.is_zero()) terms_.emplace(w, c);
}

NCPolynomial::NCPolynomial(const Presentation& pres, TermList terms) : pres_(&pres) {
  for (auto& [w, c] : terms) add_term(w, c);
}

NCPolynomial NCPolynomial::gen(const Presentation& pres, std::string_view name) {
  return {pres, Word::letter(pres.symbol_id(name))};
}

RF NCPolynomial::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RF() : it->second;
}

std::size_t NCPolynomial::max_length() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

void NCPolynomial::add_term(const Word& w, const RF& c) { accumulate(terms_, w, c); }

NCPolynomial NCPolynomial::operator-() const {
  NCPolynomial r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& o) {
  if (pres_ != o.pres_) throw PresentationMismatch();
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& o) {
  if (pres_ != o.pres_) throw PresentationMismatch();
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPolynomial& NCPolynomial::operator*=(const RF& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else if (!c.is_one()) {
    for (auto& [w, d] : terms_) d *= c;
  }
  return *this;
}

NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) {
  if (a.pres_ != b.pres_) throw PresentationMismatch();
  WordAccumulator acc;
  for (const auto& [u, c] : a.terms_) {
    for (const auto& [v, d] : b.terms_) acc.add(u + v, c, d);
  }
  return {*a.pres_, std::move(acc)};
}

bool operator==(const NCPolynomial& a, const NCPolynomial& b) {
  if (a.pres_ != b.pres_ || a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [w, c] : a.terms_) {
    if (w != it->first || !(c == it->second)) return false;
    ++it;
  }
  return true;
}

std::string NCPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [w, stored] = *it;
    const bool negative = stored.num().leading().coeff < 0;
    const RF c = negative ? -stored : stored;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (w.empty()) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += pres_->word_string(w);
    } else {
      out += c.to_string() + " " + pres_->word_string(w);
    }
  }
  return out;
}

NCPolynomial nc_mul(const NCPolynomial& x, const NCPolynomial& y) { return x * y; }

NCPolynomial normal_form(const NCPolynomial& x) {
  const Presentation& pres = x.presentation();
  WordAccumulator acc;
  for (const auto& [w, c] : x.terms()) {
    for (const auto& [t, d] : pres.nf_word(w)) acc_add(acc, t, c, d);
  }
  return {pres, std::move(acc)};
}

NCPolynomial nf_mul(const NCPolynomial& x, const NCPolynomial& y) {
  const Presentation& pres = x.presentation();
  if (&pres != &y.presentation()) throw PresentationMismatch();
  WordAccumulator acc;
  for (const auto& [u, c] : x.terms()) {
    for (const auto& [v, d] : y.terms()) {
      for (const auto& [t, e] : pres.nf_concat(u, v)) acc.add(t, c, d, e);
    }
  }
  return {pres, std::move(acc)};
}

NCPolynomial nf_pow(const NCPolynomial& x, unsigned n) {
  NCPolynomial r(x.presentation(), RF(1));
  for (unsigned i = 0; i < n; ++i) r = nf_mul(r, x);
  return r;
}

NCPolynomial star(const NCPolynomial& x) {
  const Presentation& pres = x.presentation();
  NCPolynomial r(pres);
  for (const auto& [w, c] : x.terms()) r.add_term(pres.star(w), c);
  return r;
}

int degree(const NCPolynomial& x) {
  const Presentation& pres = x.presentation();
  if (!pres.graded()) throw NoGrading();
  std::optional<int> g;
  for (const auto& [w, c] : x.terms()) {
    int gw = pres.grade(w);
    if (g && *g != gw) throw NotHomogeneous();
    g = gw;
  }
  return g.value_or(0);
}

NCPolynomial map_coefficients(const NCPolynomial& x, const std::function<RF(const RF&)>& f) {
  NCPolynomial r(x.presentation());
  for (const auto& [w, c] : x.terms()) r.add_term(w, f(c));
  return r;
}

// ------------------------------------------------------------- confluence

namespace {

std::string rule_label(const Presentation& pres, const LiteralRule& r) { return pres.word_string(r.lhs); }

NCPolynomial sandwich(const Presentation& pres, const Word& left, const TermList& mid, const Word& right) {
  NCPolynomial r(pres);
  for (const auto& [w, c] : mid) r.add_term(left + w + right, c);
  return normal_form(r);
}

}  // namespace

std::vector<Overlap> check_confluence(const Presentation& pres, int pattern_bound) {
  const auto rules = pres.rule_instances(pattern_bound);
  std::vector<Overlap> unresolved;
  auto record = [&](const Word& word, const LiteralRule& a, const LiteralRule& b, NCPolynomial x, NCPolynomial y) {
    NCPolynomial diff = x - y;
    if (!diff.is_zero()) {
      unresolved.push_back({word, rule_label(pres, a), rule_label(pres, b), std::move(diff)});
    }
  };
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Word& u = rules[i].lhs;
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& v = rules[j].lhs;
      // u = A·B, v = B·C with B non-empty proper.
      for (std::size_t k = 1; k < std::min(u.size(), v.size()); ++k) {
        if (u.letters().compare(u.size() - k, k, v.letters(), 0, k) != 0) continue;
        const Word a = u.sub(0, u.size() - k);
        const Word c = v.sub(k);
        record(a + v, rules[i], rules[j], sandwich(pres, Word(), rules[i].rhs, c),
               sandwich(pres, a, rules[j].rhs, Word()));
      }
      // v inside u.
      if (i != j && v.size() <= u.size()) {
        for (std::size_t t = 0; t + v.size() <= u.size(); ++t) {
          if (u.letters().compare(t, v.size(), v.letters()) != 0) continue;
          record(u, rules[i], rules[j], sandwich(pres, Word(), rules[i].rhs, Word()),
                 sandwich(pres, u.sub(0, t), rules[j].rhs, u.sub(t + v.size())));
        }
      }
    }
  }
  return unresolved;
}

std::vector<RelationResidual> relation_residuals(const Presentation& pres, int pattern_bound) {
  std::vector<RelationResidual> out;
  for (const auto& rule : pres.rule_instances(pattern_bound)) {
    NCPolynomial rel = NCPolynomial(pres, rule.lhs) - NCPolynomial(pres, rule.rhs);
    out.push_back({rule_label(pres, rule), normal_form(rel), normal_form(star(rel))});
  }
  return out;
}

}  // namespace hopfchern
