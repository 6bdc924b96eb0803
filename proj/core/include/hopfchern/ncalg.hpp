#pragma once

// Words over a finite *-alphabet, noncommutative polynomials with
// coefficients in Q(p,q,s), and rewriting to normal form.
//
// A Presentation is an alphabet (with star partners and an optional integer
// grading) plus oriented rewrite rules. Rules are either literal (fixed left
// side) or run patterns: a left side such as  x y^j z^k w  with j, k >= 1,
// whose right side depends on the run lengths. For termination words are
// ordered by length, then by total symbol weight, then lexicographically by
// symbol id; every rule must decrease. Containers use the plain
// degree-lexicographic order of Word.

#include "hopfchern/paramfield.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hopfchern {

using Symbol = std::uint8_t;

class PresentationMismatch : public std::invalid_argument {
 public:
  PresentationMismatch() : std::invalid_argument("polynomials belong to different presentations") {}
};

class TerminationViolation : public std::invalid_argument {
 public:
  explicit TerminationViolation(const std::string& what) : std::invalid_argument(what) {}
};

class NotHomogeneous : public std::domain_error {
 public:
  NotHomogeneous() : std::domain_error("polynomial is not homogeneous") {}
};

class NoGrading : public std::domain_error {
 public:
  NoGrading() : std::domain_error("presentation has no grading") {}
};

/// A word is a string of symbol ids; the empty word is the unit.
class Word {
 public:
  Word() = default;
  explicit Word(std::string letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Symbol> letters);
  static Word letter(Symbol s) { return Word(std::string(1, static_cast<char>(s))); }

  [[nodiscard]] std::size_t size() const { return letters_.size(); }
  [[nodiscard]] bool empty() const { return letters_.empty(); }
  [[nodiscard]] Symbol operator[](std::size_t i) const { return static_cast<Symbol>(letters_[i]); }
  [[nodiscard]] const std::string& letters() const { return letters_; }
  [[nodiscard]] Word sub(std::size_t pos, std::size_t len = std::string::npos) const {
    return Word(letters_.substr(pos, len));
  }

  Word& operator+=(const Word& o) {
    letters_ += o.letters_;
    return *this;
  }
  Word& push(Symbol s) {
    letters_.push_back(static_cast<char>(s));
    return *this;
  }
  friend Word operator+(Word a, const Word& b) { return a += b; }

  friend bool operator==(const Word&, const Word&) = default;
  /// Degree-lexicographic order.
  friend bool operator<(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::char_traits<char>::compare(a.letters_.data(), b.letters_.data(), a.size()) < 0;
  }
  friend bool operator>(const Word& a, const Word& b) { return b < a; }

 private:
  std::string letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const { return std::hash<std::string>()(w.letters()); }
};

/// Linear combination of words, kept sorted ascending with no zero coefficients.
using TermList = std::vector<std::pair<Word, RF>>;

/// Lazily summed coefficients per key; see RFAccumulator.
template <class Key>
class KeyedAccumulator {
 public:
  void add(const Key& k, const RF& a) { slot(k).add(a); }
  void add(const Key& k, const RF& a, const RF& b) { slot(k).add_product(a, b); }
  void add(const Key& k, const RF& a, const RF& b, const RF& c) { slot(k).add_product(a, b, c); }
  /// Normalized nonzero coefficients in key order.
  std::map<Key, RF> finish() && {
    std::map<Key, RF> out;
    for (auto& [k, acc] : parts_) {
      RF v = acc.value();
      if (!v.is_zero()) out.emplace_hint(out.end(), k, std::move(v));
    }
    return out;
  }

 private:
  RFAccumulator& slot(const Key& k) { return parts_[k]; }
  std::map<Key, RFAccumulator> parts_;
};

using WordAccumulator = KeyedAccumulator<Word>;

struct SymbolInfo {
  std::string name;
  Symbol star;
  int grade = 0;
  int weight = 0;
};

/// Left side  e_1 e_2 ... e_m  where each element is a single letter or a
/// maximal run of one letter of length >= 1. Adjacent elements must use
/// different letters, so greedy matching is exact.
struct RunPattern {
  struct Element {
    Symbol symbol;
    bool run;
  };
  std::string name;
  std::vector<Element> elements;
  std::function<TermList(const std::vector<int>& run_lengths)> rhs;
};

struct LiteralRule {
  Word lhs;
  TermList rhs;
};

/// One concrete rewrite step found in a word.
struct RuleMatch {
  std::size_t pos = 0;
  std::size_t len = 0;
  TermList rhs;
};

class NCPolynomial;

class Presentation {
 public:
  Presentation(std::string name, std::vector<SymbolInfo> symbols, bool graded,
               std::vector<LiteralRule> rules, std::vector<RunPattern> patterns = {},
               int pattern_check_bound = 3);
  Presentation(const Presentation&) = delete;
  Presentation& operator=(const Presentation&) = delete;

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] std::size_t alphabet_size() const { return symbols_.size(); }
  [[nodiscard]] const SymbolInfo& symbol(Symbol s) const { return symbols_.at(s); }
  [[nodiscard]] Symbol symbol_id(std::string_view name) const;
  [[nodiscard]] bool graded() const { return graded_; }
  [[nodiscard]] const std::vector<LiteralRule>& rules() const { return rules_; }
  [[nodiscard]] const std::vector<RunPattern>& patterns() const { return patterns_; }

  /// Literal rules plus pattern instances with every run length <= bound.
  [[nodiscard]] std::vector<LiteralRule> rule_instances(int bound) const;

  /// Rewriting order: length, weight, then lexicographic.
  [[nodiscard]] bool less(const Word& a, const Word& b) const;
  [[nodiscard]] Word star(const Word& w) const;
  [[nodiscard]] int grade(const Word& w) const;
  [[nodiscard]] std::string word_string(const Word& w) const;
  /// Parses whitespace-separated symbol names; "1" or "" is the unit.
  [[nodiscard]] Word parse_word(std::string_view text) const;

  /// Leftmost reducible subword, if any.
  [[nodiscard]] std::optional<RuleMatch> find_match(const Word& w) const;
  [[nodiscard]] bool is_normal(const Word& w) const { return !find_match(w).has_value(); }

  /// Normal form of v·x for a normal word v. Cached; safe to call concurrently.
  const TermList& nf_append(const Word& v, Symbol x) const;
  /// Normal form of a single word.
  [[nodiscard]] TermList nf_word(const Word& w) const;
  /// Normal form of w_normal·tail where w_normal is already normal.
  [[nodiscard]] TermList nf_concat(const Word& w_normal, const Word& tail) const;

  [[nodiscard]] std::size_t cache_size() const;
  void clear_cache() const;

 private:
  [[nodiscard]] std::optional<RuleMatch> match_suffix(const Word& w) const;
  [[nodiscard]] std::optional<std::vector<int>> match_pattern_at(const RunPattern& p, const Word& w,
                                                                 std::size_t pos, std::size_t* len) const;
  void validate(int pattern_check_bound) const;

  std::string name_;
  std::vector<SymbolInfo> symbols_;
  bool graded_;
  std::vector<LiteralRule> rules_;
  std::vector<RunPattern> patterns_;
  std::vector<std::vector<std::size_t>> rules_by_last_;

  mutable std::shared_mutex cache_mutex_;
  mutable std::unordered_map<std::string, TermList> cache_;
};

class NCPolynomial {
 public:
  explicit NCPolynomial(const Presentation& pres) : pres_(&pres) {}
  NCPolynomial(const Presentation& pres, const RF& c);
  NCPolynomial(const Presentation& pres, const Word& w, const RF& c = RF(1));
  NCPolynomial(const Presentation& pres, TermList terms);
  /// Takes a map already free of zero coefficients.
  NCPolynomial(const Presentation& pres, std::map<Word, RF> terms) : pres_(&pres), terms_(std::move(terms)) {}
  NCPolynomial(const Presentation& pres, WordAccumulator&& acc) : NCPolynomial(pres, std::move(acc).finish()) {}
  /// Single generator by display name, e.g. gen(pres, "a*").
  static NCPolynomial gen(const Presentation& pres, std::string_view name);

  [[nodiscard]] const Presentation& presentation() const { return *pres_; }
  [[nodiscard]] const std::map<Word, RF>& terms() const& { return terms_; }
  // By value on rvalues so that range-for over a temporary's terms is safe.
  [[nodiscard]] std::map<Word, RF> terms() && { return std::move(terms_); }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] RF coefficient(const Word& w) const;
  [[nodiscard]] std::size_t max_length() const;
  [[nodiscard]] TermList term_list() const { return {terms_.begin(), terms_.end()}; }

  void add_term(const Word& w, const RF& c);
  NCPolynomial operator-() const;
  NCPolynomial& operator+=(const NCPolynomial& o);
  NCPolynomial& operator-=(const NCPolynomial& o);
  NCPolynomial& operator*=(const RF& c);
  friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
  friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
  friend NCPolynomial operator*(NCPolynomial a, const RF& c) { return a *= c; }
  friend NCPolynomial operator*(const RF& c, NCPolynomial a) { return a *= c; }
  /// Free concatenation product, no reduction.
  friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b);

  /// Structural equality of the stored term maps (coefficients compared exactly).
  friend bool operator==(const NCPolynomial& a, const NCPolynomial& b);

  [[nodiscard]] std::string to_string() const;

 private:
  const Presentation* pres_;
  std::map<Word, RF> terms_;
};

NCPolynomial nc_mul(const NCPolynomial& x, const NCPolynomial& y);
NCPolynomial normal_form(const NCPolynomial& x);
/// normal_form(x*y) for x, y already in normal form.
NCPolynomial nf_mul(const NCPolynomial& x, const NCPolynomial& y);
NCPolynomial nf_pow(const NCPolynomial& x, unsigned n);
NCPolynomial star(const NCPolynomial& x);
/// Common grade of all words; NotHomogeneous or NoGrading otherwise.
int degree(const NCPolynomial& x);
/// Apply f to every coefficient, dropping zeros.
NCPolynomial map_coefficients(const NCPolynomial& x, const std::function<RF(const RF&)>& f);

struct Overlap {
  Word word;
  std::string first_rule;
  std::string second_rule;
  NCPolynomial difference;
};

/// Resolves every overlap and inclusion ambiguity between rule left sides
/// (pattern rules instantiated up to `pattern_bound`) and returns the ones
/// whose two reductions have different normal forms.
std::vector<Overlap> check_confluence(const Presentation& pres, int pattern_bound = 3);

/// Each defining relation lhs - rhs and its star, normal-formed. All zero for
/// a consistent *-presentation.
struct RelationResidual {
  std::string relation;
  NCPolynomial residual;
  NCPolynomial star_residual;
};
std::vector<RelationResidual> relation_residuals(const Presentation& pres, int pattern_bound = 3);

}  // namespace hopfchern
