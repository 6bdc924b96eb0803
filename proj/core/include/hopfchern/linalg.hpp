#pragma once

// Incremental row echelon form over Q(p,q,s) for sparse vectors indexed by
// an ordered key. The pivot of a row is its first nonzero key in the
// comparator's order; rows are stored with pivot coefficient 1 and every
// row remembers which inserted vectors it combines.

#include "hopfchern/budget.hpp"
#include "hopfchern/paramfield.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace hopfchern {

template <class Key, class Less = std::less<Key>>
class Echelon {
 public:
  using Vector = std::map<Key, RF, Less>;
  using Combination = std::map<std::size_t, RF>;

  /// Without tracking, combinations are left empty.
  explicit Echelon(bool track_combinations = true, Less less = Less())
      : track_(track_combinations), less_(less), pivots_(less) {}

  /// Fully reduces v; returns the residual and the combination of inserted
  /// vectors that was subtracted (v = residual + Σ combo_i · inserted_i).
  std::pair<Vector, Combination> reduce(Vector v) const {
    Combination combo;
    auto it = v.begin();
    while (it != v.end()) {
      auto row = pivots_.find(it->first);
      if (row == pivots_.end()) {
        ++it;
        continue;
      }
      poll_budget();
      const Key key = it->first;
      const RF factor = it->second;
      const Row& r = rows_[row->second];
      for (const auto& [k, c] : r.vec) add(v, k, -(factor * c));
      if (track_) {
        for (const auto& [tag, c] : r.combo) add(combo, tag, factor * c);
      }
      it = v.upper_bound(key);
    }
    return {std::move(v), std::move(combo)};
  }

  /// Inserts v under `tag`; true when v was independent of earlier rows.
  bool insert(Vector v, std::size_t tag) {
    auto [residual, combo] = reduce(std::move(v));
    if (residual.empty()) return false;
    Combination own;
    for (const auto& [t, c] : combo) own.emplace(t, -c);
    if (track_) add(own, tag, RF(1));
    const RF lead = residual.begin()->second;
    if (!lead.is_one()) {
      const RF inv = lead.inverse();
      for (auto& [k, c] : residual) c *= inv;
      for (auto& [t, c] : own) c *= inv;
    }
    pivots_.emplace(residual.begin()->first, rows_.size());
    rows_.push_back({std::move(residual), std::move(own)});
    return true;
  }

  [[nodiscard]] std::size_t rank() const { return rows_.size(); }
  [[nodiscard]] bool is_pivot(const Key& k) const { return pivots_.count(k) != 0; }
  [[nodiscard]] std::vector<Key> pivot_keys() const {
    std::vector<Key> out;
    for (const auto& [k, idx] : pivots_) out.push_back(k);
    return out;
  }

 private:
  struct Row {
    Vector vec;
    Combination combo;
  };

  template <class Map, class K>
  static void add(Map& m, const K& k, const RF& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = m.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) m.erase(it);
    }
  }

  bool track_;
  Less less_;
  std::map<Key, std::size_t, Less> pivots_;
  std::vector<Row> rows_;
};

}  // namespace hopfchern
