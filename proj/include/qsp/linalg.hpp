#pragma once

#include <map>
#include <optional>
#include <utility>

#include "qsp/scalar.hpp"

namespace qsp {

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const Fraction& x) { return x.is_zero(); }

template <class Key, class T>
using SparseVec = std::map<Key, T>;

template <class Key, class T>
void axpy(SparseVec<Key, T>& y, const T& a, const SparseVec<Key, T>& x) {
  for (const auto& [k, c] : x) {
    auto [it, inserted] = y.try_emplace(k, a * c);
    if (!inserted) {
      it->second += a * c;
      if (is_zero(it->second)) y.erase(it);
    }
  }
}

/// Incremental row echelon form over a field. The pivot of a row is its
/// largest key; reduce() returns the unique remainder supported on non-pivot
/// keys.
template <class Key, class T>
class Echelon {
 public:
  using Vec = SparseVec<Key, T>;

  Vec reduce(Vec v) const {
    if (v.empty()) return v;
    auto it = std::prev(v.end());
    while (true) {
      auto row = rows_.find(it->first);
      Key cursor = it->first;
      if (row != rows_.end()) {
        T f = it->second;
        axpy(v, T(-f), row->second);
      }
      auto next = v.lower_bound(cursor);
      if (next == v.begin()) break;
      it = std::prev(next);
    }
    return v;
  }

  /// Adds v to the span; returns false when v was already in it.
  bool insert(const Vec& v) {
    Vec r = reduce(v);
    if (r.empty()) return false;
    auto& [pivot, lead] = *r.rbegin();
    T inv = T(1) / lead;
    for (auto& [k, c] : r) c *= inv;
    Key p = pivot;
    rows_.emplace(std::move(p), std::move(r));
    return true;
  }

  bool contains(const Vec& v) const { return reduce(v).empty(); }
  size_t rank() const { return rows_.size(); }
  const std::map<Key, Vec>& rows() const { return rows_; }

 private:
  std::map<Key, Vec> rows_;
};

// Rows with a record of how they were combined, over Q. insert() returns the
// dependency (coefficients with lambda_idx = 1) when the new row is dependent.
template <class Key>
class TrackedEchelon {
 public:
  using Vec = SparseVec<Key, Rational>;
  using Combo = std::map<int, Rational>;

  std::optional<Combo> insert(Vec v, int idx) {
    Combo combo{{idx, Rational(1)}};
    reduce(v, combo);
    if (v.empty()) return combo;
    auto& [pivot, lead] = *v.rbegin();
    Rational inv = 1 / lead;
    for (auto& [k, c] : v) c *= inv;
    for (auto& [k, c] : combo) c *= inv;
    Key p = pivot;
    rows_.emplace(p, std::make_pair(std::move(v), std::move(combo)));
    return std::nullopt;
  }

  bool contains(Vec v) const {
    Combo ignored;
    reduce(v, ignored);
    return v.empty();
  }

  /// Coefficients expressing v through the inserted rows, if v is in the span.
  std::optional<Combo> solve(Vec v) const {
    Combo combo;
    reduce(v, combo);
    if (!v.empty()) return std::nullopt;
    for (auto& [t, c] : combo) c = -c;
    return combo;
  }

  size_t rank() const { return rows_.size(); }

 private:
  void reduce(Vec& v, Combo& combo) const {
    while (!v.empty()) {
      bool progressed = false;
      for (auto it = v.rbegin(); it != v.rend(); ++it) {
        auto row = rows_.find(it->first);
        if (row == rows_.end()) continue;
        Rational f = it->second;
        axpy(v, Rational(-f), row->second.first);
        for (const auto& [t, c] : row->second.second) {
          combo[t] -= f * c;
          if (combo[t] == 0) combo.erase(t);
        }
        progressed = true;
        break;
      }
      if (!progressed) break;
    }
  }

  std::map<Key, std::pair<Vec, Combo>> rows_;
};

}  // namespace qsp
