#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "opsucc/formal_sum.hpp"

namespace opsucc {

// Ordered list of basis keys; positions are found by binary search.
template <typename Key>
class BasisIndex {
 public:
  BasisIndex() = default;
  explicit BasisIndex(std::vector<Key> keys) : keys_(std::move(keys)) {
    for (std::size_t i = 0; i + 1 < keys_.size(); ++i)
      if (!(keys_[i] < keys_[i + 1]))
        throw std::invalid_argument("basis keys not strictly increasing");
  }

  template <typename Sums>
  static BasisIndex covering(const Sums& vectors) {
    std::vector<Key> ks;
    for (const auto& v : vectors)
      for (const auto& [k, c] : v.terms()) ks.push_back(k);
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    return BasisIndex(std::move(ks));
  }

  std::size_t size() const { return keys_.size(); }
  const std::vector<Key>& keys() const { return keys_; }

  std::optional<std::size_t> find(const Key& k) const {
    auto it = std::lower_bound(keys_.begin(), keys_.end(), k);
    if (it == keys_.end() || !(*it == k)) return std::nullopt;
    return static_cast<std::size_t>(it - keys_.begin());
  }

  std::vector<Rational> to_dense(const FormalSum<Key>& v) const {
    std::vector<Rational> row(keys_.size(), Rational(0));
    for (const auto& [k, c] : v.terms()) {
      auto pos = find(k);
      if (!pos)
        throw std::invalid_argument("vector key outside the ambient basis index");
      row[*pos] = c;
    }
    return row;
  }

  bool operator==(const BasisIndex&) const = default;

 private:
  std::vector<Key> keys_;
};

// Row space in reduced row echelon form over a fixed basis index. RREF is
// unique for a given row space, so equality of spans is equality of rows.
template <typename Key>
class SpanBasis {
 public:
  SpanBasis() = default;
  explicit SpanBasis(BasisIndex<Key> index) : index_(std::move(index)) {}

  const BasisIndex<Key>& index() const { return index_; }
  std::size_t dimension() const { return rows_.size(); }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

  void insert(const FormalSum<Key>& v) { insert_row(index_.to_dense(v)); }

  // Reduces v against the rows; zero residual means membership.
  bool contains(const FormalSum<Key>& v) const {
    std::vector<Rational> row = index_.to_dense(v);
    reduce(row);
    return std::all_of(row.begin(), row.end(),
                       [](const Rational& c) { return c == 0; });
  }

 private:
  void reduce(std::vector<Rational>& row) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& c = row[pivots_[r]];
      if (c == 0) continue;
      Rational f = c;  // pivot entries are 1
      const auto& pr = rows_[r];
      for (std::size_t j = pivots_[r]; j < row.size(); ++j)
        if (pr[j] != 0) row[j] -= f * pr[j];
    }
  }

  void insert_row(std::vector<Rational> row) {
    reduce(row);
    std::size_t p = 0;
    while (p < row.size() && row[p] == 0) ++p;
    if (p == row.size()) return;  // dependent
    Rational inv = Rational(1) / row[p];
    for (std::size_t j = p; j < row.size(); ++j)
      if (row[j] != 0) row[j] *= inv;
    // eliminate the new pivot column from existing rows
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Rational f = rows_[r][p];
      if (f == 0) continue;
      for (std::size_t j = p; j < row.size(); ++j)
        if (row[j] != 0) rows_[r][j] -= f * row[j];
    }
    auto at = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    std::size_t idx = static_cast<std::size_t>(at - pivots_.begin());
    pivots_.insert(at, p);
    rows_.insert(rows_.begin() + idx, std::move(row));
  }

  BasisIndex<Key> index_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;

  template <typename K>
  friend bool span_equal(const SpanBasis<K>&, const SpanBasis<K>&);
};

template <typename Key>
SpanBasis<Key> span_of(const std::vector<FormalSum<Key>>& vectors,
                       BasisIndex<Key> index) {
  SpanBasis<Key> s(std::move(index));
  for (const auto& v : vectors) s.insert(v);
  return s;
}

// Convenience form: the ambient index is the union of the occurring keys.
template <typename Key>
SpanBasis<Key> span_of(const std::vector<FormalSum<Key>>& vectors) {
  return span_of(vectors, BasisIndex<Key>::covering(vectors));
}

template <typename Key>
bool span_equal(const SpanBasis<Key>& a, const SpanBasis<Key>& b) {
  if (!(a.index() == b.index()))
    throw std::invalid_argument("span_equal: incomparable ambient spaces");
  return a.rows_ == b.rows_;
}

template <typename Key>
bool in_span(const FormalSum<Key>& v, const SpanBasis<Key>& s) {
  return s.contains(v);
}

}  // namespace opsucc
