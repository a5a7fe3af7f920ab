#pragma once

#include <map>
#include <utility>

#include "opsucc/rational.hpp"

namespace opsucc {

// A finite k-linear combination of basis keys. Zero coefficients are never
// stored, so equality of sums is equality of the underlying maps.
template <typename Key>
class FormalSum {
 public:
  using Terms = std::map<Key, Rational>;

  FormalSum() = default;
  explicit FormalSum(Key k) { terms_.emplace(std::move(k), Rational(1)); }
  FormalSum(Key k, Rational c) { add(std::move(k), c); }

  bool zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  Rational coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  FormalSum& add(Key k, const Rational& c) {
    if (c == 0) return *this;
    auto [it, fresh] = terms_.try_emplace(std::move(k), c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
    return *this;
  }

  FormalSum& operator+=(const FormalSum& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  FormalSum& operator-=(const FormalSum& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  FormalSum& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
  }

  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend FormalSum operator*(const Rational& c, FormalSum a) { return a *= c; }
  friend FormalSum operator-(FormalSum a) { return a *= Rational(-1); }

  bool operator==(const FormalSum&) const = default;

 private:
  Terms terms_;
};

}  // namespace opsucc
