#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "lrcat/checked.hpp"

namespace lrcat {

// Finitely supported integer linear combination of basis objects X.
// Zero coefficients are never stored. Terms iterate in the canonical order
// of X (its operator<), which makes every printed expansion deterministic.
template <class X>
class FormalSum {
 public:
  using Terms = std::map<X, std::int64_t>;

  FormalSum() = default;
  explicit FormalSum(const X& x) { terms_.emplace(x, 1); }
  FormalSum(const X& x, std::int64_t coeff) { add(x, coeff); }

  void add(const X& x, std::int64_t coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(x, coeff);
    if (!inserted) {
      it->second = checked_add(it->second, coeff);
      if (it->second == 0) terms_.erase(it);
    }
  }

  FormalSum& operator+=(const FormalSum& other) {
    for (const auto& [x, c] : other.terms_) add(x, c);
    return *this;
  }
  friend FormalSum operator+(FormalSum a, const FormalSum& b) {
    a += b;
    return a;
  }

  FormalSum& operator*=(std::int64_t k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [x, c] : terms_) c = checked_mul(c, k);
    return *this;
  }
  friend FormalSum operator*(std::int64_t k, FormalSum s) {
    s *= k;
    return s;
  }

  std::int64_t coeff(const X& x) const {
    auto it = terms_.find(x);
    return it == terms_.end() ? 0 : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  Terms terms_;
};

// "+"-joined rendering; coefficients other than 1 are written c*basis.
template <class X, class Fmt>
std::string to_string(const FormalSum<X>& s, Fmt&& fmt) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [x, c] : s.terms()) {
    if (!out.empty()) out += " + ";
    if (c != 1) {
      out += std::to_string(c);
      out += "*";
    }
    out += fmt(x);
  }
  return out;
}

}  // namespace lrcat
