#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "lrcat/combinatorics.hpp"
#include "lrcat/errors.hpp"
#include "lrcat/formal_sum.hpp"

namespace lrcat {

// Word over {+1,-1}. It is at once the up-down sequence of a permutation,
// the canopy of a binary tree and the shape of a tableau.
class SignWord {
 public:
  SignWord() = default;
  SignWord(std::initializer_list<int> signs) : SignWord(std::vector<int>(signs)) {}
  explicit SignWord(const std::vector<int>& signs) {
    signs_.reserve(signs.size());
    for (int s : signs) {
      if (s != 1 && s != -1) throw InvalidArgumentError("sign word entries must be +1 or -1");
      signs_.push_back(static_cast<std::int8_t>(s));
    }
  }

  // "+-+" (one sign per character); "e" or "" denote the empty word.
  static SignWord parse(std::string_view text) {
    SignWord w;
    if (text == "e" || text.empty()) return w;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '+')
        w.signs_.push_back(1);
      else if (text[i] == '-')
        w.signs_.push_back(-1);
      else
        throw ParseError("expected '+' or '-' in sign word", i);
    }
    return w;
  }

  int size() const { return static_cast<int>(signs_.size()); }
  bool empty() const { return signs_.empty(); }

  int at(int i) const { return signs_.at(static_cast<std::size_t>(i)); }  // 0-based
  // 1-based step position, the coordinate used by tableau cells
  int sign_at_position(int pos) const { return signs_.at(static_cast<std::size_t>(pos - 1)); }

  void push_back(int s) {
    if (s != 1 && s != -1) throw InvalidArgumentError("sign word entries must be +1 or -1");
    signs_.push_back(static_cast<std::int8_t>(s));
  }

  SignWord appended(int s) const {
    SignWord w = *this;
    w.push_back(s);
    return w;
  }

  friend SignWord operator+(const SignWord& a, const SignWord& b) {
    SignWord w = a;
    w.signs_.insert(w.signs_.end(), b.signs_.begin(), b.signs_.end());
    return w;
  }

  SignWord reversed_negated() const {
    SignWord w;
    w.signs_.reserve(signs_.size());
    for (auto it = signs_.rbegin(); it != signs_.rend(); ++it)
      w.signs_.push_back(static_cast<std::int8_t>(-*it));
    return w;
  }

  std::vector<int> as_ints() const { return {signs_.begin(), signs_.end()}; }

  std::string to_string() const {
    if (signs_.empty()) return "e";
    std::string s;
    s.reserve(signs_.size());
    for (auto v : signs_) s += (v > 0 ? '+' : '-');
    return s;
  }

  auto operator<=>(const SignWord&) const = default;

 private:
  std::vector<std::int8_t> signs_;
};

// Word of pairwise distinct positive integers, not necessarily 1..k.
class IntWord {
 public:
  IntWord() = default;
  IntWord(std::initializer_list<int> seq) : IntWord(std::vector<int>(seq)) {}
  explicit IntWord(std::vector<int> seq) : seq_(std::move(seq)) {
    std::vector<int> sorted = seq_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidWordError("word has repeated letters");
    if (!sorted.empty() && sorted.front() < 1)
      throw InvalidWordError("word letters must be positive");
  }

  int size() const { return static_cast<int>(seq_.size()); }
  const std::vector<int>& seq() const { return seq_; }

  std::string to_string() const;

  auto operator<=>(const IntWord&) const = default;

 private:
  std::vector<int> seq_;
};

// Permutation of {1..n} in one-line notation; n == 0 is the unit.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = static_cast<int>(word_.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : word_) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
        throw InvalidWordError("not a permutation of {1..n}");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
  }

  // "2143" (contiguous digits, n <= 9), "2 1 4 3", or "e" for the unit.
  static Permutation parse(std::string_view text) {
    if (text == "e" || text.empty()) return Permutation();
    std::vector<int> w;
    if (text.find(' ') == std::string_view::npos) {
      for (std::size_t i = 0; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '0')
          throw ParseError("expected digits 1-9 in contiguous permutation", i);
        w.push_back(text[i] - '0');
      }
    } else {
      std::size_t i = 0;
      while (i < text.size()) {
        while (i < text.size() && text[i] == ' ') ++i;
        if (i == text.size()) break;
        std::size_t start = i;
        int v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          v = v * 10 + (text[i] - '0');
          ++i;
        }
        if (i == start) throw ParseError("expected an integer", i);
        w.push_back(v);
      }
    }
    return Permutation(std::move(w));
  }

  int size() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }

  std::string to_string() const {
    if (word_.empty()) return "e";
    std::string s;
    if (size() <= 9) {
      for (int v : word_) s += static_cast<char>('0' + v);
    } else {
      for (int v : word_) {
        if (!s.empty()) s += ' ';
        s += std::to_string(v);
      }
    }
    return s;
  }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> word_;
};

inline std::string IntWord::to_string() const {
  if (seq_.empty()) return "e";
  bool compact = std::all_of(seq_.begin(), seq_.end(), [](int v) { return v <= 9; });
  std::string s;
  for (int v : seq_) {
    if (compact)
      s += static_cast<char>('0' + v);
    else {
      if (!s.empty()) s += ' ';
      s += std::to_string(v);
    }
  }
  return s;
}

using PermSum = FormalSum<Permutation>;

// The unique permutation with the same relative order as u.
inline Permutation standardize(const IntWord& u) {
  const auto& seq = u.seq();
  const int n = u.size();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return seq[static_cast<std::size_t>(a)] < seq[static_cast<std::size_t>(b)]; });
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int rank = 0; rank < n; ++rank) w[static_cast<std::size_t>(order[static_cast<std::size_t>(rank)])] = rank + 1;
  return Permutation(std::move(w));
}

// The unique word with letter set `values` standardizing to sigma.
inline IntWord instantiate(const Permutation& sigma, std::vector<int> values) {
  if (static_cast<int>(values.size()) != sigma.size())
    throw InvalidArgumentError("value set size does not match the permutation size");
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end())
    throw InvalidArgumentError("value set has repeated entries");
  std::vector<int> out;
  out.reserve(values.size());
  for (int v : sigma.word()) out.push_back(values[static_cast<std::size_t>(v - 1)]);
  return IntWord(std::move(out));
}

// Shuffle product on permutations: sum over all splittings of {1..k+l}
// into a k-set carrying sigma and its complement carrying tau, concatenated.
// Exactly binomial(k+l, k) distinct terms, every coefficient 1.
inline PermSum mr_product(const Permutation& sigma, const Permutation& tau) {
  const int k = sigma.size();
  const int l = tau.size();
  const int n = k + l;
  PermSum out;
  for_each_combination(n, k, [&](const std::vector<int>& idx) {
    std::vector<int> a, b;
    a.reserve(static_cast<std::size_t>(k));
    b.reserve(static_cast<std::size_t>(l));
    std::size_t p = 0;
    for (int v = 0; v < n; ++v) {
      if (p < idx.size() && idx[p] == v) {
        a.push_back(v + 1);
        ++p;
      } else {
        b.push_back(v + 1);
      }
    }
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(n));
    for (int v : sigma.word()) word.push_back(a[static_cast<std::size_t>(v - 1)]);
    for (int v : tau.word()) word.push_back(b[static_cast<std::size_t>(v - 1)]);
    out.add(Permutation(std::move(word)), 1);
  });
  if (out.term_count() != static_cast<std::size_t>(binomial(n, k)))
    throw AssertionFailure("shuffle product produced colliding terms");
  return out;
}

// Bilinear extension.
inline PermSum mr_product(const PermSum& a, const PermSum& b) {
  PermSum out;
  for (const auto& [sigma, cs] : a.terms())
    for (const auto& [tau, ct] : b.terms()) {
      PermSum p = mr_product(sigma, tau);
      const std::int64_t c = checked_mul(cs, ct);
      for (const auto& [pi, cp] : p.terms()) out.add(pi, checked_mul(cp, c));
    }
  return out;
}

// Entry i is +1 iff sigma_{i+1} > sigma_i; length n-1.
inline SignWord updown(const Permutation& sigma) {
  if (sigma.size() == 0) throw InvalidArgumentError("up-down sequence of the empty permutation is undefined");
  SignWord w;
  const auto& word = sigma.word();
  for (std::size_t i = 0; i + 1 < word.size(); ++i) w.push_back(word[i + 1] > word[i] ? 1 : -1);
  return w;
}

}  // namespace lrcat
