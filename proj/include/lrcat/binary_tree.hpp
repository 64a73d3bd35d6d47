#pragma once

#include <algorithm>
#include <compare>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lrcat/combinatorics.hpp"
#include "lrcat/errors.hpp"
#include "lrcat/permutation.hpp"

namespace lrcat {

// Rooted planar binary tree, an immutable value with structural sharing.
// The size of a tree is its number of internal nodes; the default-constructed
// tree is the leaf (size 0).
class BinaryTree {
 public:
  BinaryTree() = default;

  static BinaryTree leaf() { return BinaryTree(); }
  static BinaryTree node(const BinaryTree& left, const BinaryTree& right) {
    BinaryTree t;
    t.node_ = std::make_shared<const Node>(
        Node{left.node_, right.node_, left.size() + right.size() + 1});
    return t;
  }

  bool is_leaf() const { return node_ == nullptr; }
  int size() const { return node_ ? node_->size : 0; }

  BinaryTree left() const {
    if (!node_) throw InvalidArgumentError("leaf has no subtrees");
    return BinaryTree(node_->left);
  }
  BinaryTree right() const {
    if (!node_) throw InvalidArgumentError("leaf has no subtrees");
    return BinaryTree(node_->right);
  }

  friend bool operator==(const BinaryTree& a, const BinaryTree& b) {
    if (a.node_ == b.node_) return true;
    if (a.is_leaf() || b.is_leaf() || a.size() != b.size()) return false;
    return a.left() == b.left() && a.right() == b.right();
  }

  // Canonical order: lexicographic on the parenthesis encoding, in which
  // '(' sorts before '.'; encodings are prefix-free so the recursive
  // comparison agrees with plain string comparison.
  friend std::strong_ordering operator<=>(const BinaryTree& a, const BinaryTree& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (a.is_leaf()) return b.is_leaf() ? std::strong_ordering::equal : std::strong_ordering::greater;
    if (b.is_leaf()) return std::strong_ordering::less;
    if (auto c = a.left() <=> b.left(); c != 0) return c;
    return a.right() <=> b.right();
  }

 private:
  struct Node {
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
    int size;
  };
  explicit BinaryTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Leaf <-> "."; node <-> "(" left right ")".
inline std::string encode_tree(const BinaryTree& t) {
  if (t.is_leaf()) return ".";
  std::string s = "(";
  s += encode_tree(t.left());
  s += encode_tree(t.right());
  s += ")";
  return s;
}

namespace detail {

inline BinaryTree parse_tree(std::string_view text, std::size_t& pos) {
  if (pos >= text.size()) throw ParseError("unexpected end of tree encoding", pos);
  const char c = text[pos];
  if (c == '.') {
    ++pos;
    return BinaryTree::leaf();
  }
  if (c == '(') {
    ++pos;
    BinaryTree left = parse_tree(text, pos);
    BinaryTree right = parse_tree(text, pos);
    if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
    ++pos;
    return BinaryTree::node(std::move(left), std::move(right));
  }
  throw ParseError("expected '(' or '.'", pos);
}

}  // namespace detail

inline BinaryTree decode_tree(std::string_view text) {
  std::size_t pos = 0;
  BinaryTree t = detail::parse_tree(text, pos);
  if (pos != text.size()) throw ParseError("trailing characters after tree encoding", pos);
  return t;
}

// All trees with n internal nodes, each once, sorted in the canonical order.
inline std::vector<BinaryTree> enumerate_trees(int n) {
  if (n < 0) throw InvalidArgumentError("tree size must be nonnegative");
  std::vector<std::vector<BinaryTree>> by_size(static_cast<std::size_t>(n) + 1);
  by_size[0] = {BinaryTree::leaf()};
  for (int m = 1; m <= n; ++m) {
    auto& out = by_size[static_cast<std::size_t>(m)];
    for (int i = 0; i < m; ++i)
      for (const BinaryTree& l : by_size[static_cast<std::size_t>(i)])
        for (const BinaryTree& r : by_size[static_cast<std::size_t>(m - 1 - i)])
          out.push_back(BinaryTree::node(l, r));
  }
  auto& result = by_size[static_cast<std::size_t>(n)];
  std::sort(result.begin(), result.end());
  return result;
}

namespace detail {

// Splitting at the minimum builds the increasing tree; only the relative
// order of the letters matters, so subwords need no re-standardization.
inline BinaryTree psi_range(std::span<const int> w) {
  if (w.empty()) return BinaryTree::leaf();
  std::size_t mi = 0;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] < w[mi]) mi = i;
  return BinaryTree::node(psi_range(w.first(mi)), psi_range(w.subspan(mi + 1)));
}

}  // namespace detail

// Projection permutation -> tree: build the increasing binary tree whose
// in-order reading is sigma, then forget the labels.
inline BinaryTree psi(const Permutation& sigma) { return detail::psi_range(sigma.word()); }

struct TreeFiber {
  BinaryTree tree;
  std::vector<Permutation> perms;  // sorted; all map to `tree` under psi
};

namespace detail {

inline std::vector<std::vector<int>> fiber_words(const BinaryTree& t) {
  if (t.is_leaf()) return {{}};
  const int n = t.size();
  const int a = t.left().size();
  const auto left_words = fiber_words(t.left());
  const auto right_words = fiber_words(t.right());
  std::vector<std::vector<int>> out;
  // letters {2..n} split between the subtrees; 1 sits at the root
  for_each_combination(n - 1, a, [&](const std::vector<int>& idx) {
    std::vector<int> av, bv;
    av.reserve(static_cast<std::size_t>(a));
    bv.reserve(static_cast<std::size_t>(n - 1 - a));
    std::size_t p = 0;
    for (int v = 0; v < n - 1; ++v) {
      if (p < idx.size() && idx[p] == v) {
        av.push_back(v + 2);
        ++p;
      } else {
        bv.push_back(v + 2);
      }
    }
    for (const auto& u : left_words)
      for (const auto& v : right_words) {
        std::vector<int> word;
        word.reserve(static_cast<std::size_t>(n));
        for (int x : u) word.push_back(av[static_cast<std::size_t>(x - 1)]);
        word.push_back(1);
        for (int x : v) word.push_back(bv[static_cast<std::size_t>(x - 1)]);
        out.push_back(std::move(word));
      }
  });
  return out;
}

}  // namespace detail

// Z_T: every permutation projecting to t.
inline TreeFiber fiber(const BinaryTree& t) {
  TreeFiber f;
  f.tree = t;
  for (auto& w : detail::fiber_words(t)) f.perms.emplace_back(std::move(w));
  std::sort(f.perms.begin(), f.perms.end());
  return f;
}

// |Z_T| without enumeration: the number of increasing labelings is
// n! divided by the product of all subtree sizes.
inline std::int64_t fiber_size(const BinaryTree& t) {
  struct Rec {
    static std::int64_t subtree_product(const BinaryTree& t) {
      if (t.is_leaf()) return 1;
      return checked_mul(checked_mul(subtree_product(t.left()), subtree_product(t.right())),
                         static_cast<std::int64_t>(t.size()));
    }
  };
  return factorial(t.size()) / Rec::subtree_product(t);
}

namespace detail {

inline void canopy_rec(const BinaryTree& t, SignWord& out) {
  if (!t.left().is_leaf()) {
    canopy_rec(t.left(), out);
    out.push_back(-1);
  }
  if (!t.right().is_leaf()) {
    out.push_back(1);
    canopy_rec(t.right(), out);
  }
}

}  // namespace detail

// The common up-down sequence of every permutation in fiber(t); length n-1.
inline SignWord canopy(const BinaryTree& t) {
  if (t.is_leaf()) throw InvalidArgumentError("canopy of the leaf is undefined");
  SignWord w;
  detail::canopy_rec(t, w);
  return w;
}

}  // namespace lrcat
