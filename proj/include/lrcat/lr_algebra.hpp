#pragma once

#include <map>
#include <string>
#include <vector>

#include "lrcat/binary_tree.hpp"
#include "lrcat/errors.hpp"
#include "lrcat/formal_sum.hpp"
#include "lrcat/permutation.hpp"

namespace lrcat {

using TreeSum = FormalSum<BinaryTree>;

inline PermSum psi_star(const BinaryTree& t) {
  PermSum out;
  for (const Permutation& sigma : fiber(t).perms) out.add(sigma, 1);
  return out;
}

// Memoized fibers for the fast product path. Results must be bit-identical
// to the uncached route; a differential test enforces this.
class FiberCache {
 public:
  const std::vector<Permutation>& of(const BinaryTree& t) {
    auto it = fibers_.find(t);
    if (it == fibers_.end()) it = fibers_.emplace(t, fiber(t).perms).first;
    return it->second;
  }

 private:
  std::map<BinaryTree, std::vector<Permutation>> fibers_;
};

namespace detail {

inline TreeSum regroup_by_psi(const PermSum& p) {
  std::map<BinaryTree, std::int64_t> counts;
  for (const auto& [sigma, c] : p.terms()) {
    auto [it, inserted] = counts.try_emplace(psi(sigma), c);
    if (!inserted) it->second = checked_add(it->second, c);
  }
  TreeSum out;
  for (const auto& [t, m] : counts) {
    const std::int64_t z = fiber_size(t);
    if (m % z != 0)
      throw ClosureViolationError("expansion is not a union of full fibers at tree " + encode_tree(t));
    out.add(t, m / z);
  }
  return out;
}

inline PermSum expand_pair(const BinaryTree& t1, const BinaryTree& t2, FiberCache* cache) {
  const std::vector<Permutation>& z1 = cache ? cache->of(t1) : fiber(t1).perms;
  const std::vector<Permutation>& z2 = cache ? cache->of(t2) : fiber(t2).perms;
  PermSum out;
  for (const Permutation& s1 : z1)
    for (const Permutation& s2 : z2) out += mr_product(s1, s2);
  return out;
}

}  // namespace detail

// Product of trees computed through the permutation oracle: expand both
// fibers, multiply in the permutation algebra, regroup by psi. Every group
// must absorb an exact multiple of its fiber, otherwise ClosureViolationError.
inline TreeSum lr_product(const BinaryTree& t1, const BinaryTree& t2) {
  return detail::regroup_by_psi(detail::expand_pair(t1, t2, nullptr));
}

inline TreeSum lr_product(const BinaryTree& t1, const BinaryTree& t2, FiberCache& cache) {
  return detail::regroup_by_psi(detail::expand_pair(t1, t2, &cache));
}

// Bilinear extension.
inline TreeSum lr_product_sum(const TreeSum& a, const TreeSum& b, FiberCache& cache) {
  TreeSum out;
  for (const auto& [t1, c1] : a.terms())
    for (const auto& [t2, c2] : b.terms()) {
      TreeSum p = lr_product(t1, t2, cache);
      const std::int64_t c = checked_mul(c1, c2);
      for (const auto& [t, cp] : p.terms()) out.add(t, checked_mul(cp, c));
    }
  return out;
}

inline TreeSum lr_product_sum(const TreeSum& a, const TreeSum& b) {
  FiberCache cache;
  return lr_product_sum(a, b, cache);
}

// Splits lr_product(t1, t2) by the canopy of its terms. Both keys
// canopy(t1).s.canopy(t2), s in {+1,-1}, are always present in the result
// (possibly with an empty sum). Any term outside the two classes would
// violate the product's structure and raises AssertionFailure.
inline std::map<SignWord, TreeSum> canopy_split(const BinaryTree& t1, const BinaryTree& t2) {
  if (t1.is_leaf() || t2.is_leaf())
    throw InvalidArgumentError("canopy_split requires trees of size >= 1");
  const SignWord q1 = canopy(t1);
  const SignWord q2 = canopy(t2);
  const SignWord up = q1 + SignWord({1}) + q2;
  const SignWord down = q1 + SignWord({-1}) + q2;
  std::map<SignWord, TreeSum> out;
  out[up];
  out[down];
  const TreeSum product = lr_product(t1, t2);
  for (const auto& [t, c] : product.terms()) {
    const SignWord q = canopy(t);
    if (q == up)
      out[up].add(t, c);
    else if (q == down)
      out[down].add(t, c);
    else
      throw AssertionFailure("product term " + encode_tree(t) + " has canopy " + q.to_string() +
                             " outside both connector classes");
  }
  return out;
}

}  // namespace lrcat
