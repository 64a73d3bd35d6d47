#include <algorithm>
#include <set>

#include "doctest.h"
#include "lrcat/binary_tree.hpp"
#include "lrcat/verification.hpp"

using namespace lrcat;

namespace {

const BinaryTree L = BinaryTree::leaf();

// Catalan numbers recomputed from the convolution recurrence.
std::int64_t catalan_by_recurrence(int n) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int i = 0; i < m; ++i)
      c[static_cast<std::size_t>(m)] +=
          c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - 1 - i)];
  return c[static_cast<std::size_t>(n)];
}

}  // namespace

TEST_CASE("tree enumeration counts") {
  CHECK(enumerate_trees(0).size() == 1);
  CHECK(enumerate_trees(0).front().is_leaf());
  CHECK(enumerate_trees(4).size() == 14);
  CHECK(enumerate_trees(6).size() == 132);
  for (int n = 0; n <= 8; ++n) {
    CHECK(static_cast<std::int64_t>(enumerate_trees(n).size()) == catalan_by_recurrence(n));
    CHECK(catalan(n) == catalan_by_recurrence(n));
  }
}

TEST_CASE("tree enumeration is sorted and duplicate free") {
  for (int n = 0; n <= 6; ++n) {
    const auto trees = enumerate_trees(n);
    for (std::size_t i = 1; i < trees.size(); ++i) {
      CHECK(trees[i - 1] < trees[i]);
      CHECK(encode_tree(trees[i - 1]) < encode_tree(trees[i]));  // order matches the encoding
    }
  }
}

TEST_CASE("psi splits at the minimum") {
  CHECK(psi(Permutation::parse("1")) == BinaryTree::node(L, L));
  CHECK(psi(Permutation::parse("132")) ==
        BinaryTree::node(L, BinaryTree::node(BinaryTree::node(L, L), L)));
  CHECK(psi(Permutation::parse("213")) ==
        BinaryTree::node(BinaryTree::node(L, L), BinaryTree::node(L, L)));
  CHECK(psi(Permutation()) == L);
}

TEST_CASE("fibers by example") {
  CHECK(fiber(L).perms == std::vector<Permutation>{Permutation()});
  CHECK(fiber(BinaryTree::node(L, L)).perms == std::vector<Permutation>{Permutation::parse("1")});

  const BinaryTree two = psi(Permutation::parse("213"));
  CHECK(fiber(two).perms ==
        std::vector<Permutation>{Permutation::parse("213"), Permutation::parse("312")});

  const BinaryTree t = BinaryTree::node(BinaryTree::node(L, BinaryTree::node(L, L)),
                                        BinaryTree::node(L, L));
  CHECK(fiber(t).perms == std::vector<Permutation>{Permutation::parse("2314"),
                                                   Permutation::parse("2413"),
                                                   Permutation::parse("3412")});
}

TEST_CASE("fibers agree with filtering the symmetric group") {
  for (int n = 1; n <= 5; ++n) {
    const auto perms = all_permutations(n);
    for (const BinaryTree& t : enumerate_trees(n)) {
      std::vector<Permutation> expected;
      for (const Permutation& p : perms)
        if (psi(p) == t) expected.push_back(p);
      const TreeFiber f = fiber(t);
      CHECK(f.perms == expected);
      CHECK(static_cast<std::int64_t>(f.perms.size()) == fiber_size(t));
    }
  }
}

TEST_CASE("fibers partition the symmetric group") {
  auto r = run_check("fibers", [](CheckResult& cr) { check_fiber_partition(cr, 6); });
  CHECK(r.ok);
  INFO(r.detail);
}

TEST_CASE("canopy") {
  CHECK(canopy(BinaryTree::node(L, L)) == SignWord());
  CHECK(canopy(psi(Permutation::parse("213"))) == SignWord({-1, 1}));
  CHECK(canopy(psi(Permutation::parse("132"))) == SignWord({1, -1}));
  CHECK_THROWS_AS(canopy(L), InvalidArgumentError);
}

TEST_CASE("canopy equals the up-down sequence on every fiber") {
  for (int n = 1; n <= 5; ++n)
    for (const BinaryTree& t : enumerate_trees(n)) {
      const SignWord q = canopy(t);
      for (const Permutation& p : fiber(t).perms) CHECK(updown(p) == q);
    }
}

TEST_CASE("tree encoding") {
  CHECK(encode_tree(L) == ".");
  CHECK(encode_tree(BinaryTree::node(L, L)) == "(..)");
  CHECK(encode_tree(psi(Permutation::parse("132"))) == "(.((..).))");
  CHECK(decode_tree("(.((..).))") == psi(Permutation::parse("132")));

  for (int n = 0; n <= 8; ++n)
    for (const BinaryTree& t : enumerate_trees(n)) CHECK(decode_tree(encode_tree(t)) == t);

  CHECK_THROWS_AS(enumerate_trees(-1), InvalidArgumentError);
}

TEST_CASE("tree decoding reports the position of the defect") {
  CHECK_THROWS_AS(decode_tree(""), ParseError);
  CHECK_THROWS_AS(decode_tree("("), ParseError);
  CHECK_THROWS_AS(decode_tree("(.)"), ParseError);
  CHECK_THROWS_AS(decode_tree("(.."), ParseError);
  CHECK_THROWS_AS(decode_tree("x"), ParseError);
  CHECK_THROWS_AS(decode_tree("(..)x"), ParseError);
  try {
    decode_tree("(..)x");
  } catch (const ParseError& e) {
    CHECK(e.pos == 4);
  }
  try {
    decode_tree("(.)");
  } catch (const ParseError& e) {
    CHECK(e.pos == 2);
  }
}

TEST_CASE("canopy census per sign word adds up to the Catalan number") {
  for (int n = 1; n <= 7; ++n) {
    std::map<SignWord, int> counts;
    for (const BinaryTree& t : enumerate_trees(n)) ++counts[canopy(t)];
    std::int64_t total = 0;
    for (const auto& [w, c] : counts) {
      CHECK(w.size() == n - 1);
      total += c;
    }
    CHECK(total == catalan(n));
  }
}
