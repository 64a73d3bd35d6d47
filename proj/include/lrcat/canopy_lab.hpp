#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lrcat/binary_tree.hpp"
#include "lrcat/errors.hpp"
#include "lrcat/hash_algebra.hpp"
#include "lrcat/lr_algebra.hpp"
#include "lrcat/tableau.hpp"

namespace lrcat {

// Per-shape comparison of the two Catalan families: trees counted by canopy
// against valid tableaux counted by shape.
struct ShapeCensus {
  int n = 0;
  // shape of length n-1 -> (tree count, tableau count)
  std::map<SignWord, std::pair<std::int64_t, std::int64_t>> per_shape;

  std::int64_t total_trees() const {
    std::int64_t s = 0;
    for (const auto& [w, p] : per_shape) s += p.first;
    return s;
  }
  std::int64_t total_tableaux() const {
    std::int64_t s = 0;
    for (const auto& [w, p] : per_shape) s += p.second;
    return s;
  }
  bool all_equal() const {
    for (const auto& [w, p] : per_shape)
      if (p.first != p.second) return false;
    return true;
  }
};

inline ShapeCensus shape_census(int n) {
  if (n < 1 || n > 10) throw InvalidArgumentError("shape_census supports 1 <= n <= 10");
  ShapeCensus out;
  out.n = n;
  for (const Shape& s : all_shapes(n - 1)) out.per_shape[s] = {0, 0};
  for (const BinaryTree& t : enumerate_trees(n)) ++out.per_shape[canopy(t)].first;
  for (auto& [s, counts] : out.per_shape) counts.second = count_tableaux(s);
  return out;
}

// One connector class of one product: how many distinct trees landed in it
// and how many tableaux its shape admits in total.
struct SplitClassRecord {
  SignWord shape;
  std::int64_t class_size = 0;
  std::int64_t tableau_count = 0;
};

struct SplitPairRecord {
  BinaryTree t1, t2;
  SplitClassRecord up, down;
};

struct SplitReport {
  int n_max = 0;
  std::int64_t pairs = 0;
  std::vector<SplitPairRecord> records;
};

// Sweeps every pair of nonempty trees with total size <= n_max and checks
// the canopy structure of their product:
//   * every term's canopy is canopy(t1).s.canopy(t2) for s in {+1,-1};
//   * every coefficient is 1, so class size = number of trees appearing;
//   * both connector classes are nonempty;
//   * a class never exceeds the tableau count of its shape.
// Violations raise AssertionFailure naming the pair.
inline SplitReport verify_canopy_splitting(int n_max) {
  if (n_max > 7) throw InvalidArgumentError("verify_canopy_splitting supports n_max <= 7");
  SplitReport report;
  report.n_max = n_max;
  std::map<SignWord, std::int64_t> tableau_counts;
  auto tabs = [&](const SignWord& s) {
    auto it = tableau_counts.find(s);
    if (it == tableau_counts.end()) it = tableau_counts.emplace(s, count_tableaux(s)).first;
    return it->second;
  };
  for (int n = 2; n <= n_max; ++n)
    for (int k = 1; k <= n - 1; ++k)
      for (const BinaryTree& t1 : enumerate_trees(k))
        for (const BinaryTree& t2 : enumerate_trees(n - k)) {
          const std::string pair_name = encode_tree(t1) + " * " + encode_tree(t2);
          // canopy_split itself asserts that no term escapes the two classes
          std::map<SignWord, TreeSum> split = canopy_split(t1, t2);
          SplitPairRecord rec;
          rec.t1 = t1;
          rec.t2 = t2;
          bool first = true;
          for (const auto& [shape, sum] : split) {
            for (const auto& [t, c] : sum.terms())
              if (c != 1)
                throw AssertionFailure("coefficient " + std::to_string(c) + " != 1 in " + pair_name);
            SplitClassRecord cls;
            cls.shape = shape;
            cls.class_size = static_cast<std::int64_t>(sum.term_count());
            cls.tableau_count = tabs(shape);
            if (cls.class_size == 0)
              throw AssertionFailure("empty connector class " + shape.to_string() + " in " + pair_name);
            if (cls.class_size > cls.tableau_count)
              throw AssertionFailure("class size exceeds tableau count for shape " + shape.to_string() +
                                     " in " + pair_name);
            // map iterates shapes in order; the 'down' connector sorts first
            (first ? rec.down : rec.up) = cls;
            first = false;
          }
          report.records.push_back(std::move(rec));
          ++report.pairs;
        }
  return report;
}

// ---------------------------------------------------------------------------
// Correspondence explorer. The product structure constrains which tableau can
// stand for which tree; this solver propagates those constraints for a
// pluggable block-restriction rule and reports how far they pin a bijection.
// It is research tooling: it records findings and never asserts success.

enum class RestrictionStrategy { Identity, ShiftRows };

inline const char* strategy_name(RestrictionStrategy s) {
  return s == RestrictionStrategy::Identity ? "identity" : "shift";
}

struct TreeCandidates {
  BinaryTree tree;
  std::vector<Tableau> options;
};

struct ShapeFinding {
  SignWord shape;
  std::int64_t tree_count = 0;
  std::int64_t tableau_count = 0;
  std::string status;  // "unique" | "ambiguous" | "contradiction"
  std::vector<TreeCandidates> candidates;
};

struct ContradictionNote {
  BinaryTree t1, t2;
  int connector = 0;
  SignWord shape;
  std::int64_t class_size = 0;
  std::int64_t compatible_tableaux = 0;
  std::string detail;
};

struct MatchReport {
  int n_max = 0;
  RestrictionStrategy strategy = RestrictionStrategy::Identity;
  std::int64_t pairs_examined = 0;
  std::int64_t constraints_applied = 0;
  std::vector<ShapeFinding> shapes;
  std::vector<ContradictionNote> contradictions;
};

namespace detail {

// Pull the two factor blocks out of a product-shaped tableau. The combined
// word is q1 . connector . q2; block one is every cell with both steps
// <= m1, block two is the image of the right factor's cells under the same
// row placement rule the embedding strategies use (for the identity rule its
// own positions offset by m1+1, for the shift rule the earliest row-steps of
// the combined word).
inline std::pair<Tableau, Tableau> restrict_blocks(const Tableau& big, const SignWord& q1,
                                                   const SignWord& q2, RestrictionStrategy strategy) {
  const int m1 = q1.size();
  std::map<Cell, Dot> dots1;
  for (const auto& [cell, dot] : big.dots())
    if (cell.col <= m1) dots1.emplace(cell, dot);

  std::vector<int> row_image;
  if (strategy == RestrictionStrategy::Identity) {
    for (int p = 1; p <= q2.size(); ++p)
      if (q2.sign_at_position(p) == 1) row_image.push_back(p + m1 + 1);
  } else {
    int needed = 0;
    for (int p = 1; p <= q2.size(); ++p)
      if (q2.sign_at_position(p) == 1) ++needed;
    const Shape& combined = big.shape();
    for (int p = 1; p <= combined.size() && static_cast<int>(row_image.size()) < needed; ++p)
      if (combined.sign_at_position(p) == 1) row_image.push_back(p);
  }
  std::vector<int> rows2;
  for (int p = 1; p <= q2.size(); ++p)
    if (q2.sign_at_position(p) == 1) rows2.push_back(p);
  std::map<Cell, Dot> dots2;
  for (std::size_t j = 0; j < rows2.size(); ++j)
    for (int c = rows2[j] + 1; c <= q2.size(); ++c) {
      if (q2.sign_at_position(c) != -1) continue;
      auto dot = big.dot_at({row_image[j], c + m1 + 1});
      if (dot) dots2.emplace(Cell{rows2[j], c}, *dot);
    }
  return {Tableau(q1, std::move(dots1)), Tableau(q2, std::move(dots2))};
}

}  // namespace detail

inline MatchReport explore_correspondence(int n_max, RestrictionStrategy strategy) {
  if (n_max < 1 || n_max > 6) throw InvalidArgumentError("explore_correspondence supports 1 <= n_max <= 6");
  MatchReport report;
  report.n_max = n_max;
  report.strategy = strategy;

  std::map<SignWord, std::vector<Tableau>> tableaux_by_shape;
  auto tabs = [&](const SignWord& s) -> const std::vector<Tableau>& {
    auto it = tableaux_by_shape.find(s);
    if (it == tableaux_by_shape.end()) it = tableaux_by_shape.emplace(s, enumerate_tableaux(s)).first;
    return it->second;
  };

  // candidate tableaux per tree, shrunk by constraint propagation
  std::map<BinaryTree, std::set<Tableau>> cand;
  for (int n = 1; n <= n_max; ++n)
    for (const BinaryTree& t : enumerate_trees(n)) {
      const auto& options = tabs(canopy(t));
      cand[t] = std::set<Tableau>(options.begin(), options.end());
    }

  FiberCache cache;
  bool changed = true;
  for (int pass = 0; pass < 6 && changed; ++pass) {
    changed = false;
    for (int n = 2; n <= n_max; ++n)
      for (int k = 1; k <= n - 1; ++k)
        for (const BinaryTree& t1 : enumerate_trees(k))
          for (const BinaryTree& t2 : enumerate_trees(n - k)) {
            if (pass == 0) ++report.pairs_examined;
            const SignWord q1 = canopy(t1);
            const SignWord q2 = canopy(t2);
            std::map<SignWord, TreeSum> split = canopy_split(t1, t2);
            for (const auto& [shape, sum] : split) {
              const int connector = shape.at(q1.size());
              // tableaux of this shape whose block restriction is compatible
              // with the current candidates of the two factors
              std::set<Tableau> compatible;
              for (const Tableau& big : tabs(shape)) {
                auto [r1, r2] = detail::restrict_blocks(big, q1, q2, strategy);
                if (cand[t1].contains(r1) && cand[t2].contains(r2)) compatible.insert(big);
              }
              if (static_cast<std::int64_t>(sum.term_count()) !=
                  static_cast<std::int64_t>(compatible.size())) {
                if (pass == 0)
                  report.contradictions.push_back(
                      {t1, t2, connector, shape, static_cast<std::int64_t>(sum.term_count()),
                       static_cast<std::int64_t>(compatible.size()),
                       "class size differs from restriction-compatible tableau count"});
              }
              for (const auto& [term, c] : sum.terms()) {
                std::set<Tableau> next;
                for (const Tableau& option : cand[term])
                  if (compatible.contains(option)) next.insert(option);
                if (next.size() != cand[term].size()) {
                  changed = true;
                  ++report.constraints_applied;
                  cand[term] = std::move(next);
                }
              }
            }
          }
  }

  // findings grouped by shape
  std::map<SignWord, ShapeFinding> by_shape;
  for (int n = 1; n <= n_max; ++n)
    for (const BinaryTree& t : enumerate_trees(n)) {
      const SignWord s = canopy(t);
      ShapeFinding& f = by_shape[s];
      f.shape = s;
      ++f.tree_count;
      f.candidates.push_back({t, {cand[t].begin(), cand[t].end()}});
    }
  for (auto& [s, f] : by_shape) {
    f.tableau_count = static_cast<std::int64_t>(tabs(s).size());
    bool any_empty = false;
    bool all_single = true;
    std::set<Tableau> used;
    bool duplicate = false;
    for (const auto& c : f.candidates) {
      if (c.options.empty()) any_empty = true;
      if (c.options.size() != 1) all_single = false;
      if (c.options.size() == 1 && !used.insert(c.options.front()).second) duplicate = true;
    }
    f.status = any_empty || duplicate ? "contradiction" : (all_single ? "unique" : "ambiguous");
    report.shapes.push_back(f);
  }
  return report;
}

}  // namespace lrcat
