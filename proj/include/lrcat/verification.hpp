#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lrcat/canopy_lab.hpp"
#include "lrcat/hash_algebra.hpp"
#include "lrcat/json_io.hpp"
#include "lrcat/lr_algebra.hpp"
#include "lrcat/permutation.hpp"
#include "lrcat/tableau.hpp"

// Whole-library verification sweeps. They back the CLI `verify` command and
// the acceptance suite; unit tests reuse them at smaller sizes.

namespace lrcat {

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string detail;
  double millis = 0.0;
};

template <class Fn>
CheckResult run_check(std::string name, Fn&& fn) {
  CheckResult r;
  r.name = std::move(name);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    fn(r);
  } catch (const std::exception& e) {
    r.ok = false;
    r.detail = e.what();
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// --- deterministic random generators -------------------------------------

class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : eng_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  bool coin() { return uniform(0, 1) == 1; }
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

inline Permutation random_permutation(TestRng& rng, int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::shuffle(w.begin(), w.end(), rng.engine());
  return Permutation(std::move(w));
}

inline BinaryTree random_tree(TestRng& rng, int n) {
  return n == 0 ? BinaryTree::leaf() : psi(random_permutation(rng, n));
}

inline SignWord random_sign_word(TestRng& rng, int m) {
  SignWord w;
  for (int i = 0; i < m; ++i) w.push_back(rng.coin() ? 1 : -1);
  return w;
}

// Uniform over nothing in particular, but always a valid tableau: walk the
// cells the way the enumeration engine does and pick a color at choice cells.
inline Tableau random_tableau(TestRng& rng, int m) {
  const Shape shape = random_sign_word(rng, m);
  std::map<Cell, Dot> dots;
  std::vector<char> red_below(static_cast<std::size_t>(m) + 1, 0);
  int current_row = -1;
  bool blue_in_row = false;
  for (int r = m; r >= 1; --r) {
    if (shape.sign_at_position(r) != 1) continue;
    for (int c = r + 1; c <= m; ++c) {
      if (shape.sign_at_position(c) != -1) continue;
      if (r != current_row) {
        current_row = r;
        blue_in_row = false;
      }
      if (red_below[static_cast<std::size_t>(c)] || blue_in_row) continue;  // forced empty
      if (rng.coin()) {
        dots.emplace(Cell{r, c}, Dot::Red);
        red_below[static_cast<std::size_t>(c)] = 1;
      } else {
        dots.emplace(Cell{r, c}, Dot::Blue);
        blue_in_row = true;
      }
    }
  }
  return Tableau(shape, std::move(dots));
}

// --- permutation algebra sweeps -------------------------------------------

inline void check_mr_structure(CheckResult& r, int exhaustive_max, int sampled_max, int samples,
                               std::uint64_t seed) {
  std::int64_t pairs = 0;
  for (int n = 0; n <= exhaustive_max; ++n)
    for (int k = 0; k <= n; ++k) {
      const auto sigmas = all_permutations(k);
      const auto taus = all_permutations(n - k);
      for (const auto& s : sigmas)
        for (const auto& t : taus) {
          const PermSum p = mr_product(s, t);
          ++pairs;
          if (p.term_count() != static_cast<std::size_t>(binomial(n, k)))
            throw AssertionFailure("term count off for " + s.to_string() + " * " + t.to_string());
          for (const auto& [pi, c] : p.terms())
            if (c != 1) throw AssertionFailure("coefficient != 1 in " + s.to_string() + " * " + t.to_string());
        }
    }
  TestRng rng(seed);
  for (int n = exhaustive_max + 1; n <= sampled_max; ++n)
    for (int i = 0; i < samples; ++i) {
      const int k = rng.uniform(0, n);
      const Permutation s = random_permutation(rng, k);
      const Permutation t = random_permutation(rng, n - k);
      if (mr_product(s, t).term_count() != static_cast<std::size_t>(binomial(n, k)))
        throw AssertionFailure("sampled term count off for " + s.to_string() + " * " + t.to_string());
      ++pairs;
    }
  r.detail = std::to_string(pairs) + " pairs";
}

inline void check_mr_associativity(CheckResult& r, int exhaustive_max, int sampled_max, int samples,
                                   std::uint64_t seed) {
  std::int64_t triples = 0;
  for (int n = 0; n <= exhaustive_max; ++n)
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b) {
        const int c = n - a - b;
        for (const auto& s : all_permutations(a))
          for (const auto& t : all_permutations(b))
            for (const auto& u : all_permutations(c)) {
              if (mr_product(mr_product(s, t), PermSum(u)) != mr_product(PermSum(s), mr_product(t, u)))
                throw AssertionFailure("associativity fails at " + s.to_string() + ", " + t.to_string() +
                                       ", " + u.to_string());
              ++triples;
            }
      }
  TestRng rng(seed);
  for (int n = exhaustive_max + 1; n <= sampled_max; ++n)
    for (int i = 0; i < samples; ++i) {
      const int a = rng.uniform(0, n);
      const int b = rng.uniform(0, n - a);
      const Permutation s = random_permutation(rng, a);
      const Permutation t = random_permutation(rng, b);
      const Permutation u = random_permutation(rng, n - a - b);
      if (mr_product(mr_product(s, t), PermSum(u)) != mr_product(PermSum(s), mr_product(t, u)))
        throw AssertionFailure("sampled associativity fails at " + s.to_string() + ", " + t.to_string() +
                               ", " + u.to_string());
      ++triples;
    }
  r.detail = std::to_string(triples) + " triples";
}

// --- tree sweeps -----------------------------------------------------------

inline void check_catalan_trees(CheckResult& r, int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    const auto trees = enumerate_trees(n);
    if (static_cast<std::int64_t>(trees.size()) != catalan(n))
      throw AssertionFailure("tree count at size " + std::to_string(n));
    for (std::size_t i = 1; i < trees.size(); ++i)
      if (!(trees[i - 1] < trees[i])) throw AssertionFailure("tree order not strictly increasing");
  }
  r.detail = "sizes 0.." + std::to_string(max_n);
}

inline void check_tableau_totals(CheckResult& r, int max_m) {
  for (int m = 0; m <= max_m; ++m)
    if (static_cast<std::int64_t>(enumerate_all_tableaux(m).size()) != catalan(m + 1))
      throw AssertionFailure("tableau total at size " + std::to_string(m));
  r.detail = "sizes 0.." + std::to_string(max_m);
}

inline void check_fiber_partition(CheckResult& r, int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    std::set<Permutation> seen;
    std::int64_t total = 0;
    for (const BinaryTree& t : enumerate_trees(n)) {
      const TreeFiber f = fiber(t);
      if (static_cast<std::int64_t>(f.perms.size()) != fiber_size(t))
        throw AssertionFailure("fiber size formula disagrees with enumeration");
      for (const Permutation& p : f.perms) {
        if (psi(p) != t) throw AssertionFailure("fiber member does not project back");
        if (!seen.insert(p).second) throw AssertionFailure("fibers are not disjoint at n=" + std::to_string(n));
      }
      total += static_cast<std::int64_t>(f.perms.size());
    }
    if (total != factorial(n)) throw AssertionFailure("fibers do not cover S_n at n=" + std::to_string(n));
  }
  r.detail = "sizes 1.." + std::to_string(max_n);
}

inline void check_canopy_constancy(CheckResult& r, int max_n) {
  std::int64_t count = 0;
  for (int n = 1; n <= max_n; ++n)
    for (const Permutation& p : all_permutations(n)) {
      if (updown(p) != canopy(psi(p)))
        throw AssertionFailure("up-down sequence differs from canopy at " + p.to_string());
      ++count;
    }
  r.detail = std::to_string(count) + " permutations";
}

// --- tree product sweeps ----------------------------------------------------

inline void check_lr_closure(CheckResult& r, int max_total) {
  FiberCache cache;
  std::int64_t pairs = 0;
  std::int64_t max_coeff = 0;
  for (int n = 0; n <= max_total; ++n)
    for (int k = 0; k <= n; ++k)
      for (const BinaryTree& t1 : enumerate_trees(k))
        for (const BinaryTree& t2 : enumerate_trees(n - k)) {
          const TreeSum p = lr_product(t1, t2, cache);  // throws on closure violation
          ++pairs;
          for (const auto& [t, c] : p.terms()) {
            if (c <= 0)
              throw AssertionFailure("nonpositive coefficient in " + encode_tree(t1) + " * " + encode_tree(t2));
            if (t.size() != n) throw AssertionFailure("grading violated in product of sizes " +
                                                      std::to_string(k) + ", " + std::to_string(n - k));
            max_coeff = std::max(max_coeff, c);
          }
        }
  r.detail = std::to_string(pairs) + " pairs, max coefficient " + std::to_string(max_coeff);
}

inline void check_lr_unit(CheckResult& r, int max_n) {
  const BinaryTree unit = BinaryTree::leaf();
  for (int n = 0; n <= max_n; ++n)
    for (const BinaryTree& t : enumerate_trees(n)) {
      const TreeSum expected(t);
      if (lr_product(unit, t) != expected || lr_product(t, unit) != expected)
        throw AssertionFailure("leaf is not a unit at " + encode_tree(t));
    }
  r.detail = "sizes 0.." + std::to_string(max_n);
}

inline void check_lr_associativity(CheckResult& r, int max_total) {
  FiberCache cache;
  std::int64_t triples = 0;
  for (int n = 0; n <= max_total; ++n)
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b) {
        const int c = n - a - b;
        for (const BinaryTree& t1 : enumerate_trees(a))
          for (const BinaryTree& t2 : enumerate_trees(b)) {
            const TreeSum left_inner = lr_product(t1, t2, cache);
            for (const BinaryTree& t3 : enumerate_trees(c)) {
              const TreeSum lhs = lr_product_sum(left_inner, TreeSum(t3), cache);
              const TreeSum rhs = lr_product_sum(TreeSum(t1), lr_product(t2, t3, cache), cache);
              if (lhs != rhs)
                throw AssertionFailure("associativity fails at " + encode_tree(t1) + ", " +
                                       encode_tree(t2) + ", " + encode_tree(t3));
              ++triples;
            }
          }
      }
  r.detail = std::to_string(triples) + " triples";
}

// The cached fast path must be bit-identical to the reference route.
inline void check_lr_differential(CheckResult& r, int max_total) {
  FiberCache cache;
  std::int64_t pairs = 0;
  for (int n = 0; n <= max_total; ++n)
    for (int k = 0; k <= n; ++k)
      for (const BinaryTree& t1 : enumerate_trees(k))
        for (const BinaryTree& t2 : enumerate_trees(n - k)) {
          if (lr_product(t1, t2) != lr_product(t1, t2, cache))
            throw AssertionFailure("cached product differs at " + encode_tree(t1) + " * " + encode_tree(t2));
          ++pairs;
        }
  r.detail = std::to_string(pairs) + " pairs";
}

// --- census and splitting ----------------------------------------------------

inline void check_census(CheckResult& r, int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    const ShapeCensus c = shape_census(n);
    for (const auto& [shape, counts] : c.per_shape)
      if (counts.first != counts.second)
        throw AssertionFailure("census mismatch at shape " + shape.to_string() + ": " +
                               std::to_string(counts.first) + " trees vs " +
                               std::to_string(counts.second) + " tableaux");
    if (c.total_trees() != catalan(n) || c.total_tableaux() != catalan(n))
      throw AssertionFailure("census totals differ from the Catalan number at n=" + std::to_string(n));
  }
  r.detail = "sizes 1.." + std::to_string(max_n);
}

inline void check_canopy_splitting(CheckResult& r, int max_n) {
  const SplitReport report = verify_canopy_splitting(max_n);
  r.detail = std::to_string(report.pairs) + " pairs";
}

// --- tableau sweeps -----------------------------------------------------------

inline void check_transpose(CheckResult& r, int max_m) {
  std::int64_t count = 0;
  for (int m = 0; m <= max_m; ++m)
    for (const Tableau& t : enumerate_all_tableaux(m)) {
      const Tableau tt = transpose(t);
      if (!is_valid(tt)) throw AssertionFailure("transpose not valid for " + t.to_string());
      if (transpose(tt) != t) throw AssertionFailure("transpose not an involution for " + t.to_string());
      ++count;
    }
  r.detail = std::to_string(count) + " tableaux";
}

// --- # product sweeps ----------------------------------------------------------

inline std::vector<std::vector<Tableau>> tableaux_up_to(int max_m) {
  std::vector<std::vector<Tableau>> by_size;
  for (int m = 0; m <= max_m; ++m) by_size.push_back(enumerate_all_tableaux(m));
  return by_size;
}

inline void check_hash_unit(CheckResult& r, int max_m) {
  const Tableau unit;
  for (int m = 0; m <= max_m; ++m)
    for (const Tableau& t : enumerate_all_tableaux(m)) {
      const TableauSum expected(t);
      if (hash_product(unit, t) != expected || hash_product(t, unit) != expected)
        throw AssertionFailure("empty tableau is not a unit at " + t.to_string());
    }
  r.detail = "sizes 0.." + std::to_string(max_m);
}

inline void check_hash_grading_and_blocks(CheckResult& r, int max_total, EmbedStrategy strategy) {
  const auto by_size = tableaux_up_to(max_total);
  std::int64_t pairs = 0;
  for (int n = 0; n <= max_total; ++n)
    for (int k = 0; k <= n; ++k)
      for (const Tableau& c1 : by_size[static_cast<std::size_t>(k)])
        for (const Tableau& c2 : by_size[static_cast<std::size_t>(n - k)]) {
          const TableauSum p = hash_product(c1, c2, strategy);
          ++pairs;
          for (const auto& [t, c] : p.terms()) {
            if (c != 1) throw AssertionFailure("coefficient != 1 in " + c1.to_string() + " # " + c2.to_string());
            if (t.size() != n)
              throw AssertionFailure("grading violated in " + c1.to_string() + " # " + c2.to_string());
            for (const Cell& cell : cells(c1.shape()))
              if (t.dot_at(cell) != c1.dot_at(cell))
                throw AssertionFailure("left block not preserved in " + c1.to_string() + " # " + c2.to_string());
          }
        }
  r.detail = std::to_string(pairs) + " pairs";
}

struct HashAssocFailure {
  Tableau c1, c2, c3;
  std::int64_t left_terms = 0;
  std::int64_t right_terms = 0;
};

struct HashStrategyReport {
  EmbedStrategy strategy = EmbedStrategy::Identity;
  std::int64_t triples = 0;
  std::int64_t failure_count = 0;
  std::vector<HashAssocFailure> sample_failures;  // capped
};

inline HashStrategyReport hash_associativity_sweep(int max_total, EmbedStrategy strategy,
                                                   std::size_t keep_failures = 10) {
  HashStrategyReport report;
  report.strategy = strategy;
  const auto by_size = tableaux_up_to(max_total);
  for (int n = 0; n <= max_total; ++n)
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b) {
        const int c = n - a - b;
        for (const Tableau& c1 : by_size[static_cast<std::size_t>(a)])
          for (const Tableau& c2 : by_size[static_cast<std::size_t>(b)]) {
            const TableauSum inner = hash_product(c1, c2, strategy);
            for (const Tableau& c3 : by_size[static_cast<std::size_t>(c)]) {
              const TableauSum lhs = hash_product_sum(inner, TableauSum(c3), strategy);
              const TableauSum rhs = hash_product_sum(TableauSum(c1), hash_product(c2, c3, strategy), strategy);
              ++report.triples;
              if (lhs != rhs) {
                ++report.failure_count;
                if (report.sample_failures.size() < keep_failures)
                  report.sample_failures.push_back({c1, c2, c3,
                                                    static_cast<std::int64_t>(lhs.term_count()),
                                                    static_cast<std::int64_t>(rhs.term_count())});
              }
            }
          }
      }
  return report;
}

struct HashComparisonReport {
  int max_total_size = 0;
  HashStrategyReport identity;
  HashStrategyReport shift;
};

inline HashComparisonReport compare_hash_strategies(int max_total) {
  HashComparisonReport report;
  report.max_total_size = max_total;
  report.identity = hash_associativity_sweep(max_total, EmbedStrategy::Identity);
  report.shift = hash_associativity_sweep(max_total, EmbedStrategy::ShiftRows);
  return report;
}

inline void to_json(json& j, const HashStrategyReport& r) {
  json failures = json::array();
  for (const auto& f : r.sample_failures)
    failures.push_back({{"c1", f.c1},
                        {"c2", f.c2},
                        {"c3", f.c3},
                        {"left_terms", f.left_terms},
                        {"right_terms", f.right_terms}});
  j = {{"strategy", strategy_name(r.strategy)},
       {"triples", r.triples},
       {"associativity_failures", r.failure_count},
       {"sample_failures", std::move(failures)}};
}

inline void to_json(json& j, const HashComparisonReport& r) {
  j = {{"max_total_size", r.max_total_size},
       {"strategies", json::array({r.identity, r.shift})}};
}

// --- JSON round-trips -----------------------------------------------------------

inline void check_json_roundtrip(CheckResult& r, int per_type, std::uint64_t seed) {
  TestRng rng(seed);
  auto require = [](bool ok, const char* what) {
    if (!ok) throw AssertionFailure(std::string("JSON round-trip failed for ") + what);
  };
  for (int i = 0; i < per_type; ++i) {
    const Permutation p = random_permutation(rng, rng.uniform(0, 9));
    require(json::parse(json(p).dump()).get<Permutation>() == p, "permutation");

    const BinaryTree t = random_tree(rng, rng.uniform(0, 8));
    require(json::parse(json(t).dump()).get<BinaryTree>() == t, "tree");

    const SignWord w = random_sign_word(rng, rng.uniform(0, 10));
    require(json::parse(json(w).dump()).get<SignWord>() == w, "sign word");

    const Tableau tab = random_tableau(rng, rng.uniform(0, 8));
    require(json::parse(json(tab).dump()).get<Tableau>() == tab, "tableau");

    PermSum ps;
    for (int k = 0; k < 3; ++k) ps.add(random_permutation(rng, rng.uniform(0, 6)), rng.uniform(1, 3));
    require(json::parse(json(ps).dump()).get<PermSum>() == ps, "permutation sum");

    TreeSum ts;
    for (int k = 0; k < 3; ++k) ts.add(random_tree(rng, rng.uniform(0, 6)), rng.uniform(1, 3));
    require(json::parse(json(ts).dump()).get<TreeSum>() == ts, "tree sum");

    TableauSum us;
    for (int k = 0; k < 3; ++k) us.add(random_tableau(rng, rng.uniform(0, 6)), rng.uniform(1, 3));
    require(json::parse(json(us).dump()).get<TableauSum>() == us, "tableau sum");
  }
  r.detail = std::to_string(per_type) + " objects per type";
}

}  // namespace lrcat
