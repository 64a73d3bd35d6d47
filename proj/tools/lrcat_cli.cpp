// Command-line surface for the tree/permutation/tableau algebra library.
// Exit codes: 0 success, 1 verification failure, 2 usage or input errors.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lrcat/canopy_lab.hpp"
#include "lrcat/hash_algebra.hpp"
#include "lrcat/json_io.hpp"
#include "lrcat/lr_algebra.hpp"
#include "lrcat/permutation.hpp"
#include "lrcat/tableau.hpp"
#include "lrcat/verification.hpp"

namespace {

using namespace lrcat;

std::string perm_fmt(const Permutation& p) { return p.to_string(); }

Tableau parse_tableau_arg(const std::string& text) {
  return json::parse(text).get<Tableau>();
}

BinaryTree parse_tree_arg(const std::string& text) {
  // accept both the parenthesis encoding and the JSON nested-array form
  if (!text.empty() && (text[0] == '[' || text[0] == 'n')) return json::parse(text).get<BinaryTree>();
  return decode_tree(text);
}

int run_verify(int census_max, int split_max, int closure_max, int assoc_max, int mr_max,
               int hash_max, int transpose_max, int roundtrip, std::uint64_t seed,
               const std::string& report_dir) {
  std::vector<CheckResult> results;
  auto add = [&](CheckResult r) {
    std::cout << (r.ok ? "ok   " : "FAIL ") << r.name;
    if (!r.detail.empty()) std::cout << ": " << r.detail;
    std::cout << " (" << static_cast<long long>(r.millis) << " ms)\n";
    results.push_back(std::move(r));
  };

  add(run_check("mr-structure", [&](CheckResult& r) { check_mr_structure(r, mr_max, mr_max + 2, 100, seed); }));
  add(run_check("mr-associativity",
                [&](CheckResult& r) { check_mr_associativity(r, mr_max, mr_max + 2, 30, seed); }));
  add(run_check("catalan-trees", [&](CheckResult& r) { check_catalan_trees(r, 11); }));
  add(run_check("tableau-totals", [&](CheckResult& r) { check_tableau_totals(r, 10); }));
  add(run_check("fiber-partition", [&](CheckResult& r) { check_fiber_partition(r, 7); }));
  add(run_check("canopy-constancy", [&](CheckResult& r) { check_canopy_constancy(r, 7); }));
  add(run_check("lr-closure", [&](CheckResult& r) { check_lr_closure(r, closure_max); }));
  add(run_check("lr-unit", [&](CheckResult& r) { check_lr_unit(r, 5); }));
  add(run_check("lr-associativity", [&](CheckResult& r) { check_lr_associativity(r, assoc_max); }));
  add(run_check("lr-differential", [&](CheckResult& r) { check_lr_differential(r, std::min(closure_max, 6)); }));
  add(run_check("census", [&](CheckResult& r) { check_census(r, census_max); }));
  add(run_check("canopy-splitting", [&](CheckResult& r) { check_canopy_splitting(r, split_max); }));
  add(run_check("transpose", [&](CheckResult& r) { check_transpose(r, transpose_max); }));
  add(run_check("hash-unit", [&](CheckResult& r) { check_hash_unit(r, 5); }));
  add(run_check("hash-grading", [&](CheckResult& r) {
    check_hash_grading_and_blocks(r, hash_max, EmbedStrategy::Identity);
  }));

  HashComparisonReport comparison;
  add(run_check("hash-associativity", [&](CheckResult& r) {
    comparison = compare_hash_strategies(hash_max);
    if (comparison.identity.failure_count != 0)
      throw AssertionFailure("default (identity) strategy failed associativity");
    r.detail = "identity " + std::to_string(comparison.identity.failure_count) + "/" +
               std::to_string(comparison.identity.triples) + " failures, shift " +
               std::to_string(comparison.shift.failure_count) + "/" +
               std::to_string(comparison.shift.triples) + " failures";
  }));
  add(run_check("json-roundtrip", [&](CheckResult& r) { check_json_roundtrip(r, roundtrip, seed); }));

  if (!report_dir.empty()) {
    std::filesystem::create_directories(report_dir);
    const auto dir = std::filesystem::path(report_dir);
    {
      std::ofstream out(dir / "hash_strategy_comparison.json");
      out << json(comparison).dump(2) << "\n";
    }
    {
      std::ofstream out(dir / "census.json");
      json arr = json::array();
      for (int n = 1; n <= census_max; ++n) arr.push_back(shape_census(n));
      out << arr.dump(2) << "\n";
    }
    {
      std::ofstream out(dir / "canopy_splitting.json");
      out << json(verify_canopy_splitting(split_max)).dump(2) << "\n";
    }
  }

  bool ok = true;
  for (const auto& r : results) ok = ok && r.ok;
  std::cout << (ok ? "all checks passed" : "CHECKS FAILED") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation with permutations, planar binary trees and Catalan alternative tableaux"};
  app.require_subcommand(1);
  std::string format = "text";

  // enumerate ----------------------------------------------------------------
  auto* enumerate = app.add_subcommand("enumerate", "List trees or tableaux of a given size");
  enumerate->require_subcommand(1);
  int enum_n = 0;
  bool count_only = false;
  std::string shape_text;

  auto* enum_trees = enumerate->add_subcommand("trees", "All planar binary trees with n internal nodes");
  enum_trees->add_option("n", enum_n, "number of internal nodes")->required();
  enum_trees->add_flag("--count", count_only, "print only the number of objects");
  enum_trees->add_option("--format", format, "text or json")->default_val("text");

  auto* enum_tabs = enumerate->add_subcommand("tableaux", "All valid tableaux of size m (or of one shape)");
  enum_tabs->add_option("m", enum_n, "tableau size (shape length)")->required();
  enum_tabs->add_flag("--count", count_only, "print only the number of objects");
  enum_tabs->add_option("--shape", shape_text, "restrict to one shape, e.g. +-+-");
  enum_tabs->add_option("--format", format, "text, json or ascii")->default_val("text");

  // product ------------------------------------------------------------------
  auto* product = app.add_subcommand("product", "Multiply two objects");
  product->require_subcommand(1);
  std::string lhs, rhs, strategy_text = "identity";

  auto* prod_mr = product->add_subcommand("mr", "Shuffle product of two permutations");
  prod_mr->add_option("sigma", lhs)->required();
  prod_mr->add_option("tau", rhs)->required();
  prod_mr->add_option("--format", format)->default_val("text");

  auto* prod_lr = product->add_subcommand("lr", "Product of two binary trees");
  prod_lr->add_option("t1", lhs, "tree, e.g. \"(.(..))\"")->required();
  prod_lr->add_option("t2", rhs)->required();
  prod_lr->add_option("--format", format)->default_val("text");

  auto* prod_hash = product->add_subcommand("hash", "# product of two tableaux (JSON inputs)");
  prod_hash->add_option("c1", lhs, "tableau JSON")->required();
  prod_hash->add_option("c2", rhs, "tableau JSON")->required();
  prod_hash->add_option("--strategy", strategy_text, "identity or shift")->default_val("identity");
  prod_hash->add_option("--format", format, "text, json or ascii")->default_val("text");

  // fiber / canopy / encode / decode ------------------------------------------
  std::string tree_text;
  auto* fiber_cmd = app.add_subcommand("fiber", "All permutations projecting to a tree");
  fiber_cmd->add_option("tree", tree_text)->required();
  fiber_cmd->add_option("--format", format)->default_val("text");

  auto* canopy_cmd = app.add_subcommand("canopy", "Canopy sign word of a tree");
  canopy_cmd->add_option("tree", tree_text)->required();

  auto* encode_cmd = app.add_subcommand("encode", "JSON tree (nested arrays) to parenthesis string");
  encode_cmd->add_option("tree", tree_text)->required();

  auto* decode_cmd = app.add_subcommand("decode", "Parenthesis string to JSON tree");
  decode_cmd->add_option("tree", tree_text)->required();

  // census ---------------------------------------------------------------------
  int census_n = 0;
  auto* census_cmd = app.add_subcommand("census", "Per-shape tree and tableau counts");
  census_cmd->add_option("n", census_n, "tree size (shapes have length n-1)")->required();
  census_cmd->add_option("--format", format)->default_val("text");

  // verify -----------------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "Run every verification suite; exit 1 on violation");
  int census_max = 10, split_max = 7, closure_max = 7, assoc_max = 7, mr_max = 6, hash_max = 6,
      transpose_max = 8, roundtrip = 1000;
  std::uint64_t seed = 20240814;
  std::string report_dir;
  verify_cmd->add_option("--census-max", census_max, "largest tree size for the census suite");
  verify_cmd->add_option("--split-max", split_max, "largest total size for canopy splitting");
  verify_cmd->add_option("--closure-max", closure_max, "largest total size for product closure");
  verify_cmd->add_option("--assoc-max", assoc_max, "largest total size for tree associativity");
  verify_cmd->add_option("--mr-max", mr_max, "largest exhaustive total size for permutation suites");
  verify_cmd->add_option("--hash-max", hash_max, "largest total size for # product suites");
  verify_cmd->add_option("--transpose-max", transpose_max, "largest tableau size for transpose suite");
  verify_cmd->add_option("--roundtrip", roundtrip, "random objects per type for JSON round-trips");
  verify_cmd->add_option("--seed", seed, "seed for the randomized suites");
  verify_cmd->add_option("--report-dir", report_dir, "write JSON reports into this directory");

  // explore ---------------------------------------------------------------------
  int explore_n = 0;
  auto* explore_cmd = app.add_subcommand("explore", "Constraint-propagation report on the tree/tableau correspondence");
  explore_cmd->add_option("n_max", explore_n, "largest tree size (<= 6)")->required();
  explore_cmd->add_option("--strategy", strategy_text, "identity or shift")->default_val("identity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (enum_trees->parsed()) {
      const auto trees = lrcat::enumerate_trees(enum_n);
      if (count_only) {
        std::cout << trees.size() << "\n";
      } else if (format == "json") {
        lrcat::json arr = lrcat::json::array();
        for (const auto& t : trees) arr.push_back(t);
        std::cout << arr.dump() << "\n";
      } else {
        for (const auto& t : trees) std::cout << lrcat::encode_tree(t) << "\n";
      }
      return 0;
    }
    if (enum_tabs->parsed()) {
      std::vector<lrcat::Tableau> tabs;
      if (!shape_text.empty()) {
        const lrcat::Shape shape = lrcat::SignWord::parse(shape_text);
        if (shape.size() != enum_n)
          throw lrcat::InvalidArgumentError("--shape length does not match the requested size");
        tabs = lrcat::enumerate_tableaux(shape);
      } else {
        tabs = lrcat::enumerate_all_tableaux(enum_n);
      }
      if (count_only) {
        std::cout << tabs.size() << "\n";
      } else if (format == "json") {
        lrcat::json arr = lrcat::json::array();
        for (const auto& t : tabs) arr.push_back(t);
        std::cout << arr.dump() << "\n";
      } else if (format == "ascii") {
        for (const auto& t : tabs) std::cout << t.to_string() << "\n" << lrcat::render_ascii(t) << "\n";
      } else {
        for (const auto& t : tabs) std::cout << t.to_string() << "\n";
      }
      return 0;
    }
    if (prod_mr->parsed()) {
      const auto p = lrcat::mr_product(lrcat::Permutation::parse(lhs), lrcat::Permutation::parse(rhs));
      if (format == "json")
        std::cout << lrcat::json(p).dump() << "\n";
      else
        std::cout << lrcat::to_string(p, perm_fmt) << "\n";
      return 0;
    }
    if (prod_lr->parsed()) {
      const auto p = lrcat::lr_product(parse_tree_arg(lhs), parse_tree_arg(rhs));
      if (format == "json")
        std::cout << lrcat::json(p).dump() << "\n";
      else
        std::cout << lrcat::to_string(p, [](const lrcat::BinaryTree& t) { return lrcat::encode_tree(t); })
                  << "\n";
      return 0;
    }
    if (prod_hash->parsed()) {
      const auto strategy = lrcat::parse_strategy(strategy_text);
      const auto p = lrcat::hash_product(parse_tableau_arg(lhs), parse_tableau_arg(rhs), strategy);
      if (format == "json") {
        std::cout << lrcat::json(p).dump() << "\n";
      } else if (format == "ascii") {
        for (const auto& [t, c] : p.terms())
          std::cout << t.to_string() << "\n" << lrcat::render_ascii(t) << "\n";
      } else {
        std::cout << lrcat::to_string(p, [](const lrcat::Tableau& t) { return t.to_string(); }) << "\n";
      }
      return 0;
    }
    if (fiber_cmd->parsed()) {
      const auto f = lrcat::fiber(parse_tree_arg(tree_text));
      if (format == "json") {
        lrcat::json perms = lrcat::json::array();
        for (const auto& p : f.perms) perms.push_back(p);
        std::cout << lrcat::json{{"tree", lrcat::encode_tree(f.tree)}, {"perms", perms}}.dump() << "\n";
      } else {
        for (const auto& p : f.perms) std::cout << p.to_string() << "\n";
      }
      return 0;
    }
    if (canopy_cmd->parsed()) {
      std::cout << lrcat::canopy(parse_tree_arg(tree_text)).to_string() << "\n";
      return 0;
    }
    if (encode_cmd->parsed()) {
      std::cout << lrcat::encode_tree(lrcat::json::parse(tree_text).get<lrcat::BinaryTree>()) << "\n";
      return 0;
    }
    if (decode_cmd->parsed()) {
      std::cout << lrcat::json(lrcat::decode_tree(tree_text)).dump() << "\n";
      return 0;
    }
    if (census_cmd->parsed()) {
      const auto c = lrcat::shape_census(census_n);
      if (format == "json") {
        std::cout << lrcat::json(c).dump() << "\n";
      } else {
        for (const auto& [shape, counts] : c.per_shape)
          std::cout << shape.to_string() << "  trees " << counts.first << "  tableaux " << counts.second
                    << "\n";
        std::cout << "total  trees " << c.total_trees() << "  tableaux " << c.total_tableaux() << "\n";
      }
      return c.all_equal() ? 0 : 1;
    }
    if (verify_cmd->parsed()) {
      return run_verify(census_max, split_max, closure_max, assoc_max, mr_max, hash_max, transpose_max,
                        roundtrip, seed, report_dir);
    }
    if (explore_cmd->parsed()) {
      const auto strategy = strategy_text == "shift" ? lrcat::RestrictionStrategy::ShiftRows
                                                     : lrcat::RestrictionStrategy::Identity;
      std::cout << lrcat::json(lrcat::explore_correspondence(explore_n, strategy)).dump(2) << "\n";
      return 0;
    }
  } catch (const lrcat::AssertionFailure& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const lrcat::ClosureViolationError& e) {
    std::cerr << "closure violation: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
