#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "lrcat/binary_tree.hpp"
#include "lrcat/canopy_lab.hpp"
#include "lrcat/hash_algebra.hpp"
#include "lrcat/lr_algebra.hpp"
#include "lrcat/permutation.hpp"
#include "lrcat/tableau.hpp"

namespace lrcat {

using nlohmann::json;

// SignWord <-> [1,-1,...]
inline void to_json(json& j, const SignWord& w) { j = w.as_ints(); }
inline void from_json(const json& j, SignWord& w) { w = SignWord(j.get<std::vector<int>>()); }

// Permutation <-> [2,1,4,3]
inline void to_json(json& j, const Permutation& p) { j = p.word(); }
inline void from_json(const json& j, Permutation& p) { p = Permutation(j.get<std::vector<int>>()); }

// BinaryTree <-> nested arrays, leaf = null, node = [left, right]
inline void to_json(json& j, const BinaryTree& t) {
  if (t.is_leaf()) {
    j = nullptr;
  } else {
    json l, r;
    to_json(l, t.left());
    to_json(r, t.right());
    j = json::array({std::move(l), std::move(r)});
  }
}
inline void from_json(const json& j, BinaryTree& t) {
  if (j.is_null()) {
    t = BinaryTree::leaf();
    return;
  }
  if (!j.is_array() || j.size() != 2)
    throw InvalidArgumentError("tree JSON must be null or a [left, right] pair");
  BinaryTree l, r;
  from_json(j[0], l);
  from_json(j[1], r);
  t = BinaryTree::node(std::move(l), std::move(r));
}

// Tableau <-> {"shape":[1,-1], "dots":[{"row":1,"col":2,"color":"R"}]}
inline void to_json(json& j, const Tableau& t) {
  json dots = json::array();
  for (const auto& [cell, dot] : t.dots())
    dots.push_back({{"row", cell.row}, {"col", cell.col}, {"color", std::string(1, dot_char(dot))}});
  j = {{"shape", t.shape()}, {"dots", std::move(dots)}};
}
inline void from_json(const json& j, Tableau& t) {
  Shape shape = j.at("shape").get<Shape>();
  std::map<Cell, Dot> dots;
  for (const auto& d : j.at("dots")) {
    const std::string color = d.at("color").get<std::string>();
    if (color != "R" && color != "B")
      throw InvalidArgumentError("dot color must be \"R\" or \"B\"");
    Cell cell{d.at("row").get<int>(), d.at("col").get<int>()};
    if (!dots.emplace(cell, color == "R" ? Dot::Red : Dot::Blue).second)
      throw InvalidArgumentError("repeated cell in tableau dots");
  }
  t = Tableau(std::move(shape), std::move(dots));
}

// Sums: {"terms":[{<key>: ..., "coeff": c}, ...]}, terms in canonical order.
// Trees are written in their string encoding inside sums.
inline void to_json(json& j, const PermSum& s) {
  json terms = json::array();
  for (const auto& [p, c] : s.terms()) terms.push_back({{"perm", p}, {"coeff", c}});
  j = {{"terms", std::move(terms)}};
}
inline void from_json(const json& j, PermSum& s) {
  s = PermSum();
  for (const auto& t : j.at("terms")) s.add(t.at("perm").get<Permutation>(), t.at("coeff").get<std::int64_t>());
}

inline void to_json(json& j, const TreeSum& s) {
  json terms = json::array();
  for (const auto& [t, c] : s.terms()) terms.push_back({{"tree", encode_tree(t)}, {"coeff", c}});
  j = {{"terms", std::move(terms)}};
}
inline void from_json(const json& j, TreeSum& s) {
  s = TreeSum();
  for (const auto& t : j.at("terms"))
    s.add(decode_tree(t.at("tree").get<std::string>()), t.at("coeff").get<std::int64_t>());
}

inline void to_json(json& j, const TableauSum& s) {
  json terms = json::array();
  for (const auto& [t, c] : s.terms()) terms.push_back({{"tableau", t}, {"coeff", c}});
  j = {{"terms", std::move(terms)}};
}
inline void from_json(const json& j, TableauSum& s) {
  s = TableauSum();
  for (const auto& t : j.at("terms"))
    s.add(t.at("tableau").get<Tableau>(), t.at("coeff").get<std::int64_t>());
}

inline void to_json(json& j, const ShapeCensus& c) {
  json shapes = json::array();
  for (const auto& [shape, counts] : c.per_shape)
    shapes.push_back({{"shape", shape}, {"trees", counts.first}, {"tableaux", counts.second}});
  j = {{"n", c.n},
       {"shapes", std::move(shapes)},
       {"total_trees", c.total_trees()},
       {"total_tableaux", c.total_tableaux()}};
}
inline void from_json(const json& j, ShapeCensus& c) {
  c = ShapeCensus();
  c.n = j.at("n").get<int>();
  for (const auto& s : j.at("shapes"))
    c.per_shape[s.at("shape").get<SignWord>()] = {s.at("trees").get<std::int64_t>(),
                                                  s.at("tableaux").get<std::int64_t>()};
}

inline void to_json(json& j, const SplitReport& r) {
  json records = json::array();
  for (const auto& rec : r.records)
    records.push_back({{"t1", encode_tree(rec.t1)},
                       {"t2", encode_tree(rec.t2)},
                       {"up",
                        {{"shape", rec.up.shape},
                         {"class_size", rec.up.class_size},
                         {"tableau_count", rec.up.tableau_count}}},
                       {"down",
                        {{"shape", rec.down.shape},
                         {"class_size", rec.down.class_size},
                         {"tableau_count", rec.down.tableau_count}}}});
  j = {{"n_max", r.n_max}, {"pairs", r.pairs}, {"records", std::move(records)}};
}

inline void to_json(json& j, const MatchReport& r) {
  json shapes = json::array();
  for (const auto& f : r.shapes) {
    json cands = json::array();
    for (const auto& c : f.candidates) {
      json options = json::array();
      for (const auto& t : c.options) options.push_back(t);
      cands.push_back({{"tree", encode_tree(c.tree)}, {"options", std::move(options)}});
    }
    shapes.push_back({{"shape", f.shape},
                      {"tree_count", f.tree_count},
                      {"tableau_count", f.tableau_count},
                      {"status", f.status},
                      {"candidates", std::move(cands)}});
  }
  json contradictions = json::array();
  for (const auto& c : r.contradictions)
    contradictions.push_back({{"t1", encode_tree(c.t1)},
                              {"t2", encode_tree(c.t2)},
                              {"connector", c.connector},
                              {"shape", c.shape},
                              {"class_size", c.class_size},
                              {"compatible_tableaux", c.compatible_tableaux},
                              {"detail", c.detail}});
  j = {{"n_max", r.n_max},
       {"strategy", strategy_name(r.strategy)},
       {"pairs_examined", r.pairs_examined},
       {"constraints_applied", r.constraints_applied},
       {"shapes", std::move(shapes)},
       {"contradictions", std::move(contradictions)}};
}

}  // namespace lrcat
