#include <algorithm>
#include <map>
#include <vector>

#include "doctest.h"
#include "lrcat/tableau.hpp"
#include "lrcat/verification.hpp"

using namespace lrcat;

namespace {

Tableau make(const std::string& shape, std::initializer_list<std::pair<Cell, Dot>> dots) {
  std::map<Cell, Dot> m;
  for (const auto& [c, d] : dots) m.emplace(c, d);
  return Tableau(SignWord::parse(shape), std::move(m));
}

// Naive validity re-implementation: spell every rule out as a quantifier
// over dot pairs and cells, with the dotted-cell case handled separately.
bool naive_valid(const Tableau& t) {
  const auto cs = cells(t.shape());
  for (const auto& [cell, dot] : t.dots())
    if (std::find(cs.begin(), cs.end(), cell) == cs.end()) return false;
  for (const auto& [a, da] : t.dots())
    for (const auto& [b, db] : t.dots()) {
      if (a == b) continue;
      if (da == Dot::Red && b.col == a.col && b.row < a.row) return false;
      if (da == Dot::Blue && b.row == a.row && b.col > a.col) return false;
    }
  for (const Cell& cell : cs) {
    if (t.dots().contains(cell)) continue;
    bool covered = false;
    for (const auto& [d, dot] : t.dots()) {
      if (dot == Dot::Red && d.col == cell.col && d.row > cell.row) covered = true;
      if (dot == Dot::Blue && d.row == cell.row && d.col < cell.col) covered = true;
    }
    if (!covered) return false;
  }
  return true;
}

// Brute-force enumeration: all 3^cells assignments filtered by naive_valid.
std::vector<Tableau> brute_enumerate(const Shape& shape) {
  const auto cs = cells(shape);
  std::vector<Tableau> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < cs.size(); ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::map<Cell, Dot> dots;
    std::size_t c = code;
    for (const Cell& cell : cs) {
      switch (c % 3) {
        case 1: dots.emplace(cell, Dot::Red); break;
        case 2: dots.emplace(cell, Dot::Blue); break;
        default: break;
      }
      c /= 3;
    }
    Tableau t(shape, std::move(dots));
    if (naive_valid(t)) out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("cells of a shape") {
  CHECK(cells(SignWord::parse("+-")) == std::vector<Cell>{{1, 2}});
  CHECK(cells(SignWord::parse("-+")).empty());
  CHECK(cells(SignWord()).empty());
  CHECK(cells(SignWord::parse("+-+-")) == std::vector<Cell>{{1, 2}, {1, 4}, {3, 4}});
}

TEST_CASE("validity by example") {
  CHECK(is_valid(make("+-", {{{1, 2}, Dot::Red}})));
  CHECK(is_valid(make("+-", {{{1, 2}, Dot::Blue}})));
  CHECK_FALSE(is_valid(make("+-", {})));  // uncovered cell

  // blue excludes dots at later column-steps of its row
  CHECK_FALSE(is_valid(make("+--", {{{1, 2}, Dot::Blue}, {{1, 3}, Dot::Red}})));
  CHECK_FALSE(is_valid(make("+--", {{{1, 2}, Dot::Blue}, {{1, 3}, Dot::Blue}})));
  CHECK(is_valid(make("+--", {{{1, 2}, Dot::Red}, {{1, 3}, Dot::Blue}})));

  // red excludes dots at earlier row-steps of its column
  CHECK_FALSE(is_valid(make("++-", {{{1, 3}, Dot::Red}, {{2, 3}, Dot::Red}})));
  CHECK_FALSE(is_valid(make("++-", {{{1, 3}, Dot::Blue}, {{2, 3}, Dot::Red}})));
  CHECK(is_valid(make("++-", {{{1, 3}, Dot::Red}, {{2, 3}, Dot::Blue}})));

  // dots must sit on cells of the shape
  CHECK_FALSE(is_valid(make("+-", {{{2, 1}, Dot::Red}})));
  CHECK_FALSE(is_valid(make("-+", {{{1, 2}, Dot::Red}})));
}

TEST_CASE("exact valid sets for three-step shapes") {
  CHECK(enumerate_tableaux(SignWord::parse("+--")) ==
        std::vector<Tableau>{make("+--", {{{1, 2}, Dot::Red}, {{1, 3}, Dot::Red}}),
                             make("+--", {{{1, 2}, Dot::Red}, {{1, 3}, Dot::Blue}}),
                             make("+--", {{{1, 2}, Dot::Blue}})});
  CHECK(enumerate_tableaux(SignWord::parse("++-")) ==
        std::vector<Tableau>{make("++-", {{{1, 3}, Dot::Red}, {{2, 3}, Dot::Blue}}),
                             make("++-", {{{1, 3}, Dot::Blue}, {{2, 3}, Dot::Blue}}),
                             make("++-", {{{2, 3}, Dot::Red}})});
}

TEST_CASE("enumeration by example") {
  CHECK(enumerate_tableaux(SignWord::parse("+-")).size() == 2);
  CHECK(enumerate_tableaux(SignWord::parse("-+")).size() == 1);
  CHECK(enumerate_tableaux(SignWord::parse("+-+-")).size() == 5);
  CHECK(enumerate_all_tableaux(0).size() == 1);
  CHECK(enumerate_all_tableaux(2).size() == 5);
  CHECK(enumerate_all_tableaux(4).size() == 42);
}

TEST_CASE("enumeration matches the brute-force oracle") {
  for (int m = 0; m <= 5; ++m)
    for (const Shape& s : all_shapes(m)) {
      CHECK(enumerate_tableaux(s) == brute_enumerate(s));
      CHECK(count_tableaux(s) == static_cast<std::int64_t>(brute_enumerate(s).size()));
    }
}

TEST_CASE("validity checker agrees with the naive one on random placements") {
  TestRng rng(23);
  for (int i = 0; i < 400; ++i) {
    const Shape s = random_sign_word(rng, rng.uniform(0, 7));
    const auto cs = cells(s);
    std::map<Cell, Dot> dots;
    for (const Cell& c : cs) {
      switch (rng.uniform(0, 2)) {
        case 1: dots.emplace(c, Dot::Red); break;
        case 2: dots.emplace(c, Dot::Blue); break;
        default: break;
      }
    }
    const Tableau t(s, std::move(dots));
    CHECK(is_valid(t) == naive_valid(t));
  }
  for (int i = 0; i < 200; ++i) {
    const Tableau t = random_tableau(rng, rng.uniform(0, 8));
    CHECK(is_valid(t));
    CHECK(naive_valid(t));
  }
}

TEST_CASE("transpose") {
  CHECK(transpose(Tableau()) == Tableau());
  CHECK(transpose(make("+-", {{{1, 2}, Dot::Red}})) == make("+-", {{{1, 2}, Dot::Blue}}));
  CHECK(transpose(make("+--", {{{1, 2}, Dot::Blue}})) == make("++-", {{{2, 3}, Dot::Red}}));

  for (int m = 0; m <= 5; ++m)
    for (const Tableau& t : enumerate_all_tableaux(m)) {
      const Tableau tt = transpose(t);
      CHECK(is_valid(tt));
      CHECK(transpose(tt) == t);
    }
}

TEST_CASE("per-shape counts are preserved by the mirror") {
  for (int m = 0; m <= 6; ++m)
    for (const Shape& s : all_shapes(m))
      CHECK(count_tableaux(s) == count_tableaux(s.reversed_negated()));
}

TEST_CASE("ascii rendering") {
  CHECK(render_ascii(make("+-", {{{1, 2}, Dot::Red}})) == "R\n");
  CHECK(render_ascii(make("+-+-", {{{1, 2}, Dot::Red}, {{3, 4}, Dot::Red}})) == "R.\n R\n");
  CHECK(render_ascii(Tableau()) == "");
}
