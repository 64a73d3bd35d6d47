#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lrcat/errors.hpp"
#include "lrcat/tableau.hpp"

namespace lrcat {

// Placement of the right factor inside the concatenated shape.
//   Identity:  every step of C2 keeps its own position, offset by |C1|.
//   ShiftRows: C2's j-th row-step is re-mapped, order preserving, onto the
//              j-th row-step of the whole combined word; its column-steps
//              stay at their own offset positions.
// Identity is the default: with this library's validity orientation it is
// the variant whose product is associative (the suite checks this
// exhaustively), while ShiftRows fails associativity and is kept for
// comparison. reports/hash_strategy_comparison.json records the difference.
enum class EmbedStrategy { Identity, ShiftRows };

inline const char* strategy_name(EmbedStrategy s) {
  return s == EmbedStrategy::Identity ? "identity" : "shift";
}

inline EmbedStrategy parse_strategy(const std::string& name) {
  if (name == "identity") return EmbedStrategy::Identity;
  if (name == "shift") return EmbedStrategy::ShiftRows;
  throw InvalidArgumentError("unknown embedding strategy: " + name);
}

// Both factors' cells land in `fixed` with their dot-or-empty content
// (an empty source cell is pinned empty, it is not free); `free_cells`
// is the completion region.
struct Embedding {
  Shape combined;
  std::map<Cell, std::optional<Dot>> fixed;
  std::vector<Cell> free_cells;
};

inline Embedding embed(const Tableau& c1, const Tableau& c2,
                       EmbedStrategy strategy = EmbedStrategy::Identity) {
  const Shape& s1 = c1.shape();
  const Shape& s2 = c2.shape();
  const int m1 = s1.size();
  Embedding e;
  e.combined = s1 + s2;

  for (const Cell& cell : cells(s1)) e.fixed[cell] = c1.dot_at(cell);

  // image of the j-th row-step of s2 in the combined word
  std::vector<int> row_image;
  if (strategy == EmbedStrategy::Identity) {
    for (int p = 1; p <= s2.size(); ++p)
      if (s2.sign_at_position(p) == 1) row_image.push_back(p + m1);
  } else {
    int needed = 0;
    for (int p = 1; p <= s2.size(); ++p)
      if (s2.sign_at_position(p) == 1) ++needed;
    for (int p = 1; p <= e.combined.size() && static_cast<int>(row_image.size()) < needed; ++p)
      if (e.combined.sign_at_position(p) == 1) row_image.push_back(p);
  }
  std::vector<int> row_index(static_cast<std::size_t>(s2.size()) + 1, 0);
  {
    int j = 0;
    for (int p = 1; p <= s2.size(); ++p)
      if (s2.sign_at_position(p) == 1) row_index[static_cast<std::size_t>(p)] = j++;
  }
  for (const Cell& cell : cells(s2)) {
    const Cell image{row_image[static_cast<std::size_t>(row_index[static_cast<std::size_t>(cell.row)])],
                     cell.col + m1};
    e.fixed[image] = c2.dot_at(cell);
  }

  for (const Cell& cell : cells(e.combined))
    if (!e.fixed.contains(cell)) e.free_cells.push_back(cell);
  return e;
}

// Graded product on the span of tableaux: embed both factors, then sum over
// every dot assignment of the free cells that keeps the whole tableau valid.
// Sizes add; all coefficients are 1.
inline TableauSum hash_product(const Tableau& c1, const Tableau& c2,
                               EmbedStrategy strategy = EmbedStrategy::Identity) {
  if (!is_valid(c1) || !is_valid(c2))
    throw InvalidArgumentError("hash_product requires valid tableaux");
  const Embedding e = embed(c1, c2, strategy);
  TableauSum out;
  std::int64_t completions = 0;
  detail::for_each_valid_filling(e.combined, e.fixed, [&](const std::map<Cell, Dot>& dots) {
    out.add(Tableau(e.combined, dots), 1);
    ++completions;
  });
  if (completions != static_cast<std::int64_t>(out.term_count()))
    throw AssertionFailure("hash product produced colliding terms");
  return out;
}

// Bilinear extension.
inline TableauSum hash_product_sum(const TableauSum& a, const TableauSum& b,
                                   EmbedStrategy strategy = EmbedStrategy::Identity) {
  TableauSum out;
  for (const auto& [c1, x] : a.terms())
    for (const auto& [c2, y] : b.terms()) {
      TableauSum p = hash_product(c1, c2, strategy);
      const std::int64_t c = checked_mul(x, y);
      for (const auto& [t, cp] : p.terms()) out.add(t, checked_mul(cp, c));
    }
  return out;
}

}  // namespace lrcat
