#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lrcat/errors.hpp"
#include "lrcat/formal_sum.hpp"
#include "lrcat/permutation.hpp"

namespace lrcat {

// A tableau shape is a sign word: +1 steps are row-steps, -1 steps are
// column-steps, read at positions 1..m.
using Shape = SignWord;

// Cells are addressed by step positions: row = position of a +1 step,
// col = position of a -1 step. The cell (row, col) exists iff row < col.
struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

enum class Dot : std::uint8_t { Red, Blue };

inline char dot_char(Dot d) { return d == Dot::Red ? 'R' : 'B'; }

// Cells of a shape in row-major order (rows by position, then columns).
inline std::vector<Cell> cells(const Shape& shape) {
  std::vector<Cell> out;
  const int m = shape.size();
  for (int r = 1; r <= m; ++r) {
    if (shape.sign_at_position(r) != 1) continue;
    for (int c = r + 1; c <= m; ++c)
      if (shape.sign_at_position(c) == -1) out.push_back({r, c});
  }
  return out;
}

// Shape plus red/blue dots. Construction is permissive: is_valid() decides
// whether the dot placement satisfies the tableau rules.
class Tableau {
 public:
  Tableau() = default;
  Tableau(Shape shape, std::map<Cell, Dot> dots)
      : shape_(std::move(shape)), dots_(std::move(dots)) {}

  const Shape& shape() const { return shape_; }
  const std::map<Cell, Dot>& dots() const { return dots_; }
  int size() const { return shape_.size(); }

  std::optional<Dot> dot_at(const Cell& cell) const {
    auto it = dots_.find(cell);
    if (it == dots_.end()) return std::nullopt;
    return it->second;
  }

  std::string to_string() const {
    std::string s = shape_.to_string();
    s += " {";
    bool first = true;
    for (const auto& [cell, dot] : dots_) {
      if (!first) s += ", ";
      first = false;
      s += dot_char(dot);
      s += "@(" + std::to_string(cell.row) + "," + std::to_string(cell.col) + ")";
    }
    s += "}";
    return s;
  }

  auto operator<=>(const Tableau&) const = default;

 private:
  Shape shape_;
  std::map<Cell, Dot> dots_;
};

using TableauSum = FormalSum<Tableau>;

// Validity rules, the fixed orientation of this library:
//   * a red dot at (r,c) excludes dots from the cells (r',c), r' < r, of its
//     column and covers the cells (r',c), r' <= r;
//   * a blue dot at (r,c) excludes dots from the cells (r,c'), c' > c, of its
//     row and covers the cells (r,c'), c' >= c;
//   * every cell must be covered (a dotted cell covers itself).
// Up to the global row/column mirror this is the unique orientation for
// which per-shape tableau counts equal per-canopy tree counts and for which
// transpose() preserves validity; both facts are enforced by the test suite.
inline bool is_valid(const Tableau& t) {
  const Shape& shape = t.shape();
  const int m = shape.size();
  for (const auto& [cell, dot] : t.dots()) {
    if (cell.row < 1 || cell.col > m || cell.row >= cell.col) return false;
    if (shape.sign_at_position(cell.row) != 1 || shape.sign_at_position(cell.col) != -1) return false;
  }
  for (const auto& [cell, dot] : t.dots()) {
    for (const auto& [other, od] : t.dots()) {
      if (other == cell) continue;
      if (dot == Dot::Red && other.col == cell.col && other.row < cell.row) return false;
      if (dot == Dot::Blue && other.row == cell.row && other.col > cell.col) return false;
    }
  }
  for (const Cell& cell : cells(shape)) {
    bool covered = false;
    for (const auto& [dc, dot] : t.dots()) {
      if (dot == Dot::Red && dc.col == cell.col && dc.row >= cell.row) covered = true;
      if (dot == Dot::Blue && dc.row == cell.row && dc.col <= cell.col) covered = true;
    }
    if (!covered) return false;
  }
  return true;
}

namespace detail {

// Backtracking core shared by tableau enumeration and the # product.
// Cells in `pinned` hold exactly the given content (a dot, or empty); every
// other cell ranges over {red, blue, empty}. Scanning rows bottom-up and each
// row left-to-right makes all rules local:
//   * a dot is legal iff there is no red below it in its column and no blue
//     before it in its row;
//   * an empty cell is covered iff one of those dots exists.
// At a non-pinned cell the two cases are exclusive, so the search never dead-
// ends: a "killed" cell is forced empty, any other cell branches red/blue.
template <class Sink>
void for_each_valid_filling(const Shape& shape,
                            const std::map<Cell, std::optional<Dot>>& pinned, Sink&& sink) {
  const int m = shape.size();
  std::vector<Cell> order;
  for (int r = m; r >= 1; --r) {
    if (shape.sign_at_position(r) != 1) continue;
    for (int c = r + 1; c <= m; ++c)
      if (shape.sign_at_position(c) == -1) order.push_back({r, c});
  }
  std::vector<char> red_below(static_cast<std::size_t>(m) + 1, 0);
  std::map<Cell, Dot> dots;

  auto rec = [&](auto&& self, std::size_t i, bool blue_in_row) -> void {
    if (i == order.size()) {
      sink(static_cast<const std::map<Cell, Dot>&>(dots));
      return;
    }
    const Cell cell = order[i];
    const bool row_continues = i + 1 < order.size() && order[i + 1].row == cell.row;
    const bool killed = red_below[static_cast<std::size_t>(cell.col)] || blue_in_row;

    auto descend = [&](std::optional<Dot> content) {
      const bool next_blue =
          row_continues && (blue_in_row || (content && *content == Dot::Blue));
      if (content) {
        dots.emplace(cell, *content);
        if (*content == Dot::Red) red_below[static_cast<std::size_t>(cell.col)] = 1;
        self(self, i + 1, next_blue);
        if (*content == Dot::Red) red_below[static_cast<std::size_t>(cell.col)] = 0;
        dots.erase(cell);
      } else {
        self(self, i + 1, next_blue);
      }
    };

    auto it = pinned.find(cell);
    if (it != pinned.end()) {
      if (it->second) {
        if (!killed) descend(it->second);  // a pinned dot in a killed cell: dead branch
      } else {
        if (killed) descend(std::nullopt);  // a pinned empty cell must be covered
      }
    } else if (killed) {
      descend(std::nullopt);
    } else {
      descend(Dot::Red);
      descend(Dot::Blue);
    }
  };
  rec(rec, 0, false);
}

}  // namespace detail

// All valid tableaux of the shape, sorted in the canonical (shape, dots) order.
inline std::vector<Tableau> enumerate_tableaux(const Shape& shape) {
  std::vector<Tableau> out;
  detail::for_each_valid_filling(shape, {}, [&](const std::map<Cell, Dot>& dots) {
    out.emplace_back(shape, dots);
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::int64_t count_tableaux(const Shape& shape) {
  std::int64_t n = 0;
  detail::for_each_valid_filling(shape, {}, [&](const std::map<Cell, Dot>&) { ++n; });
  return n;
}

// All shapes of length m in lexicographic order ('-' before '+').
inline std::vector<Shape> all_shapes(int m) {
  if (m < 0) throw InvalidArgumentError("shape length must be nonnegative");
  if (m > 62) throw InvalidArgumentError("shape length too large to enumerate");
  std::vector<Shape> out;
  out.reserve(static_cast<std::size_t>(1) << m);
  for (std::uint64_t mask = 0; mask < (static_cast<std::uint64_t>(1) << m); ++mask) {
    SignWord w;
    for (int i = 0; i < m; ++i) w.push_back((mask >> (m - 1 - i)) & 1 ? 1 : -1);
    out.push_back(std::move(w));
  }
  return out;
}

// Union over all 2^m shapes; the total count is the (m+1)-st Catalan number.
inline std::vector<Tableau> enumerate_all_tableaux(int m) {
  std::vector<Tableau> out;
  for (const Shape& s : all_shapes(m)) {
    std::vector<Tableau> part = enumerate_tableaux(s);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

// Mirror along the diagonal: shape reversed and negated, cell (r,c) sent to
// (m+1-c, m+1-r), colors swapped. An involution that preserves validity.
inline Tableau transpose(const Tableau& t) {
  const int m = t.size();
  std::map<Cell, Dot> dots;
  for (const auto& [cell, dot] : t.dots())
    dots.emplace(Cell{m + 1 - cell.col, m + 1 - cell.row},
                 dot == Dot::Red ? Dot::Blue : Dot::Red);
  return Tableau(t.shape().reversed_negated(), std::move(dots));
}

// Grid rendering: one line per row-step, one character column per
// column-step, both in step order; 'R'/'B' for dots, '.' for an empty cell,
// spaces outside the shape.
inline std::string render_ascii(const Tableau& t) {
  const Shape& shape = t.shape();
  const int m = shape.size();
  std::vector<int> col_index(static_cast<std::size_t>(m) + 1, -1);
  int ncols = 0;
  for (int c = 1; c <= m; ++c)
    if (shape.sign_at_position(c) == -1) col_index[static_cast<std::size_t>(c)] = ncols++;
  std::string out;
  for (int r = 1; r <= m; ++r) {
    if (shape.sign_at_position(r) != 1) continue;
    std::string line(static_cast<std::size_t>(ncols), ' ');
    for (int c = r + 1; c <= m; ++c) {
      if (shape.sign_at_position(c) != -1) continue;
      auto dot = t.dot_at({r, c});
      line[static_cast<std::size_t>(col_index[static_cast<std::size_t>(c)])] =
          dot ? dot_char(*dot) : '.';
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace lrcat
