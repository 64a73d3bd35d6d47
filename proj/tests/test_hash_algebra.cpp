#include <map>

#include "doctest.h"
#include "lrcat/hash_algebra.hpp"
#include "lrcat/verification.hpp"

using namespace lrcat;

namespace {

Tableau make(const std::string& shape, std::initializer_list<std::pair<Cell, Dot>> dots) {
  std::map<Cell, Dot> m;
  for (const auto& [c, d] : dots) m.emplace(c, d);
  return Tableau(SignWord::parse(shape), std::move(m));
}

TableauSum sum_of(std::initializer_list<Tableau> terms) {
  TableauSum s;
  for (const auto& t : terms) s.add(t, 1);
  return s;
}

const Tableau unit;  // the empty tableau

}  // namespace

TEST_CASE("embedding an empty left factor is trivial") {
  const Tableau c2 = make("+-", {{{1, 2}, Dot::Red}});
  for (EmbedStrategy strategy : {EmbedStrategy::Identity, EmbedStrategy::ShiftRows}) {
    const Embedding e = embed(unit, c2, strategy);
    CHECK(e.combined == c2.shape());
    CHECK(e.free_cells.empty());
    REQUIRE(e.fixed.size() == 1);
    CHECK(e.fixed.at({1, 2}) == Dot::Red);
  }
}

TEST_CASE("embedding with no source cells leaves everything free") {
  const Tableau c1(SignWord::parse("+"), {});
  const Tableau c2(SignWord::parse("-"), {});
  for (EmbedStrategy strategy : {EmbedStrategy::Identity, EmbedStrategy::ShiftRows}) {
    const Embedding e = embed(c1, c2, strategy);
    CHECK(e.combined == SignWord::parse("+-"));
    CHECK(e.fixed.empty());
    CHECK(e.free_cells == std::vector<Cell>{{1, 2}});
  }
}

TEST_CASE("the two embeddings place the right factor's row differently") {
  const Tableau c = make("+-", {{{1, 2}, Dot::Red}});

  const Embedding shift = embed(c, c, EmbedStrategy::ShiftRows);
  CHECK(shift.combined == SignWord::parse("+-+-"));
  REQUIRE(shift.fixed.size() == 2);
  CHECK(shift.fixed.at({1, 2}) == Dot::Red);
  CHECK(shift.fixed.at({1, 4}) == Dot::Red);
  CHECK(shift.free_cells == std::vector<Cell>{{3, 4}});

  const Embedding identity = embed(c, c, EmbedStrategy::Identity);
  CHECK(identity.combined == SignWord::parse("+-+-"));
  REQUIRE(identity.fixed.size() == 2);
  CHECK(identity.fixed.at({1, 2}) == Dot::Red);
  CHECK(identity.fixed.at({3, 4}) == Dot::Red);
  CHECK(identity.free_cells == std::vector<Cell>{{1, 4}});
}

TEST_CASE("empty source cells embed as pinned empty, not free") {
  const Tableau c1 = make("+--", {{{1, 2}, Dot::Blue}});  // cell (1,3) is empty
  const Embedding e = embed(c1, unit, EmbedStrategy::Identity);
  REQUIRE(e.fixed.size() == 2);
  CHECK(e.fixed.at({1, 2}) == Dot::Blue);
  CHECK(e.fixed.at({1, 3}) == std::nullopt);
  CHECK(e.free_cells.empty());
}

TEST_CASE("hash product unit") {
  const Tableau c = make("+-+-", {{{1, 2}, Dot::Red}, {{3, 4}, Dot::Red}});
  CHECK(hash_product(unit, c) == TableauSum(c));
  CHECK(hash_product(c, unit) == TableauSum(c));
  auto r = run_check("unit", [](CheckResult& cr) { check_hash_unit(cr, 4); });
  CHECK(r.ok);
}

TEST_CASE("hash product by example") {
  const Tableau plus(SignWord::parse("+"), {});
  const Tableau minus(SignWord::parse("-"), {});
  CHECK(hash_product(plus, minus) ==
        sum_of({make("+-", {{{1, 2}, Dot::Red}}), make("+-", {{{1, 2}, Dot::Blue}})}));

  // one completion only: the free cell is pinned empty by the red below it
  const Tableau c = make("+-", {{{1, 2}, Dot::Red}});
  CHECK(hash_product(c, c) ==
        TableauSum(make("+-+-", {{{1, 2}, Dot::Red}, {{3, 4}, Dot::Red}})));
  CHECK(hash_product(c, c, EmbedStrategy::ShiftRows) ==
        TableauSum(make("+-+-", {{{1, 2}, Dot::Red}, {{1, 4}, Dot::Red}, {{3, 4}, Dot::Blue}})));
}

TEST_CASE("hash product rejects invalid input") {
  CHECK_THROWS_AS(hash_product(make("+-", {}), unit), InvalidArgumentError);
}

TEST_CASE("bilinear extension") {
  const Tableau plus(SignWord::parse("+"), {});
  const Tableau minus(SignWord::parse("-"), {});
  CHECK(hash_product_sum(sum_of({plus, minus}), TableauSum()) == TableauSum());

  TableauSum scaled(plus, 3);
  TableauSum expected = hash_product(plus, minus);
  expected *= 3;
  CHECK(hash_product_sum(scaled, TableauSum(minus)) == expected);

  CHECK(hash_product_sum(sum_of({plus, minus}), TableauSum(minus)) ==
        hash_product(plus, minus) + hash_product(minus, minus));
}

TEST_CASE("grading, unit coefficients, and the preserved left block") {
  auto r = run_check("grading", [](CheckResult& cr) {
    check_hash_grading_and_blocks(cr, 5, EmbedStrategy::Identity);
  });
  CHECK(r.ok);
  INFO(r.detail);
}

TEST_CASE("identity embedding is associative, shift embedding is not") {
  const HashStrategyReport identity = hash_associativity_sweep(4, EmbedStrategy::Identity);
  CHECK(identity.failure_count == 0);

  // pinned counterexample for the shift embedding
  const Tableau a(SignWord::parse("+"), {});
  const Tableau b(SignWord::parse("+"), {});
  const Tableau c(SignWord::parse("-"), {});
  const TableauSum lhs =
      hash_product_sum(hash_product(a, b, EmbedStrategy::ShiftRows), TableauSum(c), EmbedStrategy::ShiftRows);
  const TableauSum rhs =
      hash_product_sum(TableauSum(a), hash_product(b, c, EmbedStrategy::ShiftRows), EmbedStrategy::ShiftRows);
  CHECK(lhs.term_count() == 3);
  CHECK(rhs.term_count() == 2);
  CHECK(lhs != rhs);

  const HashStrategyReport shift = hash_associativity_sweep(3, EmbedStrategy::ShiftRows);
  CHECK(shift.failure_count > 0);
}
