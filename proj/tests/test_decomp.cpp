#include <doctest.h>

#include "qchar/characters.hpp"
#include "qchar/decomp.hpp"
#include "qchar/errors.hpp"

using namespace qchar;

namespace {

DrinfeldData D(std::map<int, int> m) { return DrinfeldData(std::move(m)); }

MultiplicityQuery Q(std::vector<int> w, std::vector<int> h) {
  MultiplicityQuery q;
  q.w = std::move(w);
  q.h = std::move(h);
  return q;
}

}  // namespace

TEST_SUITE("decomp") {

TEST_CASE("MultiplicityQuery::align") {
  const auto q = MultiplicityQuery::align(D({{0, 1}, {1, 3}}), D({{1, 2}}));
  REQUIRE(q.has_value());
  CHECK(q->w == std::vector<int>{1, 3});
  CHECK(q->h == std::vector<int>{0, 2});

  const auto shifted = MultiplicityQuery::align(D({{5, 1}, {6, 3}}), D({{6, 2}}));
  REQUIRE(shifted.has_value());
  CHECK(shifted->w == q->w);
  CHECK(shifted->h == q->h);

  CHECK_FALSE(MultiplicityQuery::align(D({{0, 1}}), D({{1, 1}})).has_value());
  CHECK_FALSE(MultiplicityQuery::align(DrinfeldData{}, D({{0, 1}})).has_value());
  CHECK(MultiplicityQuery::align(DrinfeldData{}, DrinfeldData{})->n() == 0);
}

TEST_CASE("rank_tuple") {
  CHECK(rank_tuple(Q({1, 3}, {0, 2})) == std::vector<int>{1});
  CHECK(rank_tuple(Q({1, 1}, {1, 1})) == std::vector<int>{0});
  CHECK(rank_tuple(Q({2, 1, 3}, {2, 1, 3})) == std::vector<int>{0, 0});
  CHECK(rank_tuple(Q({1, 1}, {0, 0})) == std::vector<int>{1});
  // r_0 = 1 but then the last entry would need w_1 - h_1 = 0.
  CHECK_FALSE(rank_tuple(Q({1, 1}, {0, 1})).has_value());
  // h_0 > w_0.
  CHECK_FALSE(rank_tuple(Q({1, 1}, {2, 1})).has_value());
  CHECK(rank_tuple(Q({}, {})) == std::vector<int>{});
  CHECK(rank_tuple(Q({4}, {4})) == std::vector<int>{});
  CHECK_FALSE(rank_tuple(Q({4}, {2})).has_value());
  CHECK_THROWS_AS(rank_tuple(Q({1, 1}, {1})), DomainError);
}

TEST_CASE("multiplicity_closed") {
  CHECK(multiplicity_closed(D({{0, 1}, {1, 3}}), D({{1, 2}})).value == Coeff{1});
  CHECK(multiplicity_closed(D({{0, 1}, {1, 1}}), DrinfeldData{}).value == Coeff{1});
  CHECK(multiplicity_closed(D({{0, 2}, {2, 1}}), D({{0, 2}, {2, 1}})).value == Coeff{1});
  CHECK(multiplicity_closed(D({{0, 1}, {1, 2}, {2, 1}}), DrinfeldData{}).value == Coeff{2});
  // No rank tuple: zero.
  CHECK(multiplicity_closed(D({{0, 1}, {1, 1}}), D({{1, 1}})).value == Coeff{0});
  // Outside the window: zero.
  CHECK(multiplicity_closed(D({{0, 1}}), D({{3, 1}})).value == Coeff{0});
  // Omega = {0, 1} is not sparse.
  const ClosedMultiplicity na = multiplicity_closed(D({{0, 2}, {1, 2}}), D({{0, 1}, {1, 1}}));
  CHECK_FALSE(na.applicable());
}

TEST_CASE("ic_stalk_poly") {
  const ComplexStratum a = stratum({1, 2, 1}, {1, 1});
  CHECK(ic_stalk_poly({a, {1, 1}}) == TPoly({1, 1}));
  CHECK(ic_stalk_poly({a, {0, 0}}) == TPoly::one());
  CHECK(ic_stalk_poly({stratum({1, 3}, {1}), {1}}) == TPoly::one());
  CHECK(ic_stalk_poly({stratum({3, 0, 4}, {0, 0}), {0, 0}}) == TPoly::one());
  CHECK_THROWS_AS(ic_stalk_poly({stratum({3, 1, 4}, {0, 0}), {0, 0}}), DomainError);

  CHECK_THROWS_WITH_AS(ic_stalk_poly({stratum({2, 2}, {1}), {0}}), "not sparse", DomainError);
  CHECK_THROWS_WITH_AS(ic_stalk_poly({a, {2, 0}}), "invalid stalk point", DomainError);
  CHECK_THROWS_WITH_AS(ic_stalk_poly({a, {1}}), "invalid stalk point", DomainError);
  CHECK_THROWS_WITH_AS(ic_stalk_poly({a, {-1, 0}}), "invalid stalk point", DomainError);
}

TEST_CASE("ic_stalk_poly at k = r matches the closed multiplicity") {
  // w = (1,2,1), r = (1,1): h = 0, pitilde trivial.
  const TPoly p = ic_stalk_poly({stratum({1, 2, 1}, {1, 1}), {1, 1}});
  CHECK(tpoly_eval_one(p) == *multiplicity_closed(D({{0, 1}, {1, 2}, {2, 1}}), {}).value);
}

TEST_CASE("multiplicity_oracle") {
  CHECK(multiplicity_oracle(D({{0, 1}, {1, 3}}), D({{1, 2}})) == 1);
  CHECK(multiplicity_oracle(D({{0, 1}, {1, 1}}), D({{0, 1}, {1, 1}})) == 1);
  CHECK(multiplicity_oracle(D({{0, 1}, {1, 1}}), DrinfeldData{}) == 1);
  CHECK(multiplicity_oracle(D({{0, 1}, {1, 1}}), D({{1, 1}})) == 0);
  CHECK(multiplicity_oracle(D({{0, 2}, {1, 2}}), D({{0, 1}, {1, 1}})) == 2);
}

TEST_CASE("decomposition_row") {
  CHECK(decomposition_row(D({{0, 1}, {1, 1}})) ==
        DecompositionRow{{D({{0, 1}, {1, 1}}), 1}, {DrinfeldData{}, 1}});
  CHECK(decomposition_row(D({{0, 1}, {5, 1}})) == DecompositionRow{{D({{0, 1}, {5, 1}}), 1}});
  CHECK(decomposition_row(DrinfeldData{}) == DecompositionRow{{DrinfeldData{}, 1}});

  // Computed by hand: dimensions 2*1 + 3 + 3 + 8 = 16.
  CHECK(decomposition_row(D({{0, 1}, {1, 2}, {2, 1}})) ==
        DecompositionRow{{DrinfeldData{}, 2},
                         {D({{0, 1}, {1, 1}}), 1},
                         {D({{1, 1}, {2, 1}}), 1},
                         {D({{0, 1}, {1, 2}, {2, 1}}), 1}});
  CHECK(decomposition_row(D({{0, 2}, {1, 2}})) ==
        DecompositionRow{{DrinfeldData{}, 1},
                         {D({{0, 1}, {1, 1}}), 2},
                         {D({{0, 2}, {1, 2}}), 1}});
}

TEST_CASE("decomposition_row: tie-break invariance and bookkeeping") {
  const std::vector<DrinfeldData> samples = {
      D({{0, 1}, {1, 3}}), D({{0, 2}, {1, 1}, {2, 2}}), D({{0, 1}, {1, 1}, {2, 1}, {3, 1}}),
      D({{0, 3}, {3, 3}}), D({{0, 1}, {2, 2}, {3, 1}})};
  for (const DrinfeldData& pi : samples) {
    CAPTURE(pi.to_string());
    const DecompositionRow row = decomposition_row(pi);
    CHECK(row == decomposition_row(pi, {10, TieBreak::kLexLargest}));
    CHECK(row.at(pi) == 1);
    Coeff total = 0;
    for (const auto& [simple, mult] : row) {
      CHECK(mult > 0);
      total += mult * lp_dimension(simple_character(simple));
      CHECK(a_order_leq(highest_monomial(simple), highest_monomial(pi)));
    }
    CHECK(total == (Coeff{1} << pi.degree()));
  }
}

TEST_CASE("cap") {
  const DrinfeldData big = D({{0, 6}, {1, 5}});
  CHECK_THROWS_AS(decomposition_row(big), DomainError);
  CHECK_THROWS_AS(multiplicity_oracle(big, DrinfeldData{}), DomainError);
  CHECK_NOTHROW(decomposition_row(D({{0, 3}}), {3, TieBreak::kLexSmallest}));
  CHECK_THROWS_AS(decomposition_row(D({{0, 4}}), {3, TieBreak::kLexSmallest}), DomainError);
}

}  // TEST_SUITE
