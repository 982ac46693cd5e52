#include <doctest.h>

#include "qchar/characters.hpp"
#include "qchar/errors.hpp"

using namespace qchar;

namespace {

Monomial Y(int k, int e = 1) { return Monomial::y(k, e); }
LaurentPoly P(const Monomial& m, Coeff c = 1) { return LaurentPoly(m, c); }
DrinfeldData D(std::map<int, int> m) { return DrinfeldData(std::move(m)); }

// Every DrinfeldData with support in [0, window) and degree <= maxdeg.
std::vector<DrinfeldData> grid(int window, int maxdeg) {
  std::vector<DrinfeldData> out;
  std::vector<int> w(window, 0);
  while (true) {
    int deg = 0;
    for (int v : w) deg += v;
    if (deg <= maxdeg) {
      std::map<int, int> m;
      for (int i = 0; i < window; ++i) {
        if (w[i] > 0) m[i] = w[i];
      }
      out.emplace_back(std::move(m));
    }
    int pos = 0;
    while (pos < window && w[pos] == maxdeg) w[pos++] = 0;
    if (pos == window) break;
    ++w[pos];
  }
  return out;
}

}  // namespace

TEST_SUITE("characters") {

TEST_CASE("kr_character") {
  CHECK(kr_character(1, 0) == P(Y(0)) + P(Y(1, -1)));
  CHECK(kr_character(2, 0) == P(Y(0) * Y(1)) + P(Y(0) * Y(2, -1)) + P(Y(1, -1) * Y(2, -1)));
  CHECK(kr_character(0, 7) == LaurentPoly::one());
  CHECK(kr_character(KRLabel{1, 3}) == P(Y(3)) + P(Y(4, -1)));
  CHECK_THROWS_AS(kr_character(-1, 0), DomainError);
}

TEST_CASE("kr_character shape") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = -3; k <= 3; ++k) {
      const LaurentPoly chi = kr_character(n, k);
      CHECK(lp_dimension(chi) == n + 1);
      CHECK(chi.size() == static_cast<std::size_t>(n + 1));
      const auto dom = dominant_monomials(chi);
      REQUIRE(dom.size() == 1);
      std::vector<Monomial::Factor> top;
      for (int j = 0; j < n; ++j) top.emplace_back(k + j, 1);
      CHECK(dom[0].first == Monomial::from_factors(top));
      CHECK(dom[0].second == 1);
    }
  }
}

TEST_CASE("t_system_holds") {
  CHECK(t_system_holds(1, 0));
  CHECK(t_system_holds(3, -2));
  CHECK(t_system_holds(5, 4));
  for (int n = 1; n <= 5; ++n) {
    for (int k = -4; k <= 4; ++k) CHECK(t_system_holds(n, k));
  }
  CHECK_THROWS_AS(t_system_holds(0, 0), DomainError);
}

TEST_CASE("simple_character") {
  CHECK(simple_character(D({{0, 1}})) == P(Y(0)) + P(Y(1, -1)));
  CHECK(simple_character(D({{0, 1}, {1, 1}})) == kr_character(2, 0));
  CHECK(simple_character(D({{1, 2}})) == (P(Y(1)) + P(Y(2, -1))).pow(2));
  CHECK(simple_character(DrinfeldData{}) == LaurentPoly::one());
}

TEST_CASE("standard_character") {
  CHECK(standard_character(D({{0, 1}, {1, 1}})) ==
        P(Y(0) * Y(1)) + LaurentPoly::one() + P(Y(0) * Y(2, -1)) + P(Y(1, -1) * Y(2, -1)));
  CHECK(standard_character(DrinfeldData{}) == LaurentPoly::one());
  CHECK(standard_character(D({{0, 1}, {5, 1}})) == simple_character(D({{0, 1}, {5, 1}})));
}

TEST_CASE("standard_character_geometric") {
  CHECK(standard_character_geometric(D({{0, 1}})) == P(Y(0)) + P(Y(1, -1)));
  CHECK(standard_character_geometric(D({{0, 1}, {1, 1}})) ==
        standard_character(D({{0, 1}, {1, 1}})));
  CHECK(standard_character_geometric(D({{0, 2}})) == (P(Y(0)) + P(Y(1, -1))).pow(2));
  CHECK(standard_character_geometric(DrinfeldData{}) == LaurentPoly::one());
}

TEST_CASE("standard character: product form = geometric form, dimension 2^deg") {
  for (const DrinfeldData& dd : grid(4, 8)) {
    CAPTURE(dd.to_string());
    const LaurentPoly chi = standard_character(dd);
    CHECK(chi == standard_character_geometric(dd));
    CHECK(lp_dimension(chi) == (Coeff{1} << dd.degree()));
  }
}

TEST_CASE("piecewise simple character agrees with the KR product") {
  for (const DrinfeldData& dd : grid(4, 5)) {
    CAPTURE(dd.to_string());
    CHECK(simple_character_piecewise(dd) == simple_character(dd));
  }
}

TEST_CASE("simple character has a unique top") {
  for (const DrinfeldData& dd : grid(4, 5)) {
    CAPTURE(dd.to_string());
    const LaurentPoly chi = simple_character(dd);
    const Monomial top = highest_monomial(dd);
    CHECK(chi.coefficient(top) == 1);
    for (const auto& [m, c] : chi.terms()) {
      CHECK(c > 0);
      CHECK(a_inverse_factorization(m, top).has_value());
    }
  }
}

TEST_CASE("standard_ordering") {
  CHECK(standard_ordering(D({{0, 1}, {1, 1}})) == std::vector<int>{1, 0});
  CHECK(standard_ordering(D({{3, 2}})) == std::vector<int>{3, 3});
  CHECK(standard_ordering(DrinfeldData{}).empty());
  CHECK(standard_ordering(D({{-1, 1}, {2, 2}})) == std::vector<int>{2, 2, -1});
}

TEST_CASE("highest_monomial and drinfeld_of") {
  CHECK(highest_monomial(D({{0, 1}, {1, 3}})) == Y(0) * Y(1, 3));
  CHECK(highest_monomial(DrinfeldData{}).is_one());
  CHECK(highest_monomial(D({{2, 1}})) == Y(2));
  CHECK(drinfeld_of(Y(0) * Y(1, 3)) == D({{0, 1}, {1, 3}}));
  CHECK(drinfeld_of(Monomial{}).empty());
  CHECK_THROWS_AS(drinfeld_of(Y(0, -1)), DomainError);
}

}  // TEST_SUITE
