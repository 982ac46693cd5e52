#include <doctest.h>

#include <functional>

#include "qchar/errors.hpp"
#include "qchar/quiver_a.hpp"

using namespace qchar;

namespace {

// All rank tuples r with stratum(w, r) valid.
std::vector<std::vector<int>> all_rank_tuples(const std::vector<int>& w) {
  std::vector<std::vector<int>> out;
  const int n = static_cast<int>(w.size());
  if (n < 1) return out;
  std::vector<int> r(n - 1, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n - 1) {
      if (n == 1 || r[n - 2] <= w[n - 1]) out.push_back(r);
      return;
    }
    const int prev = i == 0 ? 0 : r[i - 1];
    for (int v = 0; prev + v <= w[i] && v <= w[i + 1]; ++v) {
      r[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

TEST_SUITE("quiver_a") {

TEST_CASE("euler_form") {
  CHECK(euler_form(std::vector<int>{1, 0}, std::vector<int>{1, 0}) == 1);
  CHECK(euler_form(std::vector<int>{1, 0}, std::vector<int>{0, 1}) == -1);
  CHECK(euler_form(std::vector<int>{1, 1}, std::vector<int>{1, 1}) == 1);
  CHECK_THROWS_AS(euler_form(std::vector<int>{1}, std::vector<int>{1, 0}), DomainError);
}

TEST_CASE("ext_dim") {
  CHECK(ext_dim({1, 1}, {2, 2}) == 1);
  CHECK(ext_dim({1, 2}, {1, 1}) == 0);
  CHECK(ext_dim({2, 2}, {1, 1}) == 0);
  for (int i = 1; i <= 5; ++i) {
    for (int j = i; j <= 5; ++j) CHECK(ext_dim({i, j}, {i, j}) == 0);
  }
}

TEST_CASE("hom_dim") {
  CHECK(hom_dim({1, 2}, {1, 1}) == 1);
  CHECK(hom_dim({1, 1}, {2, 2}) == 0);
  CHECK(hom_dim({1, 1}, {1, 2}) == 0);
  for (int i = 1; i <= 5; ++i) {
    for (int j = i; j <= 5; ++j) CHECK(hom_dim({i, j}, {i, j}) == 1);
  }
}

TEST_CASE("hom - ext = euler on all interval pairs, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i; j <= n; ++j) {
        for (int r = 1; r <= n; ++r) {
          for (int s = r; s <= n; ++s) {
            const Interval u{i, j};
            const Interval v{r, s};
            const int h = hom_dim(u, v);
            CHECK((h == 0 || h == 1));
            CHECK(h - ext_dim(u, v) == euler_form(u.dim(n), v.dim(n)));
          }
        }
      }
    }
  }
}

TEST_CASE("rigid_decomposition") {
  CHECK(rigid_decomposition(std::vector<int>{1, 1}) == std::map<Interval, int>{{{1, 2}, 1}});
  CHECK(rigid_decomposition(std::vector<int>{2, 1}) ==
        std::map<Interval, int>{{{1, 1}, 1}, {{1, 2}, 1}});
  CHECK(rigid_decomposition(std::vector<int>{0, 0, 0}).empty());
  CHECK(rigid_decomposition(std::vector<int>{1, 2, 1}) ==
        std::map<Interval, int>{{{1, 3}, 1}, {{2, 2}, 1}});
  CHECK_THROWS_AS(rigid_decomposition(std::vector<int>{1, -1}), DomainError);
}

TEST_CASE("interval_to_string") {
  CHECK(interval_to_string({1, 1}) == QString{1, 0});
  CHECK(interval_to_string({2, 4}, 5) == QString{3, 6});
}

TEST_CASE("stratum") {
  const ComplexStratum a = stratum({1, 3}, {1});
  CHECK(a.h() == std::vector<int>{0, 2});
  CHECK(a.omega() == std::set<int>{1});

  const ComplexStratum b = stratum({1, 1}, {1});
  CHECK(b.h() == std::vector<int>{0, 0});
  CHECK(b.omega().empty());

  CHECK_THROWS_WITH_AS(stratum({1, 0}, {1}), "not a rank tuple for w", DomainError);
  CHECK_THROWS_AS(stratum({1, 1}, {1, 0}), DomainError);
  CHECK_THROWS_AS(stratum({1, 1}, {-1}), DomainError);
}

TEST_CASE("is_sparse") {
  CHECK(is_sparse(std::set<int>{1}));
  CHECK_FALSE(is_sparse(std::set<int>{0, 1}));
  CHECK(is_sparse(std::set<int>{}));
  CHECK(is_sparse(std::set<int>{0, 2, 4}));
  CHECK(is_sparse(stratum({1, 3}, {1})));
  CHECK_FALSE(is_sparse(stratum({2, 2}, {1})));
}

TEST_CASE("degeneration_leq") {
  CHECK(degeneration_leq(std::vector<int>{0, 0}, std::vector<int>{1, 0}));
  CHECK_FALSE(degeneration_leq(std::vector<int>{1, 0}, std::vector<int>{0, 1}));
  CHECK(degeneration_leq(std::vector<int>{2, 1}, std::vector<int>{2, 1}));
  CHECK_THROWS_AS(degeneration_leq(std::vector<int>{0}, std::vector<int>{0, 0}), DomainError);
}

TEST_CASE("orbit_dim") {
  CHECK(orbit_dim(stratum({1, 1}, {1})) == 1);
  CHECK(orbit_dim(stratum({1, 2, 1}, {1, 1})) == 3);
  CHECK(orbit_dim(stratum({1, 3}, {1})) == 3);
  CHECK(orbit_dim(stratum({3, 1, 4}, {0, 0})) == 0);
  // Full rank map C^2 -> C^2 is an open GL_2 x GL_2 orbit in Hom, dim 4.
  CHECK(orbit_dim(stratum({2, 2}, {2})) == 4);
}

TEST_CASE("orbit_dim is strictly monotone along degeneration") {
  for (int n = 2; n <= 4; ++n) {
    std::vector<int> w(n, 0);
    // Odometer over 0 <= w_i <= 3.
    while (true) {
      const auto tuples = all_rank_tuples(w);
      for (const auto& r1 : tuples) {
        for (const auto& r2 : tuples) {
          if (r1 == r2 || !degeneration_leq(r1, r2)) continue;
          CHECK(orbit_dim(stratum(w, r1)) < orbit_dim(stratum(w, r2)));
        }
      }
      int pos = 0;
      while (pos < n && w[pos] == 3) w[pos++] = 0;
      if (pos == n) break;
      ++w[pos];
    }
  }
}

}  // TEST_SUITE
