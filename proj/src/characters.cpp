#include "qchar/characters.hpp"

#include "qchar/errors.hpp"

namespace qchar {

LaurentPoly kr_character(int n, int k) {
  if (n < 0) throw DomainError("kr_character: string length must be nonnegative");
  LaurentPoly out;
  for (int i = 0; i <= n; ++i) {
    std::vector<Monomial::Factor> factors;
    for (int j = 1; j <= n - i; ++j) factors.emplace_back(k + j - 1, 1);
    for (int j = 1; j <= i; ++j) factors.emplace_back(k + n - i + j, -1);
    out.add_term(Monomial::from_factors(std::move(factors)), 1);
  }
  return out;
}

bool t_system_holds(int n, int k) {
  if (n < 1) throw DomainError("t_system_holds: n must be positive");
  const LaurentPoly lhs = kr_character(n, k) * kr_character(n, k + 1);
  const LaurentPoly rhs = kr_character(n + 1, k) * kr_character(n - 1, k + 1) + LaurentPoly::one();
  return lhs == rhs;
}

LaurentPoly simple_character(const DrinfeldData& dd) {
  LaurentPoly out = LaurentPoly::one();
  const StringDecomposition strings = decompose(dd);
  for (const auto& [s, count] : strings.parts()) {
    out = out * kr_character(s.len, s.base).pow(static_cast<unsigned>(count));
  }
  return out;
}

LaurentPoly simple_character_piecewise(const DrinfeldData& dd) {
  LaurentPoly out = LaurentPoly::one();
  const StringDecomposition strings = decompose(dd);
  for (const auto& [s, count] : strings.parts()) {
    std::vector<Monomial::Factor> top;
    for (int x = s.base; x <= s.last(); ++x) top.emplace_back(x, 1);
    const Monomial highest = Monomial::from_factors(std::move(top));

    LaurentPoly factor = LaurentPoly::one();
    AFactorization tail;
    for (int x = s.last(); x >= s.base; --x) {
      tail[HalfPosition::after(x)] = 1;
      factor.add_term(a_inverse_monomial(tail), 1);
    }
    out = out * (LaurentPoly(highest) * factor).pow(static_cast<unsigned>(count));
  }
  return out;
}

LaurentPoly standard_character(const DrinfeldData& dd) {
  LaurentPoly out = LaurentPoly::one();
  for (const auto& [k, m] : dd.mult()) {
    out = out * kr_character(1, k).pow(static_cast<unsigned>(m));
  }
  return out;
}

LaurentPoly standard_character_geometric(const DrinfeldData& dd) {
  LaurentPoly out;
  if (dd.empty()) return LaurentPoly::one();
  const int lo = dd.min_exponent();
  const int n = dd.window();
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = dd.multiplicity(lo + i);
  const Monomial top = highest_monomial(dd);

  // Odometer over 0 <= v_i <= w_i. The fiber is a product of Grassmannians
  // Gr(v_i, w_i), whose Euler characteristic is prod_i C(w_i, v_i).
  std::vector<int> v(n, 0);
  while (true) {
    Coeff euler = 1;
    AFactorization lowering;
    for (int i = 0; i < n; ++i) {
      euler = checked_mul(euler, binomial(w[i], v[i]));
      if (v[i] > 0) lowering.emplace(HalfPosition::after(lo + i), v[i]);
    }
    out.add_term(top * a_inverse_monomial(lowering), euler);

    int pos = 0;
    while (pos < n && v[pos] == w[pos]) v[pos++] = 0;
    if (pos == n) break;
    ++v[pos];
  }
  return out;
}

std::vector<int> standard_ordering(const DrinfeldData& dd) {
  std::vector<int> out;
  out.reserve(dd.degree());
  for (auto it = dd.mult().rbegin(); it != dd.mult().rend(); ++it) {
    out.insert(out.end(), it->second, it->first);
  }
  return out;
}

Monomial highest_monomial(const DrinfeldData& dd) {
  std::vector<Monomial::Factor> factors(dd.mult().begin(), dd.mult().end());
  return Monomial::from_factors(std::move(factors));
}

DrinfeldData drinfeld_of(const Monomial& dominant) {
  if (!dominant.is_dominant()) throw DomainError("drinfeld_of: monomial is not dominant");
  std::map<int, int> mult(dominant.factors().begin(), dominant.factors().end());
  return DrinfeldData(std::move(mult));
}

}  // namespace qchar
