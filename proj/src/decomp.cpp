#include "qchar/decomp.hpp"

#include "qchar/characters.hpp"
#include "qchar/errors.hpp"

namespace qchar {

std::optional<MultiplicityQuery> MultiplicityQuery::align(const DrinfeldData& pi,
                                                          const DrinfeldData& pitilde) {
  MultiplicityQuery q;
  if (pi.empty()) {
    if (!pitilde.empty()) return std::nullopt;
    return q;
  }
  const int lo = pi.min_exponent();
  const int n = pi.window();
  for (const auto& [k, m] : pitilde.mult()) {
    if (k < lo || k >= lo + n) return std::nullopt;
  }
  q.w.resize(n);
  q.h.resize(n);
  for (int i = 0; i < n; ++i) {
    q.w[i] = pi.multiplicity(lo + i);
    q.h[i] = pitilde.multiplicity(lo + i);
  }
  return q;
}

std::optional<std::vector<int>> rank_tuple(const MultiplicityQuery& q) {
  if (q.w.size() != q.h.size()) throw DomainError("rank_tuple: w and h differ in length");
  const int n = q.n();
  for (int i = 0; i < n; ++i) {
    if (q.w[i] < 0 || q.h[i] < 0) throw DomainError("rank_tuple: negative exponent data");
  }
  std::vector<int> r;
  if (n == 0) return r;
  // Alternating sum, computed as r_i = (w_i - h_i) - r_{i-1}.
  int prev = 0;
  for (int i = 0; i + 1 < n; ++i) {
    const int ri = q.w[i] - q.h[i] - prev;
    if (ri < 0) return std::nullopt;
    r.push_back(ri);
    prev = ri;
  }
  if (prev != q.w[n - 1] - q.h[n - 1]) return std::nullopt;
  return r;
}

namespace {

// Visits every tuple (a_i)_{i in idx} with 0 <= a_i <= bound[i].
template <typename Fn>
void for_each_tuple(const std::vector<int>& bounds, Fn&& fn) {
  std::vector<int> a(bounds.size(), 0);
  while (true) {
    fn(a);
    std::size_t pos = 0;
    while (pos < a.size() && a[pos] == bounds[pos]) a[pos++] = 0;
    if (pos == a.size()) return;
    ++a[pos];
  }
}

}  // namespace

ClosedMultiplicity multiplicity_closed(const MultiplicityQuery& q) {
  const auto r = rank_tuple(q);
  if (!r) return {Coeff{0}};
  const ComplexStratum s(q.w, *r);
  if (!is_sparse(s)) return {};

  const std::vector<int> omega(s.omega().begin(), s.omega().end());
  std::vector<int> bounds;
  for (int i : omega) bounds.push_back(std::min(s.rank(i - 1), s.rank(i)));

  Coeff outside = 1;
  for (int i = 0; i < s.n(); ++i) {
    if (s.omega().contains(i)) continue;
    outside = checked_mul(outside, binomial(s.rank(i - 1) + s.rank(i), s.rank(i)));
  }

  Coeff sum = 0;
  for_each_tuple(bounds, [&](const std::vector<int>& a) {
    Coeff term = outside;
    for (std::size_t x = 0; x < omega.size(); ++x) {
      const int i = omega[x];
      term = checked_mul(term, binomial(s.rank(i), s.rank(i) - a[x]));
      term = checked_mul(term, binomial(s.rank(i - 1), a[x]));
    }
    sum = checked_add(sum, term);
  });
  return {sum};
}

ClosedMultiplicity multiplicity_closed(const DrinfeldData& pi, const DrinfeldData& pitilde) {
  const auto q = MultiplicityQuery::align(pi, pitilde);
  if (!q) return {Coeff{0}};
  return multiplicity_closed(*q);
}

TPoly ic_stalk_poly(const StalkQuery& query) {
  const ComplexStratum& s = query.stratum;
  if (!is_sparse(s)) throw DomainError("not sparse");
  const auto& k = query.k;
  if (k.size() != s.r().size()) throw DomainError("invalid stalk point");
  std::vector<int> lower(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] < 0 || k[i] > s.r()[i]) throw DomainError("invalid stalk point");
    lower[i] = s.r()[i] - k[i];
  }
  (void)ComplexStratum(s.w(), lower);

  auto kk = [&](int i) { return (i < 0 || i >= static_cast<int>(k.size())) ? 0 : k[i]; };

  const std::vector<int> omega(s.omega().begin(), s.omega().end());
  std::vector<int> bounds;
  for (int i : omega) bounds.push_back(std::min(kk(i - 1), kk(i)));

  TPoly outside = TPoly::one();
  for (int i = 0; i < s.n(); ++i) {
    if (s.omega().contains(i)) continue;
    outside = outside * gauss_binom_t(kk(i - 1) + kk(i), kk(i));
  }

  TPoly sum;
  for_each_tuple(bounds, [&](const std::vector<int>& a) {
    long shift = 0;
    TPoly term = outside;
    for (std::size_t x = 0; x < omega.size(); ++x) {
      const int i = omega[x];
      shift += static_cast<long>(s.h()[i] + a[x]) * a[x];
      term = term * gauss_binom_t(kk(i), kk(i) - a[x]) * gauss_binom_t(kk(i - 1), a[x]);
    }
    sum += TPoly::monomial(static_cast<unsigned>(shift)) * term;
  });
  return sum;
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

// Dominant monomials of chi that are maximal for the A^{-1} order among the
// dominant monomials present; canonical order preserved.
std::vector<std::pair<Monomial, Coeff>> maximal_dominant(const LaurentPoly& chi) {
  const auto dom = dominant_monomials(chi);
  std::vector<std::pair<Monomial, Coeff>> out;
  for (const auto& cand : dom) {
    bool maximal = true;
    for (const auto& other : dom) {
      if (other.first != cand.first && a_order_leq(cand.first, other.first)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(cand);
  }
  return out;
}

}  // namespace

DecompositionRow decomposition_row(const DrinfeldData& pi, const OracleOptions& opts) {
  if (pi.degree() > opts.cap) {
    throw DomainError("decomposition_row: total multiplicity " + std::to_string(pi.degree()) +
                      " exceeds cap " + std::to_string(opts.cap));
  }
  LaurentPoly chi = standard_character(pi);
  const std::size_t budget = dominant_monomials(chi).size();
  DecompositionRow row;
  std::size_t steps = 0;
  while (!chi.is_zero()) {
    const auto tops = maximal_dominant(chi);
    if (tops.empty()) {
      throw InvariantError("elimination: remainder has no dominant monomial");
    }
    const auto& [m, c] = opts.tie_break == TieBreak::kLexSmallest ? tops.front() : tops.back();
    if (c <= 0) {
      throw InvariantError("elimination: leading coefficient " + std::to_string(c) +
                           " is not positive");
    }
    if (++steps > budget) {
      throw InvariantError("elimination: more steps than dominant monomials in M(pi)");
    }
    const DrinfeldData simple = drinfeld_of(m);
    row[simple] = checked_add(row[simple], c);
    chi -= simple_character(simple).scaled(c);
  }
  return row;
}

Coeff multiplicity_oracle(const DrinfeldData& pi, const DrinfeldData& pitilde,
                          const OracleOptions& opts) {
  const DecompositionRow row = decomposition_row(pi, opts);
  auto it = row.find(pitilde);
  return it == row.end() ? 0 : it->second;
}

}  // namespace qchar
