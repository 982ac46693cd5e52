#include "qchar/polyring.hpp"

#include <algorithm>
#include <numeric>

namespace qchar {

Coeff checked_add(Coeff a, Coeff b) {
  Coeff out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in addition");
  }
  return out;
}

Coeff checked_sub(Coeff a, Coeff b) {
  Coeff out;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in subtraction");
  }
  return out;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in multiplication");
  }
  return out;
}

Coeff binomial(int a, int n) {
  if (n < 0 || a < 0 || n > a) return 0;
  n = std::min(n, a - n);
  // C(a, i+1) = C(a, i) * (a - i) / (i + 1). Dividing by g first keeps the
  // intermediate no larger than the result.
  Coeff out = 1;
  for (int i = 0; i < n; ++i) {
    const Coeff g = std::gcd(out, Coeff{i + 1});
    out = checked_mul(out / g, (a - i) / ((i + 1) / g));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::y(int k, int power) {
  Monomial m;
  if (power != 0) m.factors_.emplace_back(k, power);
  return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  Monomial m;
  for (const auto& [k, e] : factors) {
    if (!m.factors_.empty() && m.factors_.back().first == k) {
      m.factors_.back().second += e;
    } else {
      m.factors_.emplace_back(k, e);
    }
    if (m.factors_.back().second == 0) m.factors_.pop_back();
  }
  return m;
}

int Monomial::power(int k) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{k, 0},
                             [](const Factor& a, const Factor& b) { return a.first < b.first; });
  return (it != factors_.end() && it->first == k) ? it->second : 0;
}

bool Monomial::is_dominant() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const Factor& f) { return f.second > 0; });
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

Monomial Monomial::inverse() const {
  Monomial m = *this;
  for (auto& f : m.factors_) f.second = -f.second;
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  m.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      m.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      m.factors_.push_back(*b++);
    } else {
      int e = a->second + b->second;
      if (e != 0) m.factors_.emplace_back(a->first, e);
      ++a;
      ++b;
    }
  }
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const { return *this * other.inverse(); }

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(const Monomial& m, Coeff c) {
  if (c != 0) terms_.emplace(m, c);
}

Coeff LaurentPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(const Monomial& m, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const { return scaled(-1); }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, checked_mul(c, -1));
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
  LaurentPoly out = *this;
  out += other;
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
  LaurentPoly out = *this;
  out -= other;
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
  LaurentPoly out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      out.add_term(ma * mb, checked_mul(ca, cb));
    }
  }
  return out;
}

LaurentPoly LaurentPoly::scaled(Coeff c) const {
  LaurentPoly out;
  if (c == 0) return out;
  for (const auto& [m, a] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, checked_mul(a, c));
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly out = one();
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1U) out = out * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return out;
}

Coeff lp_dimension(const LaurentPoly& p) {
  Coeff sum = 0;
  for (const auto& [m, c] : p.terms()) sum = checked_add(sum, c);
  return sum;
}

std::vector<std::pair<Monomial, Coeff>> dominant_monomials(const LaurentPoly& p) {
  std::vector<std::pair<Monomial, Coeff>> out;
  for (const auto& [m, c] : p.terms()) {
    if (m.is_dominant()) out.emplace_back(m, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// A-order

std::string HalfPosition::to_string() const { return std::to_string(floor()) + "+1/2"; }

Monomial a_inverse_monomial(const AFactorization& f) {
  std::vector<Monomial::Factor> factors;
  for (const auto& [pos, c] : f) {
    factors.emplace_back(pos.floor(), -c);
    factors.emplace_back(pos.floor() + 1, -c);
  }
  return Monomial::from_factors(std::move(factors));
}

std::optional<AFactorization> a_inverse_factorization(const Monomial& m1, const Monomial& m2) {
  const Monomial quotient = m1 / m2;
  AFactorization out;
  if (quotient.is_one()) return out;

  const auto factors = quotient.factors();
  const int lo = factors.front().first;
  const int hi = factors.back().first;
  // c_{k-1/2} + c_{k+1/2} = -delta_k, solved upward from c = 0 below lo.
  int carry = 0;
  for (int k = lo; k <= hi; ++k) {
    const int c = -quotient.power(k) - carry;
    if (c < 0) return std::nullopt;
    if (c > 0) out.emplace(HalfPosition::after(k), c);
    carry = c;
  }
  if (carry != 0) return std::nullopt;
  return out;
}

// ---------------------------------------------------------------------------
// TPoly

TPoly::TPoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

TPoly TPoly::monomial(unsigned e, Coeff c) {
  std::vector<Coeff> v(e + 1, 0);
  v[e] = c;
  return TPoly(std::move(v));
}

void TPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

TPoly& TPoly::operator+=(const TPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] = checked_add(coeffs_[i], other.coeffs_[i]);
  }
  trim();
  return *this;
}

TPoly TPoly::operator+(const TPoly& other) const {
  TPoly out = *this;
  out += other;
  return out;
}

TPoly TPoly::operator*(const TPoly& other) const {
  if (is_zero() || other.is_zero()) return {};
  std::vector<Coeff> v(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      v[i + j] = checked_add(v[i + j], checked_mul(coeffs_[i], other.coeffs_[j]));
    }
  }
  return TPoly(std::move(v));
}

TPoly gauss_binom_t(int a, int n) {
  if (a < 0 || n < 0) throw DomainError("gauss_binom_t: arguments must be nonnegative");
  if (n > a) return {};
  // row[j] holds C(i, j)_t while i runs from 0 to a.
  std::vector<TPoly> row(n + 1);
  row[0] = TPoly::one();
  for (int i = 1; i <= a; ++i) {
    for (int j = std::min(i, n); j >= 1; --j) {
      row[j] = row[j - 1] + TPoly::monomial(j) * row[j];
    }
  }
  return row[n];
}

Coeff tpoly_eval_one(const TPoly& p) {
  Coeff sum = 0;
  for (Coeff c : p.coeffs()) sum = checked_add(sum, c);
  return sum;
}

}  // namespace qchar
