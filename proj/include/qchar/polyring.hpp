// Exact arithmetic for q-characters.
//
// LaurentPoly is a sparse integer Laurent polynomial in spectral variables
// Y_k, where Y_k stands for Y_{a q^{2k}} with a fixed generic base a. TPoly is
// a dense univariate integer polynomial in t. Coefficients are 64-bit and every
// arithmetic step is overflow-checked.
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qchar/errors.hpp"

namespace qchar {

using Coeff = std::int64_t;

Coeff checked_add(Coeff a, Coeff b);
Coeff checked_sub(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);

/// Ordinary binomial coefficient C(a, n); 0 when n < 0 or n > a.
Coeff binomial(int a, int n);

/// A Y-monomial: finitely many (spectral exponent, nonzero power) factors,
/// kept sorted by exponent.
class Monomial {
 public:
  using Factor = std::pair<int, int>;

  Monomial() = default;

  /// Y_k^power.
  static Monomial y(int k, int power = 1);
  /// Arbitrary factor list; repeated exponents merge and zero powers vanish.
  static Monomial from_factors(std::vector<Factor> factors);

  std::span<const Factor> factors() const { return factors_; }
  int power(int k) const;
  bool is_one() const { return factors_.empty(); }
  bool is_dominant() const;
  /// Sum of all powers.
  int degree() const;

  Monomial inverse() const;
  Monomial operator*(const Monomial& other) const;
  Monomial operator/(const Monomial& other) const;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Factor> factors_;
};

class LaurentPoly {
 public:
  using Terms = std::map<Monomial, Coeff>;

  LaurentPoly() = default;
  LaurentPoly(const Monomial& m, Coeff c = 1);

  static LaurentPoly one() { return LaurentPoly(Monomial{}); }
  static LaurentPoly constant(Coeff c) { return LaurentPoly(Monomial{}, c); }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Coeff coefficient(const Monomial& m) const;

  /// Adds c * m in place, keeping zero coefficients out.
  void add_term(const Monomial& m, Coeff c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly operator+(const LaurentPoly& other) const;
  LaurentPoly operator-(const LaurentPoly& other) const;
  LaurentPoly operator*(const LaurentPoly& other) const;
  LaurentPoly scaled(Coeff c) const;
  LaurentPoly pow(unsigned e) const;

  bool operator==(const LaurentPoly&) const = default;

 private:
  Terms terms_;
};

/// Sum of coefficients, i.e. evaluation at Y_k = 1. For a q-character this is
/// the dimension of the module.
Coeff lp_dimension(const LaurentPoly& p);

/// Terms whose monomial has no negative power, in canonical order.
std::vector<std::pair<Monomial, Coeff>> dominant_monomials(const LaurentPoly& p);

/// Position j + 1/2 of the variable A_{j+1/2} = Y_j Y_{j+1}, stored doubled.
struct HalfPosition {
  int doubled = 1;

  static HalfPosition after(int j) { return HalfPosition{2 * j + 1}; }
  /// The integer j with position j + 1/2.
  int floor() const { return (doubled - 1) / 2; }
  std::string to_string() const;

  auto operator<=>(const HalfPosition&) const = default;
};

using AFactorization = std::map<HalfPosition, int>;

/// Product of A_{j+1/2}^{-c} over the entries of f, as a Y-monomial.
Monomial a_inverse_monomial(const AFactorization& f);

/// If m1 / m2 is a product of A^{-1} variables, returns the exponents c_j >= 0
/// (zero entries omitted); otherwise nullopt. Presence means m1 <= m2.
std::optional<AFactorization> a_inverse_factorization(const Monomial& m1,
                                                      const Monomial& m2);

inline bool a_order_leq(const Monomial& m1, const Monomial& m2) {
  return a_inverse_factorization(m1, m2).has_value();
}

/// Dense polynomial in t; index is the power of t. No trailing zeros.
class TPoly {
 public:
  TPoly() = default;
  explicit TPoly(std::vector<Coeff> coeffs);

  static TPoly one() { return TPoly({1}); }
  /// t^e
  static TPoly monomial(unsigned e, Coeff c = 1);

  std::span<const Coeff> coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Coeff coeff(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : 0;
  }

  TPoly operator+(const TPoly& other) const;
  TPoly operator*(const TPoly& other) const;
  TPoly& operator+=(const TPoly& other);

  bool operator==(const TPoly&) const = default;

 private:
  void trim();
  std::vector<Coeff> coeffs_;
};

/// Gaussian binomial (a choose n)_t, built by the Pascal-type recurrence
/// C(a,n) = C(a-1,n-1) + t^n C(a-1,n). Zero when n > a.
TPoly gauss_binom_t(int a, int n);

/// Sum of coefficients.
Coeff tpoly_eval_one(const TPoly& p);

}  // namespace qchar
