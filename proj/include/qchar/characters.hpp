// q-characters (at t = 1) of Kirillov-Reshetikhin, simple and standard modules
// of quantum affine sl2, with all zeros on one q^2-coset.
#pragma once

#include <vector>

#include "qchar/polyring.hpp"
#include "qchar/qstrings.hpp"

namespace qchar {

/// KR module W_{n, a q^{2k}}: the simple module of the string S(n, k).
struct KRLabel {
  int n = 1;
  int k = 0;
};

/// chi_q(W_{n,k}) = sum_{i=0}^{n} Y_k..Y_{k+n-i-1} * Y_{k+n-i+1}^{-1}..Y_{k+n}^{-1}.
/// n = 0 gives 1.
LaurentPoly kr_character(int n, int k);
inline LaurentPoly kr_character(const KRLabel& label) { return kr_character(label.n, label.k); }

/// chi(W_{n,k}) chi(W_{n,k+1}) == chi(W_{n+1,k}) chi(W_{n-1,k+1}) + 1.
bool t_system_holds(int n, int k);

/// Product of KR characters over the string decomposition of dd.
LaurentPoly simple_character(const DrinfeldData& dd);

/// Same character, expanded through the A^{-1} form of each string:
/// Y_i..Y_j (1 + sum_{s=i}^{j} A_{s+1/2}^{-1} ... A_{j+1/2}^{-1}).
LaurentPoly simple_character_piecewise(const DrinfeldData& dd);

/// Product of fundamental characters Y_k + Y_{k+1}^{-1} over all zeros.
LaurentPoly standard_character(const DrinfeldData& dd);

/// Euler-characteristic form: sum over subspace dimensions 0 <= v_k <= w_k of
/// prod_k C(w_k, v_k) * Y^w * prod_k A_{k+1/2}^{-v_k}.
LaurentPoly standard_character_geometric(const DrinfeldData& dd);

/// Zeros with multiplicity in nonincreasing exponent order, the tensor order
/// of the standard module.
std::vector<int> standard_ordering(const DrinfeldData& dd);

/// e^pi as a Y-monomial: prod_k Y_k^{mult(k)}.
Monomial highest_monomial(const DrinfeldData& dd);

/// Inverse of highest_monomial; throws DomainError for non-dominant input.
DrinfeldData drinfeld_of(const Monomial& dominant);

}  // namespace qchar
