// Decomposition numbers [M(pi) : V(pitilde)] of standard modules.
//
// Two independent routes are provided:
//   * the closed binomial formula over the rank tuple r, valid when the Betti
//     support Omega(r) is sparse (multiplicity_closed), and
//   * elimination in the character ring: peel simple characters off the
//     standard character from the top (multiplicity_oracle, decomposition_row).
// ic_stalk_poly gives the IC stalk Poincare polynomials on varieties of
// complexes; at k = r and t = 1 it reproduces the closed multiplicity.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qchar/polyring.hpp"
#include "qchar/quiver_a.hpp"
#include "qchar/qstrings.hpp"

namespace qchar {

/// Exponent data of pi (w) and pitilde (h) over the common window 0..n-1.
struct MultiplicityQuery {
  std::vector<int> w;
  std::vector<int> h;

  /// Translates both so that the smallest zero of pi sits at 0. Returns
  /// nullopt if pitilde has a zero outside pi's window (multiplicity 0).
  static std::optional<MultiplicityQuery> align(const DrinfeldData& pi,
                                                const DrinfeldData& pitilde);

  int n() const { return static_cast<int>(w.size()); }
};

/// r_i = sum_{j<=i} (-1)^{i+j} (w_j - h_j), i = 0..n-2, if it is a genuine
/// rank tuple producing h; nullopt otherwise.
std::optional<std::vector<int>> rank_tuple(const MultiplicityQuery& q);

/// Result of the closed formula: a value, or "not applicable" when Omega(r)
/// is not sparse.
struct ClosedMultiplicity {
  std::optional<Coeff> value;
  bool applicable() const { return value.has_value(); }
};

ClosedMultiplicity multiplicity_closed(const MultiplicityQuery& q);
ClosedMultiplicity multiplicity_closed(const DrinfeldData& pi, const DrinfeldData& pitilde);

/// Stalk of IC(closure O(r)) at a point of O(r - k).
struct StalkQuery {
  ComplexStratum stratum;
  std::vector<int> k;
};

/// Poincare polynomial sum_i dim H^i t^{i/2}. Throws DomainError("not
/// sparse") if Omega(r) is not sparse, DomainError("invalid stalk point")
/// unless 0 <= k <= r.
TPoly ic_stalk_poly(const StalkQuery& s);

enum class TieBreak { kLexSmallest, kLexLargest };

struct OracleOptions {
  int cap = 10;
  TieBreak tie_break = TieBreak::kLexSmallest;
};

using DecompositionRow = std::map<DrinfeldData, Coeff>;

/// All composition factors of M(pi) with multiplicities, by elimination.
/// Throws DomainError if pi.degree() > cap and InvariantError if the
/// elimination breaks one of its invariants.
DecompositionRow decomposition_row(const DrinfeldData& pi, const OracleOptions& opts = {});

Coeff multiplicity_oracle(const DrinfeldData& pi, const DrinfeldData& pitilde,
                          const OracleOptions& opts = {});

}  // namespace qchar
