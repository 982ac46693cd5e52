// Equioriented A_n quiver 1 -> 2 -> ... -> n and varieties of complexes.
#pragma once

#include <compare>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "qchar/qstrings.hpp"

namespace qchar {

using DimVector = std::vector<int>;

/// Indecomposable U_{i,j} with dimension vector e_i + ... + e_j (1-based).
struct Interval {
  int i = 1;
  int j = 1;

  DimVector dim(int n) const;
  auto operator<=>(const Interval&) const = default;
};

/// Sum_i d_i e_i - Sum_{i<n} d_i e_{i+1}.
long euler_form(std::span<const int> d, std::span<const int> e);

/// dim Ext^1(u, v): 1 iff u.i + 1 <= v.i <= u.j + 1 <= v.j.
int ext_dim(const Interval& u, const Interval& v);

/// dim Hom(u, v) = <dim u, dim v> + dim Ext^1(u, v); throws InvariantError
/// if that is not 0 or 1.
int hom_dim(const Interval& u, const Interval& v);

/// The rigid representation of dimension vector d, as interval -> count.
/// Ext^1 vanishing between all summands is checked before returning.
std::map<Interval, int> rigid_decomposition(std::span<const int> d);

/// Interval U_{i,j} in window slots <-> q-string; slot 1 is exponent `base`.
QString interval_to_string(const Interval& u, int base = 0);

/// An orbit O(r) in Com(W_*): w = (w_0..w_{n-1}), r = (r_0..r_{n-2}),
/// Betti numbers h_i = w_i - r_{i-1} - r_i and their support omega.
class ComplexStratum {
 public:
  /// Throws DomainError("not a rank tuple for w") if some h_i < 0.
  ComplexStratum(std::vector<int> w, std::vector<int> r);

  const std::vector<int>& w() const { return w_; }
  const std::vector<int>& r() const { return r_; }
  const std::vector<int>& h() const { return h_; }
  const std::set<int>& omega() const { return omega_; }
  int n() const { return static_cast<int>(w_.size()); }

  /// r_i with r_{-1} = r_{n-1} = 0.
  int rank(int i) const { return (i < 0 || i >= static_cast<int>(r_.size())) ? 0 : r_[i]; }

  bool operator==(const ComplexStratum&) const = default;

 private:
  std::vector<int> w_;
  std::vector<int> r_;
  std::vector<int> h_;
  std::set<int> omega_;
};

inline ComplexStratum stratum(std::vector<int> w, std::vector<int> r) {
  return ComplexStratum(std::move(w), std::move(r));
}

/// No two consecutive indices in omega.
bool is_sparse(const ComplexStratum& s);
bool is_sparse(const std::set<int>& omega);

/// O(r1) lies in the closure of O(r2).
bool degeneration_leq(std::span<const int> r1, std::span<const int> r2);

/// dim O(r) = dim G - dim End(M) for M the complex with ranks r.
long orbit_dim(const ComplexStratum& s);

}  // namespace qchar
