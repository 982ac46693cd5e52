#include "qchar/quiver_a.hpp"

#include <algorithm>

#include "qchar/errors.hpp"

namespace qchar {

DimVector Interval::dim(int n) const {
  DimVector v(n, 0);
  for (int k = i; k <= j; ++k) v.at(k - 1) = 1;
  return v;
}

long euler_form(std::span<const int> d, std::span<const int> e) {
  if (d.size() != e.size()) throw DomainError("euler_form: dimension vectors differ in length");
  long out = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    out += static_cast<long>(d[i]) * e[i];
    if (i + 1 < d.size()) out -= static_cast<long>(d[i]) * e[i + 1];
  }
  return out;
}

int ext_dim(const Interval& u, const Interval& v) {
  return (u.i + 1 <= v.i && v.i <= u.j + 1 && u.j + 1 <= v.j) ? 1 : 0;
}

int hom_dim(const Interval& u, const Interval& v) {
  const int n = std::max(u.j, v.j);
  const long h = euler_form(u.dim(n), v.dim(n)) + ext_dim(u, v);
  if (h < 0 || h > 1) {
    throw InvariantError("hom_dim: Euler form and Ext criterion give dim Hom = " +
                         std::to_string(h));
  }
  return static_cast<int>(h);
}

std::map<Interval, int> rigid_decomposition(std::span<const int> d) {
  const int n = static_cast<int>(d.size());
  const IntervalTable k = kij_multiplicities(d);
  std::map<Interval, int> out;
  DimVector total(n, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      if (k.at(i, j) == 0) continue;
      out.emplace(Interval{i, j}, k.at(i, j));
      for (int x = i; x <= j; ++x) total[x - 1] += k.at(i, j);
    }
  }
  if (!std::equal(total.begin(), total.end(), d.begin(), d.end())) {
    throw InvariantError("rigid_decomposition: summands do not add up to d");
  }
  for (const auto& [u, cu] : out) {
    for (const auto& [v, cv] : out) {
      if (ext_dim(u, v) != 0) {
        throw InvariantError("rigid_decomposition: Ext^1(U_" + std::to_string(u.i) + "," +
                             std::to_string(u.j) + ", U_" + std::to_string(v.i) + "," +
                             std::to_string(v.j) + ") != 0");
      }
    }
  }
  return out;
}

QString interval_to_string(const Interval& u, int base) {
  return QString{u.j - u.i + 1, base + u.i - 1};
}

// ---------------------------------------------------------------------------
// ComplexStratum

ComplexStratum::ComplexStratum(std::vector<int> w, std::vector<int> r)
    : w_(std::move(w)), r_(std::move(r)) {
  const int n = static_cast<int>(w_.size());
  if (static_cast<int>(r_.size()) != std::max(n - 1, 0)) {
    throw DomainError("stratum: rank tuple must have length n-1");
  }
  for (int v : w_) {
    if (v < 0) throw DomainError("stratum: negative entry in w");
  }
  for (int v : r_) {
    if (v < 0) throw DomainError("stratum: negative rank");
  }
  h_.resize(n);
  for (int i = 0; i < n; ++i) {
    h_[i] = w_[i] - rank(i - 1) - rank(i);
    if (h_[i] < 0) throw DomainError("not a rank tuple for w");
    if (h_[i] != 0) omega_.insert(i);
  }
}

bool is_sparse(const std::set<int>& omega) {
  for (int i : omega) {
    if (omega.contains(i + 1)) return false;
  }
  return true;
}

bool is_sparse(const ComplexStratum& s) { return is_sparse(s.omega()); }

bool degeneration_leq(std::span<const int> r1, std::span<const int> r2) {
  if (r1.size() != r2.size()) throw DomainError("degeneration_leq: rank tuples differ in length");
  for (std::size_t i = 0; i < r1.size(); ++i) {
    if (r1[i] > r2[i]) return false;
  }
  return true;
}

long orbit_dim(const ComplexStratum& s) {
  // M = (+)_i U_{i,i+1}^{r_i} (+) (+)_i U_{i,i}^{h_i}, vertices shifted to 1-based.
  std::vector<std::pair<Interval, int>> summands;
  for (int i = 0; i + 1 < s.n(); ++i) {
    if (s.r()[i] > 0) summands.emplace_back(Interval{i + 1, i + 2}, s.r()[i]);
  }
  for (int i = 0; i < s.n(); ++i) {
    if (s.h()[i] > 0) summands.emplace_back(Interval{i + 1, i + 1}, s.h()[i]);
  }
  long group = 0;
  for (int v : s.w()) group += static_cast<long>(v) * v;
  long end = 0;
  for (const auto& [u, cu] : summands) {
    for (const auto& [v, cv] : summands) {
      end += static_cast<long>(cu) * cv * hom_dim(u, v);
    }
  }
  return group - end;
}

}  // namespace qchar
