// q-strings and Drinfeld data on a single q^2-coset.
//
// A q-string S(n, k) is the run {k, k+1, ..., k+n-1} of spectral exponents.
// Every finite multiset of exponents splits uniquely into q-strings that are
// pairwise in general position; decompose() builds that splitting from the
// piecewise-linear interval multiplicities, decompose_bruteforce() finds it by
// exhaustive search.
#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace qchar {

struct QString {
  int len = 1;
  int base = 0;

  int last() const { return base + len - 1; }
  bool contains(const QString& other) const {
    return base <= other.base && other.last() <= last();
  }

  // Ordered by base first, then length.
  auto operator<=>(const QString& o) const {
    if (auto c = base <=> o.base; c != 0) return c;
    return len <=> o.len;
  }
  bool operator==(const QString&) const = default;
};

/// Multiset of spectral exponents: zero a q^{2k} with multiplicity mult.at(k).
class DrinfeldData {
 public:
  DrinfeldData() = default;
  /// Throws DomainError on a nonpositive multiplicity.
  explicit DrinfeldData(std::map<int, int> mult);

  const std::map<int, int>& mult() const { return mult_; }
  bool empty() const { return mult_.empty(); }
  int multiplicity(int k) const;
  /// Total number of zeros counted with multiplicity.
  int degree() const;
  int min_exponent() const { return mult_.begin()->first; }
  int max_exponent() const { return mult_.rbegin()->first; }
  /// max - min + 1, or 0 when empty.
  int window() const;

  void add(int k, int m = 1);
  DrinfeldData shifted(int offset) const;

  std::string to_string() const;

  auto operator<=>(const DrinfeldData&) const = default;
  bool operator==(const DrinfeldData&) const = default;

 private:
  std::map<int, int> mult_;
};

/// Multiset of q-strings, stored as string -> count.
class StringDecomposition {
 public:
  StringDecomposition() = default;
  explicit StringDecomposition(std::map<QString, int> parts);

  const std::map<QString, int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  void add(const QString& s, int count = 1);
  /// Number of strings counted with multiplicity.
  int size() const;

  DrinfeldData union_multiset() const;
  bool pairwise_general() const;
  StringDecomposition shifted(int offset) const;

  bool operator==(const StringDecomposition&) const = default;

 private:
  std::map<QString, int> parts_;
};

/// False exactly when neither string contains the other and their union is
/// again a string.
bool in_general_position(const QString& s, const QString& t);

/// Special-position test through the ratio of base parameters:
/// (t.base - s.base) lies in {n-p+1} or {-(m-p+1)} for 1 <= p <= min(n, m).
bool special_position_by_ratio(const QString& s, const QString& t);

/// Interval multiplicities k_{ij}, 1 <= i <= j <= n, for a dimension vector
/// d = (d_1, ..., d_n).
class IntervalTable {
 public:
  explicit IntervalTable(int n) : n_(n), values_(static_cast<std::size_t>(n) * n, 0) {}

  int n() const { return n_; }
  int at(int i, int j) const { return values_[index(i, j)]; }
  void set(int i, int j, int v) { values_[index(i, j)] = v; }

 private:
  std::size_t index(int i, int j) const;
  int n_;
  std::vector<int> values_;
};

IntervalTable kij_multiplicities(std::span<const int> d);

/// Splitting via kij_multiplicities on the support window of dd.
StringDecomposition decompose(const DrinfeldData& dd);

inline constexpr int kDefaultBruteforceCap = 10;

/// Exhaustive search over all ways to cut dd into strings. Throws
/// DomainError if dd.degree() > cap and InvariantError unless exactly one
/// pairwise-general splitting exists.
StringDecomposition decompose_bruteforce(const DrinfeldData& dd, int cap = kDefaultBruteforceCap);

}  // namespace qchar
