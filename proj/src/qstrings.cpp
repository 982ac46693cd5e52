#include "qchar/qstrings.hpp"

#include <algorithm>
#include <sstream>

#include "qchar/errors.hpp"

namespace qchar {

// ---------------------------------------------------------------------------
// DrinfeldData

DrinfeldData::DrinfeldData(std::map<int, int> mult) : mult_(std::move(mult)) {
  for (const auto& [k, m] : mult_) {
    if (m <= 0) {
      throw DomainError("Drinfeld data: multiplicity of exponent " + std::to_string(k) +
                        " must be positive");
    }
  }
}

int DrinfeldData::multiplicity(int k) const {
  auto it = mult_.find(k);
  return it == mult_.end() ? 0 : it->second;
}

int DrinfeldData::degree() const {
  int d = 0;
  for (const auto& [k, m] : mult_) d += m;
  return d;
}

int DrinfeldData::window() const {
  return mult_.empty() ? 0 : max_exponent() - min_exponent() + 1;
}

void DrinfeldData::add(int k, int m) {
  if (m <= 0) throw DomainError("Drinfeld data: added multiplicity must be positive");
  mult_[k] += m;
}

DrinfeldData DrinfeldData::shifted(int offset) const {
  std::map<int, int> out;
  for (const auto& [k, m] : mult_) out.emplace(k + offset, m);
  return DrinfeldData(std::move(out));
}

std::string DrinfeldData::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [k, m] : mult_) {
    if (!first) os << ',';
    first = false;
    os << k << ':' << m;
  }
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------------------
// StringDecomposition

StringDecomposition::StringDecomposition(std::map<QString, int> parts) {
  for (const auto& [s, c] : parts) add(s, c);
}

void StringDecomposition::add(const QString& s, int count) {
  if (s.len < 1) throw DomainError("q-string length must be positive");
  if (count <= 0) return;
  parts_[s] += count;
}

int StringDecomposition::size() const {
  int n = 0;
  for (const auto& [s, c] : parts_) n += c;
  return n;
}

DrinfeldData StringDecomposition::union_multiset() const {
  DrinfeldData dd;
  for (const auto& [s, c] : parts_) {
    for (int k = s.base; k <= s.last(); ++k) dd.add(k, c);
  }
  return dd;
}

bool StringDecomposition::pairwise_general() const {
  for (auto a = parts_.begin(); a != parts_.end(); ++a) {
    for (auto b = std::next(a); b != parts_.end(); ++b) {
      if (!in_general_position(a->first, b->first)) return false;
    }
  }
  return true;
}

StringDecomposition StringDecomposition::shifted(int offset) const {
  StringDecomposition out;
  for (const auto& [s, c] : parts_) out.add(QString{s.len, s.base + offset}, c);
  return out;
}

// ---------------------------------------------------------------------------
// Position predicates

bool in_general_position(const QString& s, const QString& t) {
  if (s.contains(t) || t.contains(s)) return true;
  const bool union_is_string = s.base <= t.last() + 1 && t.base <= s.last() + 1;
  return !union_is_string;
}

bool special_position_by_ratio(const QString& s, const QString& t) {
  const int n = s.len;
  const int m = t.len;
  const int diff = t.base - s.base;
  for (int p = 1; p <= std::min(m, n); ++p) {
    if (diff == n - p + 1 || diff == -(m - p + 1)) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Interval multiplicities

std::size_t IntervalTable::index(int i, int j) const {
  if (i < 1 || j < i || j > n_) {
    throw DomainError("interval (" + std::to_string(i) + "," + std::to_string(j) +
                      ") outside 1.." + std::to_string(n_));
  }
  return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
}

IntervalTable kij_multiplicities(std::span<const int> d) {
  const int n = static_cast<int>(d.size());
  auto dim = [&](int i) { return (i < 1 || i > n) ? 0 : d[i - 1]; };
  for (int v : d) {
    if (v < 0) throw DomainError("dimension vector entries must be nonnegative");
  }
  IntervalTable table(n);
  for (int i = 1; i <= n; ++i) {
    int inner_min = dim(i);
    for (int j = i; j <= n; ++j) {
      inner_min = std::min(inner_min, dim(j));
      const int k = inner_min - std::max(dim(i - 1), dim(j + 1));
      table.set(i, j, std::max(0, k));
    }
  }
  return table;
}

StringDecomposition decompose(const DrinfeldData& dd) {
  StringDecomposition out;
  if (dd.empty()) return out;
  // Exponent min_exponent() sits at window slot 1.
  const int offset = dd.min_exponent() - 1;
  const int n = dd.window();
  std::vector<int> d(n);
  for (int i = 1; i <= n; ++i) d[i - 1] = dd.multiplicity(i + offset);
  const IntervalTable k = kij_multiplicities(d);
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      out.add(QString{j - i + 1, i + offset}, k.at(i, j));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Brute force

namespace {

class Splitter {
 public:
  explicit Splitter(const DrinfeldData& dd) : remaining_(dd.mult()) {}

  void run(int min_len) {
    if (solutions_.size() > 1) return;
    if (remaining_.empty()) {
      StringDecomposition found;
      for (const auto& s : chosen_) found.add(s);
      solutions_.push_back(std::move(found));
      return;
    }
    const int base = remaining_.begin()->first;
    // Strings sharing a base are picked in nondecreasing length so each
    // multiset of strings is visited once.
    if (chosen_.empty() || chosen_.back().base != base) min_len = 1;
    for (int len = 1; remaining_.contains(base + len - 1); ++len) {
      if (len < min_len) continue;
      const QString s{len, base};
      if (!std::all_of(chosen_.begin(), chosen_.end(),
                       [&](const QString& c) { return in_general_position(c, s); })) {
        continue;
      }
      take(s);
      chosen_.push_back(s);
      run(len);
      chosen_.pop_back();
      give_back(s);
    }
  }

  const std::vector<StringDecomposition>& solutions() const { return solutions_; }

 private:
  void take(const QString& s) {
    for (int k = s.base; k <= s.last(); ++k) {
      if (--remaining_[k] == 0) remaining_.erase(k);
    }
  }
  void give_back(const QString& s) {
    for (int k = s.base; k <= s.last(); ++k) ++remaining_[k];
  }

  std::map<int, int> remaining_;
  std::vector<QString> chosen_;
  std::vector<StringDecomposition> solutions_;
};

}  // namespace

StringDecomposition decompose_bruteforce(const DrinfeldData& dd, int cap) {
  if (dd.degree() > cap) {
    throw DomainError("decompose_bruteforce: total multiplicity " + std::to_string(dd.degree()) +
                      " exceeds cap " + std::to_string(cap));
  }
  Splitter splitter(dd);
  splitter.run(1);
  const auto& sols = splitter.solutions();
  if (sols.size() != 1) {
    throw InvariantError("decompose_bruteforce: " +
                         std::string(sols.empty() ? "no" : "more than one") +
                         " pairwise-general string splitting of " + dd.to_string());
  }
  return sols.front();
}

}  // namespace qchar
