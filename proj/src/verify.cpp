#include "qchar/verify.hpp"

#include <chrono>

#include "qchar/characters.hpp"
#include "qchar/decomp.hpp"
#include "qchar/errors.hpp"
#include "qchar/io.hpp"
#include "qchar/quiver_a.hpp"

namespace qchar::verify {

namespace {

constexpr std::size_t kMaxMessages = 10;

class Timer {
 public:
  explicit Timer(SweepReport& report) : report_(report), start_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    report_.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  SweepReport& report_;
  std::chrono::steady_clock::time_point start_;
};

// Odometer over 0 <= v_i <= bounds_i.
template <typename Fn>
void for_each_box(const std::vector<int>& bounds, Fn&& fn) {
  std::vector<int> v(bounds.size(), 0);
  while (true) {
    fn(v);
    std::size_t pos = 0;
    while (pos < v.size() && v[pos] == bounds[pos]) v[pos++] = 0;
    if (pos == v.size()) return;
    ++v[pos];
  }
}

std::string list(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

DrinfeldData from_vector(const std::vector<int>& d, int base) {
  DrinfeldData dd;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > 0) dd.add(base + static_cast<int>(i), d[i]);
  }
  return dd;
}

}  // namespace

void SweepReport::check(bool cond, const std::function<std::string()>& describe) {
  ++checks;
  if (cond) return;
  ++failures;
  if (messages.size() < kMaxMessages) messages.push_back(describe());
}

std::vector<std::vector<int>> dimension_grid(int n, int max_sum) {
  std::vector<std::vector<int>> out;
  std::vector<int> d(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n) {
      out.push_back(d);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      d[pos] = v;
      rec(pos + 1, left - v);
    }
    d[pos] = 0;
  };
  rec(0, max_sum);
  return out;
}

std::vector<DrinfeldData> drinfeld_grid(int window, int max_degree) {
  std::vector<DrinfeldData> out{DrinfeldData{}};
  if (window < 1) return out;
  for (const auto& d : dimension_grid(window, max_degree)) {
    if (d[0] > 0) out.push_back(from_vector(d, 0));
  }
  return out;
}

SweepReport tsystem_sweep(int nmax, int kmin, int kmax) {
  SweepReport rep;
  rep.name = "t-system";
  Timer timer(rep);
  for (int n = 1; n <= nmax; ++n) {
    for (int k = kmin; k <= kmax; ++k) {
      rep.check(t_system_holds(n, k), [&] {
        return "T-system fails at n=" + std::to_string(n) + ", k=" + std::to_string(k);
      });
    }
  }
  return rep;
}

SweepReport binomial_sweep(int amax) {
  SweepReport rep;
  rep.name = "gaussian-binomials";
  Timer timer(rep);
  for (int a = 0; a <= amax; ++a) {
    for (int n = 0; n <= a; ++n) {
      const TPoly g = gauss_binom_t(a, n);
      const auto tag = [&] { return "(" + std::to_string(a) + " choose " + std::to_string(n) + ")_t"; };
      rep.check(g == gauss_binom_t(a, a - n), [&] { return tag() + " not symmetric"; });
      rep.check(tpoly_eval_one(g) == binomial(a, n), [&] { return tag() + " at t=1 != C(a,n)"; });
      bool nonneg = true;
      for (Coeff c : g.coeffs()) nonneg = nonneg && c >= 0;
      rep.check(nonneg, [&] { return tag() + " has a negative coefficient"; });
      rep.check(g.degree() == n * (a - n), [&] { return tag() + " has wrong degree"; });
    }
  }
  return rep;
}

SweepReport standard_character_sweep(int window, int max_degree) {
  SweepReport rep;
  rep.name = "standard-character";
  Timer timer(rep);
  for (const auto& dd : drinfeld_grid(window, max_degree)) {
    const LaurentPoly chi = standard_character(dd);
    rep.check(chi == standard_character_geometric(dd),
              [&] { return "product and Euler-characteristic forms differ for " + dd.to_string(); });
    rep.check(lp_dimension(chi) == (Coeff{1} << dd.degree()),
              [&] { return "dim M(pi) != 2^deg for " + dd.to_string(); });
  }
  return rep;
}

SweepReport string_sweep(int nmax, int max_sum, int cap) {
  SweepReport rep;
  rep.name = "strings-rigid";
  Timer timer(rep);

  for (int n = 1; n <= 6; ++n) {
    for (int m = 1; m <= 6; ++m) {
      for (int off = -8; off <= 8; ++off) {
        const QString s{n, 0};
        const QString t{m, off};
        rep.check(special_position_by_ratio(s, t) == !in_general_position(s, t), [&] {
          return "position predicates disagree on " + io::render(s) + ", " + io::render(t);
        });
        rep.check(in_general_position(s, t) == in_general_position(t, s),
                  [&] { return "general position not symmetric"; });
      }
    }
  }

  for (int n = 1; n <= nmax; ++n) {
    for (const auto& d : dimension_grid(n, max_sum)) {
      const DrinfeldData dd = from_vector(d, 0);
      const StringDecomposition fast = decompose(dd);
      try {
        const StringDecomposition slow = decompose_bruteforce(dd, cap);
        rep.check(fast == slow, [&] {
          return "decompose != decompose_bruteforce for d=" + list(d) + ": " + io::render(fast) +
                 " vs " + io::render(slow);
        });
      } catch (const Error& e) {
        rep.check(false, [&] { return "brute force failed for d=" + list(d) + ": " + e.what(); });
      }
      rep.check(fast.union_multiset() == dd && fast.pairwise_general(),
                [&] { return "decompose invariants fail for d=" + list(d); });

      try {
        StringDecomposition via_intervals;
        for (const auto& [u, c] : rigid_decomposition(d)) {
          via_intervals.add(interval_to_string(u, 0), c);
        }
        rep.check(via_intervals == fast,
                  [&] { return "rigid intervals and strings differ for d=" + list(d); });
      } catch (const Error& e) {
        rep.check(false, [&] { return "rigid_decomposition failed for d=" + list(d) + ": " + e.what(); });
      }
    }
  }
  return rep;
}

SweepReport decomposition_sweep(int window, int max_degree, int cap) {
  SweepReport rep;
  rep.name = "decomposition-numbers";
  Timer timer(rep);
  const OracleOptions forward{cap, TieBreak::kLexSmallest};
  const OracleOptions backward{cap, TieBreak::kLexLargest};

  for (const auto& pi : drinfeld_grid(window, max_degree)) {
    DecompositionRow row;
    try {
      row = decomposition_row(pi, forward);
      const DecompositionRow reversed = decomposition_row(pi, backward);
      rep.check(row == reversed,
                [&] { return "row depends on tie-breaking for " + pi.to_string(); });
    } catch (const Error& e) {
      rep.check(false, [&] { return "elimination failed for " + pi.to_string() + ": " + e.what(); });
      continue;
    }

    rep.check(row.contains(pi) && row.at(pi) == 1,
              [&] { return "[M(pi):V(pi)] != 1 for " + pi.to_string(); });
    Coeff dim = 0;
    for (const auto& [simple, mult] : row) {
      dim += mult * lp_dimension(simple_character(simple));
      rep.check(a_order_leq(highest_monomial(simple), highest_monomial(pi)), [&] {
        return "row key " + simple.to_string() + " not below e^pi for " + pi.to_string();
      });
    }
    rep.check(dim == (Coeff{1} << pi.degree()),
              [&] { return "dimension bookkeeping fails for " + pi.to_string(); });

    // Every target in the box 0 <= h <= w (all row keys lie there), plus two
    // targets just outside the window.
    const int lo = pi.empty() ? 0 : pi.min_exponent();
    std::vector<int> w(pi.window());
    for (int i = 0; i < pi.window(); ++i) w[i] = pi.multiplicity(lo + i);
    std::vector<DrinfeldData> targets;
    for_each_box(w, [&](const std::vector<int>& h) { targets.push_back(from_vector(h, lo)); });
    targets.push_back(DrinfeldData(std::map<int, int>{{lo - 1, 1}}));
    targets.push_back(DrinfeldData(std::map<int, int>{{lo + pi.window(), 1}}));

    for (const auto& target : targets) {
      auto it = row.find(target);
      const Coeff oracle = it == row.end() ? 0 : it->second;
      const auto query = MultiplicityQuery::align(pi, target);
      const bool has_rank = query && rank_tuple(*query).has_value();
      if (!has_rank) {
        rep.check(oracle == 0, [&] {
          return "no rank tuple but oracle = " + std::to_string(oracle) + " for " +
                 pi.to_string() + " / " + target.to_string();
        });
        continue;
      }
      const ClosedMultiplicity closed = multiplicity_closed(*query);
      if (!closed.applicable()) continue;
      rep.check(*closed.value == oracle, [&] {
        return "closed " + std::to_string(*closed.value) + " != oracle " + std::to_string(oracle) +
               " for " + pi.to_string() + " / " + target.to_string();
      });
    }
  }
  return rep;
}

SweepReport ic_stalk_sweep(int nmax, int wmax) {
  SweepReport rep;
  rep.name = "ic-stalks";
  Timer timer(rep);
  for (int n = 1; n <= nmax; ++n) {
    for_each_box(std::vector<int>(n, wmax), [&](const std::vector<int>& w) {
      for_each_box(std::vector<int>(n - 1, wmax), [&](const std::vector<int>& r) {
        std::optional<ComplexStratum> s;
        try {
          s.emplace(w, r);
        } catch (const DomainError&) {
          return;
        }
        if (!is_sparse(*s)) return;
        const long top_dim = orbit_dim(*s);
        for_each_box(r, [&](const std::vector<int>& k) {
          const auto tag = [&] { return "w=" + list(w) + " r=" + list(r) + " k=" + list(k); };
          const TPoly p = ic_stalk_poly({*s, k});
          bool nonneg = true;
          for (Coeff c : p.coeffs()) nonneg = nonneg && c >= 0;
          rep.check(nonneg, [&] { return "negative stalk coefficient at " + tag(); });
          rep.check(p.coeff(0) == 1, [&] { return "stalk constant term != 1 at " + tag(); });

          std::vector<int> lower(r.size());
          bool zero = true;
          for (std::size_t i = 0; i < r.size(); ++i) {
            lower[i] = r[i] - k[i];
            zero = zero && k[i] == 0;
          }
          if (!zero) {
            const long codim = top_dim - orbit_dim(ComplexStratum(w, lower));
            rep.check(2L * p.degree() < codim, [&] {
              return "support bound 2*deg=" + std::to_string(2 * p.degree()) +
                     " >= codim=" + std::to_string(codim) + " at " + tag();
            });
          }
          if (k == r) {
            const ClosedMultiplicity closed = multiplicity_closed(MultiplicityQuery{w, s->h()});
            rep.check(closed.applicable() && *closed.value == tpoly_eval_one(p),
                      [&] { return "stalk at 0 disagrees with closed multiplicity at " + tag(); });
          }
        });
      });
    });
  }
  return rep;
}

std::vector<SweepReport> run_all(const SweepConfig& c) {
  return {
      binomial_sweep(c.binom_amax),
      tsystem_sweep(c.tsystem_nmax, c.tsystem_kmin, c.tsystem_kmax),
      standard_character_sweep(c.standard_window, c.standard_degree),
      string_sweep(c.strings_n, c.strings_sum, c.cap),
      decomposition_sweep(c.row_window, c.row_degree, c.cap),
      ic_stalk_sweep(c.ic_n, c.ic_wmax),
  };
}

}  // namespace qchar::verify
