#include "qchar/cli.hpp"

#include <cstdlib>
#include <ostream>

#include "qchar/characters.hpp"
#include "qchar/decomp.hpp"
#include "qchar/errors.hpp"
#include "qchar/io.hpp"
#include "qchar/quiver_a.hpp"

namespace qchar::cli {

namespace {

using io::Json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;

std::string list(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

void require_cap(int cap) {
  if (cap < 0) throw DomainError("--cap must be nonnegative");
}

class Dispatcher {
 public:
  Dispatcher(Format format, std::ostream& out) : json_(format == Format::kJson), out_(out) {}

  int operator()(const KrChar& c) {
    if (c.n < 0) throw DomainError("--n must be nonnegative");
    const LaurentPoly chi = kr_character(c.n, c.k);
    emit_poly(chi);
    return kOk;
  }

  int operator()(const StdChar& c) {
    const DrinfeldData pi = io::parse_drinfeld(c.pi);
    emit_poly(c.geometric ? standard_character_geometric(pi) : standard_character(pi));
    return kOk;
  }

  int operator()(const SimpleChar& c) {
    const DrinfeldData pi = io::parse_drinfeld(c.pi);
    emit_poly(c.piecewise ? simple_character_piecewise(pi) : simple_character(pi));
    return kOk;
  }

  int operator()(const Ordering& c) {
    const std::vector<int> order = standard_ordering(io::parse_drinfeld(c.pi));
    if (json_) {
      out_ << Json(order).dump() << '\n';
    } else {
      std::string s;
      for (std::size_t i = 0; i < order.size(); ++i) {
        s += (i ? " (x) " : "") + std::string("W_1[") + std::to_string(order[i]) + "]";
      }
      out_ << (s.empty() ? "(trivial)" : s) << '\n';
    }
    return kOk;
  }

  int operator()(const Strings& c) {
    require_cap(c.cap);
    const DrinfeldData pi = io::parse_drinfeld(c.pi);
    const StringDecomposition d = c.bruteforce ? decompose_bruteforce(pi, c.cap) : decompose(pi);
    if (json_) {
      out_ << io::to_json(d).dump() << '\n';
    } else {
      out_ << io::render(d) << '\n';
    }
    return kOk;
  }

  int operator()(const Rigid& c) {
    const std::vector<int> d = io::parse_int_list(c.d);
    const auto summands = rigid_decomposition(d);
    if (json_) {
      Json j = Json::array();
      for (const auto& [u, count] : summands) {
        Json e = Json::object();
        e["i"] = u.i;
        e["j"] = u.j;
        e["count"] = count;
        j.push_back(std::move(e));
      }
      out_ << j.dump() << '\n';
    } else if (summands.empty()) {
      out_ << "0\n";
    } else {
      bool first = true;
      for (const auto& [u, count] : summands) {
        if (!first) out_ << " (+) ";
        first = false;
        out_ << "U[" << u.i << ',' << u.j << ']';
        if (count != 1) out_ << '^' << count;
      }
      out_ << '\n';
    }
    return kOk;
  }

  int operator()(const Mult& c) {
    require_cap(c.cap);
    const DrinfeldData pi = io::parse_drinfeld(c.pi);
    const DrinfeldData pitilde = io::parse_drinfeld(c.pitilde);
    const auto query = MultiplicityQuery::align(pi, pitilde);
    const auto r = query ? rank_tuple(*query) : std::nullopt;
    const ClosedMultiplicity closed = multiplicity_closed(pi, pitilde);
    const Coeff oracle = multiplicity_oracle(pi, pitilde, OracleOptions{c.cap});

    std::string verdict = "NOT-APPLICABLE";
    if (closed.applicable()) verdict = *closed.value == oracle ? "AGREE" : "DISAGREE";

    std::optional<ComplexStratum> s;
    if (r) s.emplace(query->w, *r);

    if (json_) {
      Json j = Json::object();
      j["pi"] = io::to_json(pi);
      j["pitilde"] = io::to_json(pitilde);
      j["rank_tuple"] = r ? Json(*r) : Json(nullptr);
      j["sparse"] = s ? Json(is_sparse(*s)) : Json(nullptr);
      j["closed"] = closed.applicable() ? Json(*closed.value) : Json(nullptr);
      j["oracle"] = oracle;
      j["verdict"] = verdict;
      out_ << j.dump() << '\n';
    } else {
      out_ << "pi       = " << pi.to_string() << '\n';
      out_ << "pitilde  = " << pitilde.to_string() << '\n';
      out_ << "r        = " << (r ? list(*r) : std::string("none")) << '\n';
      if (s) out_ << "sparse   = " << (is_sparse(*s) ? "yes" : "no") << '\n';
      out_ << "closed   = "
           << (closed.applicable() ? std::to_string(*closed.value) : std::string("n/a")) << '\n';
      out_ << "oracle   = " << oracle << '\n';
      out_ << "verdict  = " << verdict << '\n';
    }
    return verdict == "DISAGREE" ? kCheckFailed : kOk;
  }

  int operator()(const Row& c) {
    require_cap(c.cap);
    const DrinfeldData pi = io::parse_drinfeld(c.pi);
    const DecompositionRow row = decomposition_row(
        pi, OracleOptions{c.cap, c.reverse_ties ? TieBreak::kLexLargest : TieBreak::kLexSmallest});
    if (json_) {
      out_ << io::to_json(row).dump() << '\n';
    } else {
      for (const auto& [simple, mult] : row) {
        out_ << mult << "  V" << simple.to_string() << "  dim "
             << lp_dimension(simple_character(simple)) << '\n';
      }
    }
    return kOk;
  }

  int operator()(const IcStalk& c) {
    const ComplexStratum s(io::parse_int_list(c.w), io::parse_int_list(c.r));
    const TPoly p = ic_stalk_poly({s, io::parse_int_list(c.k)});
    if (json_) {
      out_ << io::to_json(p).dump() << '\n';
    } else {
      out_ << io::render(p) << '\n';
    }
    return kOk;
  }

  int operator()(const TsystemVerify& c) {
    if (c.nmax < 1 || c.kmin > c.kmax) throw DomainError("empty T-system range");
    return report({verify::tsystem_sweep(c.nmax, c.kmin, c.kmax)});
  }

  int operator()(const SweepVerify& c) {
    require_cap(c.config.cap);
    return report(verify::run_all(c.config));
  }

 private:
  void emit_poly(const LaurentPoly& p) {
    if (json_) {
      out_ << io::to_json(p).dump() << '\n';
    } else {
      out_ << io::render(p) << '\n';
    }
  }

  int report(const std::vector<verify::SweepReport>& reports) {
    bool ok = true;
    if (json_) {
      Json j = Json::array();
      for (const auto& r : reports) {
        Json e = Json::object();
        e["name"] = r.name;
        e["checks"] = r.checks;
        e["failures"] = r.failures;
        e["messages"] = r.messages;
        j.push_back(std::move(e));
        ok = ok && r.ok();
      }
      out_ << j.dump() << '\n';
    } else {
      for (const auto& r : reports) {
        out_ << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.checks << " checks, "
             << r.failures << " failures\n";
        for (const auto& m : r.messages) out_ << "    " << m << '\n';
        ok = ok && r.ok();
      }
    }
    return ok ? kOk : kCheckFailed;
  }

  bool json_;
  std::ostream& out_;
};

struct VerbName {
  std::string operator()(const KrChar&) const { return "kr-char"; }
  std::string operator()(const StdChar&) const { return "std-char"; }
  std::string operator()(const SimpleChar&) const { return "simple-char"; }
  std::string operator()(const Ordering&) const { return "ordering"; }
  std::string operator()(const Strings&) const { return "strings"; }
  std::string operator()(const Rigid&) const { return "rigid"; }
  std::string operator()(const Mult&) const { return "mult"; }
  std::string operator()(const Row&) const { return "row"; }
  std::string operator()(const IcStalk&) const { return "ic-stalk"; }
  std::string operator()(const TsystemVerify&) const { return "tsystem-verify"; }
  std::string operator()(const SweepVerify&) const { return "sweep-verify"; }
};

}  // namespace

std::string verb_name(const Options& options) { return std::visit(VerbName{}, options); }

int run(const Command& c, std::ostream& out, std::ostream& err) {
  try {
    return std::visit(Dispatcher(c.format, out), c.options);
  } catch (const InvariantError& e) {
    err << verb_name(c.options) << ": invariant violated: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const Error& e) {
    err << verb_name(c.options) << ": " << e.what() << '\n';
    return kBadInput;
  }
}

int cap_from_env(int fallback) {
  const char* raw = std::getenv("QCHAR_SWEEP_CAP");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 0 || v > 64) {
    throw DomainError("QCHAR_SWEEP_CAP must be an integer in [0, 64]");
  }
  return static_cast<int>(v);
}

}  // namespace qchar::cli
