// Command model and dispatcher behind the `qchar` executable.
#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "qchar/verify.hpp"

namespace qchar::cli {

enum class Format { kText, kJson };

struct KrChar {
  int n = 1;
  int k = 0;
};
struct StdChar {
  std::string pi;
  bool geometric = false;
};
struct SimpleChar {
  std::string pi;
  bool piecewise = false;
};
struct Ordering {
  std::string pi;
};
struct Strings {
  std::string pi;
  bool bruteforce = false;
  int cap = 10;
};
struct Rigid {
  std::string d;
};
struct Mult {
  std::string pi;
  std::string pitilde;
  int cap = 10;
};
struct Row {
  std::string pi;
  int cap = 10;
  bool reverse_ties = false;
};
struct IcStalk {
  std::string w;
  std::string r;
  std::string k;
};
struct TsystemVerify {
  int nmax = 5;
  int kmin = -4;
  int kmax = 4;
};
struct SweepVerify {
  verify::SweepConfig config;
};

using Options = std::variant<KrChar, StdChar, SimpleChar, Ordering, Strings, Rigid, Mult, Row,
                             IcStalk, TsystemVerify, SweepVerify>;

struct Command {
  Options options;
  Format format = Format::kText;
};

/// The verb name of each alternative, e.g. "kr-char".
std::string verb_name(const Options& options);

/// Validates and executes c. Structured output goes to out, diagnostics to
/// err. Returns 0 on success; 1 when a verification finds a disagreement or
/// failed check; 2 on invalid input or arithmetic overflow.
int run(const Command& c, std::ostream& out, std::ostream& err);

/// Multiplicity cap from QCHAR_SWEEP_CAP, or fallback when unset.
int cap_from_env(int fallback = 10);

}  // namespace qchar::cli
