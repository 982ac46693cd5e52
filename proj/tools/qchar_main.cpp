// qchar: q-characters and decomposition numbers for quantum affine sl2.
#include <CLI11.hpp>
#include <iostream>

#include "qchar/cli.hpp"
#include "qchar/errors.hpp"

using namespace qchar::cli;

int main(int argc, char** argv) {
  CLI::App app{"q-characters, string decompositions and decomposition numbers for quantum affine sl2"};
  app.require_subcommand(1);

  int default_cap = 10;
  try {
    default_cap = cap_from_env(10);
  } catch (const qchar::Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }

  std::string format = "text";
  Command command;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  KrChar kr;
  auto* kr_cmd = app.add_subcommand("kr-char", "q-character of the KR module W_{n,k}");
  kr_cmd->add_option("--n", kr.n, "String length")->required();
  kr_cmd->add_option("--k", kr.k, "Base spectral exponent");
  add_format(kr_cmd);
  kr_cmd->callback([&] { command.options = kr; });

  StdChar std_char;
  auto* std_cmd = app.add_subcommand("std-char", "q-character of the standard module M(pi)");
  std_cmd->add_option("--pi", std_char.pi, "Drinfeld data, e.g. 0:1,1:3")->required();
  std_cmd->add_flag("--geometric", std_char.geometric, "Use the Euler-characteristic expansion");
  add_format(std_cmd);
  std_cmd->callback([&] { command.options = std_char; });

  SimpleChar simple;
  auto* simple_cmd = app.add_subcommand("simple-char", "q-character of the simple module V(pi)");
  simple_cmd->add_option("--pi", simple.pi, "Drinfeld data")->required();
  simple_cmd->add_flag("--piecewise", simple.piecewise, "Expand through the A^-1 string form");
  add_format(simple_cmd);
  simple_cmd->callback([&] { command.options = simple; });

  Ordering ordering;
  auto* ord_cmd = app.add_subcommand("ordering", "Tensor order of fundamentals in M(pi)");
  ord_cmd->add_option("--pi", ordering.pi, "Drinfeld data")->required();
  add_format(ord_cmd);
  ord_cmd->callback([&] { command.options = ordering; });

  Strings strings;
  strings.cap = default_cap;
  auto* str_cmd = app.add_subcommand("strings", "Split Drinfeld data into q-strings in general position");
  str_cmd->add_option("--pi", strings.pi, "Drinfeld data")->required();
  str_cmd->add_flag("--bruteforce", strings.bruteforce, "Use exhaustive search");
  str_cmd->add_option("--cap", strings.cap, "Multiplicity cap for exhaustive search");
  add_format(str_cmd);
  str_cmd->callback([&] { command.options = strings; });

  Rigid rigid;
  auto* rigid_cmd = app.add_subcommand("rigid", "Rigid A_n representation of a dimension vector");
  rigid_cmd->add_option("--d", rigid.d, "Dimension vector, e.g. 2,1")->required();
  add_format(rigid_cmd);
  rigid_cmd->callback([&] { command.options = rigid; });

  Mult mult;
  mult.cap = default_cap;
  auto* mult_cmd = app.add_subcommand("mult", "[M(pi):V(pitilde)] by closed formula and elimination");
  mult_cmd->add_option("--pi", mult.pi, "Standard module Drinfeld data")->required();
  mult_cmd->add_option("--pitilde", mult.pitilde, "Simple module Drinfeld data")->required();
  mult_cmd->add_option("--cap", mult.cap, "Multiplicity cap for elimination");
  add_format(mult_cmd);
  mult_cmd->callback([&] { command.options = mult; });

  Row row;
  row.cap = default_cap;
  auto* row_cmd = app.add_subcommand("row", "All composition factors of M(pi)");
  row_cmd->add_option("--pi", row.pi, "Drinfeld data")->required();
  row_cmd->add_option("--cap", row.cap, "Multiplicity cap for elimination");
  row_cmd->add_flag("--reverse-ties", row.reverse_ties, "Break ties lexicographically largest first");
  add_format(row_cmd);
  row_cmd->callback([&] { command.options = row; });

  IcStalk ic;
  auto* ic_cmd = app.add_subcommand("ic-stalk", "IC stalk polynomial of closure O(r) at O(r-k)");
  ic_cmd->add_option("--w", ic.w, "Dimensions w_0,..,w_{n-1}")->required();
  ic_cmd->add_option("--r", ic.r, "Ranks r_0,..,r_{n-2}")->required();
  ic_cmd->add_option("--k", ic.k, "Rank drops k_0,..,k_{n-2}")->required();
  add_format(ic_cmd);
  ic_cmd->callback([&] { command.options = ic; });

  TsystemVerify ts;
  auto* ts_cmd = app.add_subcommand("tsystem-verify", "Check the T-system over a grid");
  ts_cmd->add_option("--nmax", ts.nmax, "Largest n");
  ts_cmd->add_option("--kmin", ts.kmin, "Smallest base exponent");
  ts_cmd->add_option("--kmax", ts.kmax, "Largest base exponent");
  add_format(ts_cmd);
  ts_cmd->callback([&] { command.options = ts; });

  SweepVerify sweep;
  sweep.config.cap = default_cap;
  auto& cfg = sweep.config;
  auto* sw_cmd = app.add_subcommand("sweep-verify", "Run every cross-check sweep");
  sw_cmd->add_option("--tsystem-nmax", cfg.tsystem_nmax);
  sw_cmd->add_option("--tsystem-kmin", cfg.tsystem_kmin);
  sw_cmd->add_option("--tsystem-kmax", cfg.tsystem_kmax);
  sw_cmd->add_option("--binom-amax", cfg.binom_amax);
  sw_cmd->add_option("--std-window", cfg.standard_window);
  sw_cmd->add_option("--std-degree", cfg.standard_degree);
  sw_cmd->add_option("--row-window", cfg.row_window);
  sw_cmd->add_option("--row-degree", cfg.row_degree);
  sw_cmd->add_option("--strings-n", cfg.strings_n);
  sw_cmd->add_option("--strings-sum", cfg.strings_sum);
  sw_cmd->add_option("--ic-n", cfg.ic_n);
  sw_cmd->add_option("--ic-wmax", cfg.ic_wmax);
  sw_cmd->add_option("--cap", cfg.cap, "Multiplicity cap for brute force and elimination");
  add_format(sw_cmd);
  sw_cmd->callback([&] { command.options = sweep; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    // --help and --version exit 0; every usage error maps to 2.
    return rc == 0 ? 0 : 2;
  }
  command.format = format == "json" ? Format::kJson : Format::kText;
  return run(command, std::cout, std::cerr);
}
