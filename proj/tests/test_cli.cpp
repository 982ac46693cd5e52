#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "qchar/cli.hpp"
#include "qchar/errors.hpp"

using namespace qchar::cli;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(Options options, Format format = Format::kText) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = run(Command{std::move(options), format}, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("verb names") {
  CHECK(verb_name(KrChar{}) == "kr-char");
  CHECK(verb_name(Mult{}) == "mult");
  CHECK(verb_name(SweepVerify{}) == "sweep-verify");
  CHECK(verb_name(TsystemVerify{}) == "tsystem-verify");
}

TEST_CASE("mult on the worked example") {
  const Result r = invoke(Mult{"0:1,1:3", "1:2", 10});
  CHECK(r.status == 0);
  CHECK(r.out.find("closed   = 1\n") != std::string::npos);
  CHECK(r.out.find("oracle   = 1\n") != std::string::npos);
  CHECK(r.out.find("verdict  = AGREE\n") != std::string::npos);

  const Result j = invoke(Mult{"0:1,1:3", "1:2", 10}, Format::kJson);
  CHECK(j.status == 0);
  CHECK(j.out ==
        R"({"pi":{"zeros":{"0":1,"1":3}},"pitilde":{"zeros":{"1":2}},"rank_tuple":[1],)"
        R"("sparse":true,"closed":1,"oracle":1,"verdict":"AGREE"})"
        "\n");
}

TEST_CASE("mult outside the closed formula") {
  const Result r = invoke(Mult{"0:2,1:2", "0:1,1:1", 10});
  CHECK(r.status == 0);
  CHECK(r.out.find("closed   = n/a\n") != std::string::npos);
  CHECK(r.out.find("oracle   = 2\n") != std::string::npos);
  CHECK(r.out.find("NOT-APPLICABLE") != std::string::npos);
}

TEST_CASE("row json") {
  const Result r = invoke(Row{"0:1,1:1", 10, false}, Format::kJson);
  CHECK(r.status == 0);
  CHECK(r.out ==
        R"([{"simple":{"zeros":{}},"mult":1},{"simple":{"zeros":{"0":1,"1":1}},"mult":1}])"
        "\n");
}

TEST_CASE("character verbs") {
  CHECK(invoke(KrChar{2, 0}).out == "Y[0]*Y[1] + Y[0]*Y[2]^-1 + Y[1]^-1*Y[2]^-1\n");
  CHECK(invoke(SimpleChar{"0:1,1:1", false}).out == invoke(KrChar{2, 0}).out);
  CHECK(invoke(StdChar{"0:1,1:2", true}).out == invoke(StdChar{"0:1,1:2", false}).out);
  CHECK(invoke(IcStalk{"1,2,1", "1,1", "1,1"}).out == "1 + t\n");
  CHECK(invoke(Rigid{"2,1"}).status == 0);
  CHECK(invoke(Strings{"0:2,1:1", true, 10}).out == invoke(Strings{"0:2,1:1", false, 10}).out);
  CHECK(invoke(Ordering{"0:1,1:1"}).status == 0);
}

TEST_CASE("tsystem-verify") {
  const Result r = invoke(TsystemVerify{5, -4, 4});
  CHECK(r.status == 0);
  CHECK(r.out.find("45 checks, 0 failures") != std::string::npos);
}

TEST_CASE("sweep-verify with a small grid") {
  SweepVerify s;
  s.config.tsystem_nmax = 2;
  s.config.standard_window = 2;
  s.config.standard_degree = 3;
  s.config.row_window = 2;
  s.config.row_degree = 3;
  s.config.strings_n = 3;
  s.config.strings_sum = 4;
  s.config.ic_n = 3;
  s.config.ic_wmax = 2;
  const Result r = invoke(s);
  CHECK(r.status == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("bad input exits 2 with a diagnostic") {
  const Result a = invoke(Mult{"0:0", "", 10});
  CHECK(a.status == 2);
  CHECK(a.out.empty());
  CHECK_FALSE(a.err.empty());
  CHECK(invoke(IcStalk{"2,2", "1", "0"}).status == 2);
  CHECK(invoke(IcStalk{"1,0", "1", "0"}).status == 2);
  CHECK(invoke(KrChar{-1, 0}).status == 2);
  CHECK(invoke(Row{"0:11", 10, false}).status == 2);
}

TEST_CASE("output is deterministic") {
  for (int rep = 0; rep < 3; ++rep) {
    CHECK(invoke(Row{"0:1,1:2,2:1", 10, false}, Format::kJson).out ==
          invoke(Row{"0:1,1:2,2:1", 10, true}, Format::kJson).out);
    CHECK(invoke(StdChar{"0:2,1:1,3:1", false}, Format::kJson).out ==
          invoke(StdChar{"0:2,1:1,3:1", false}, Format::kJson).out);
  }
}

TEST_CASE("cap_from_env") {
  const char* saved = std::getenv("QCHAR_SWEEP_CAP");
  const std::string keep = saved ? saved : "";
  ::unsetenv("QCHAR_SWEEP_CAP");
  CHECK(cap_from_env(7) == 7);
  ::setenv("QCHAR_SWEEP_CAP", "12", 1);
  CHECK(cap_from_env(7) == 12);
  ::setenv("QCHAR_SWEEP_CAP", "12x", 1);
  CHECK_THROWS_AS(cap_from_env(7), qchar::DomainError);
  ::setenv("QCHAR_SWEEP_CAP", "65", 1);
  CHECK_THROWS_AS(cap_from_env(7), qchar::DomainError);
  if (saved) {
    ::setenv("QCHAR_SWEEP_CAP", keep.c_str(), 1);
  } else {
    ::unsetenv("QCHAR_SWEEP_CAP");
  }
}

}  // TEST_SUITE
