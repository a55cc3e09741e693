#include "doctest.h"

#include <cstdlib>
#include <sstream>

#include "json.hpp"

#include "chernflop/cli.hpp"
#include "chernflop/genera.hpp"

using namespace chernflop;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("chi_y of K3 in text form") {
  const Result r = call({"genus", "compute", "--manifold", "K3", "--genus", "chi_y"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "t^2*(2 - 20y + 2y^2)\n");
}

TEST_CASE("gcd table as CSV") {
  const Result r = call({"flops", "gcd-table", "--n-min", "5", "--n-max", "8"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "n,odd_gcd,expected,matches\n5,5,5,true\n6,7,7,true\n7,7,7,true\n8,3,3,true\n");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(call({"genus", "compute", "--manifold", "P(1) x P(1)", "--genus", "hodge"}).code == kExitUsage);
  CHECK(call({"genus", "compute", "--manifold", "P(1", "--genus", "todd"}).code == kExitUsage);
  CHECK(call({"jacobi", "expand", "--name", "wp", "--qprec", "0"}).code == kExitUsage);
  CHECK(call({"jacobi", "expand", "--name", "nope"}).code == kExitUsage);
  CHECK(call({"frobnicate"}).code == kExitUsage);
  CHECK(call({}).code == kExitUsage);
  CHECK(call({"--help"}).code == kExitOk);
}

TEST_CASE("JSON output is deterministic and round-trips") {
  const std::vector<std::string> args{"genus", "compute", "--manifold", "P(1) x P(1)", "--genus", "elliptic", "--qprec", "2", "--json"};
  const Result a = call(args);
  const Result b = call(args);
  REQUIRE(a.code == kExitOk);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["inputs"]["genus"] == "elliptic");
  const GSeries back = gseries_from_json(j["result"]);
  const Manifold m = product(projective_space(1), projective_space(1));
  CHECK(back.agrees_with(elliptic_genus(m, 2, default_window(2, 2))));
  CHECK(j["precision"]["y_window"] == nlohmann::json::array({-6, 6}));
}

TEST_CASE("verification commands") {
  CHECK(call({"flops", "verify", "--seed", "1", "--count", "3", "--qprec", "2"}).code == kExitOk);
  const Result sn = call({"flops", "sn", "--n", "7"});
  CHECK(sn.code == kExitOk);
  CHECK(sn.out.rfind("s_7 = 14 ", 0) == 0);
  CHECK(call({"flops", "sn", "--n", "6", "--base", "P(2)"}).code == kExitUsage);
  CHECK(call({"flops", "witness", "--k", "5"}).code == kExitOk);
  CHECK(call({"delta", "verify", "--qprec", "2"}).code == kExitOk);
  const Result dims = call({"delta", "dims", "--max-dim", "5", "--json"});
  CHECK(nlohmann::json::parse(dims.out)["rows"][5]["dimension"] == 6);
}

TEST_CASE("jacobi expand") {
  const Result r = call({"jacobi", "expand", "--name", "g2", "--qprec", "2"});
  CHECK(r.out == "1/12 * q^0 k^0 z^0 t^0 y^0 + 20/1 * q^1 k^0 z^0 t^0 y^0\n");
}

TEST_CASE("default precision from the environment") {
  setenv("CHERNFLOP_QPREC", "6", 1);
  CHECK(default_q_prec() == 6);
  setenv("CHERNFLOP_QPREC", "six", 1);
  CHECK(default_q_prec() == 4);
  unsetenv("CHERNFLOP_QPREC");
  CHECK(default_q_prec() == 4);
}
