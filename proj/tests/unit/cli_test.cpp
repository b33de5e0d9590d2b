#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "torsionlab/cli.hpp"
#include "torsionlab/serialize.hpp"

using namespace torsionlab;
using nlohmann::json;

namespace {

ErrorResponse error_of(const DispatchResult& res) {
  REQUIRE_FALSE(res.err.empty());
  return parse_error_response(res.err);
}

}  // namespace

TEST_CASE("compute command") {
  DispatchResult res =
      dispatch({"compute", "--group", "so(3,1)", "--weight", "1,1", "--m", "1"});
  REQUIRE(res.exit_code == 0);
  ComputeResponse r = parse_compute_response(res.out);
  CHECK(r.group == "so(3,1)");
  CHECK(r.result.poly == Poly(Var::m, {Rational(1, 3), Rational(2), Rational(2)}));
  REQUIRE(r.value.has_value());
  CHECK(*r.value == Rational(13, 3));
  CHECK(*r.m == 1);

  DispatchResult sym = dispatch({"compute", "--group", "sl3", "--weight", "1,0", "--symbolic"});
  REQUIRE(sym.exit_code == 0);
  ComputeResponse rs = parse_compute_response(sym.out);
  CHECK(rs.result.poly ==
        Poly(Var::m, {Rational(1, 2), Rational(4, 3), Rational(1), Rational(2, 9)}));
  CHECK(rs.result.prefactor == (SymbolicConstant{Rational(1), 1, 1, -1, {}}));
  CHECK_FALSE(rs.m.has_value());

  DispatchResult latex =
      dispatch({"compute", "--group", "sl3", "--weight", "1,0", "--format", "latex"});
  REQUIRE(latex.exit_code == 0);
  CHECK(latex.out.find("\\pi") != std::string::npos);
  CHECK(latex.out.find("m^{3}") != std::string::npos);

  DispatchResult text =
      dispatch({"compute", "--group", "so(3,1)", "--weight", "1,1", "--format", "text"});
  REQUIRE(text.exit_code == 0);
  CHECK(text.out.find("2*m^2 + 2*m + 1/3") != std::string::npos);
}

TEST_CASE("compute error surfaces") {
  DispatchResult inv = dispatch({"compute", "--group", "so(3,1)", "--weight", "1,0"});
  CHECK(inv.exit_code == 2);
  CHECK(error_of(inv).code == "THETA_INVARIANT_WEIGHT");
  CHECK(inv.out.empty());

  DispatchResult badgroup = dispatch({"compute", "--group", "so(4,2)", "--weight", "1,1"});
  CHECK(badgroup.exit_code == 2);
  CHECK(error_of(badgroup).code == "BAD_GROUP");

  DispatchResult notdom = dispatch({"compute", "--group", "so(3,1)", "--weight", "1,2"});
  CHECK(notdom.exit_code == 2);
  CHECK(error_of(notdom).code == "NOT_DOMINANT");

  DispatchResult missing = dispatch({"compute", "--group", "so(3,1)"});
  CHECK(missing.exit_code == 2);
  CHECK(error_of(missing).code == "BAD_ARGS");

  DispatchResult unknown = dispatch({"frobnicate"});
  CHECK(unknown.exit_code == 2);
  CHECK(error_of(unknown).code == "BAD_ARGS");

  DispatchResult badcoord = dispatch({"compute", "--group", "so(3,1)", "--weight", "1,x"});
  CHECK(badcoord.exit_code == 2);
  CHECK(error_of(badcoord).code == "PARSE_ERROR");
}

TEST_CASE("dim command") {
  DispatchResult res = dispatch({"dim", "--group", "sl3", "--weight", "1,0", "--m", "2"});
  REQUIRE(res.exit_code == 0);
  DimResponse r = parse_dim_response(res.out);
  CHECK(r.dim == Poly(Var::m, {Rational(1), Rational(3, 2), Rational(1, 2)}));
  REQUIRE(r.value.has_value());
  CHECK(*r.value == Rational(6));
}

TEST_CASE("kostant command normalizes first") {
  DispatchResult res = dispatch({"kostant", "--group", "sl3", "--weight", "1,2"});
  REQUIRE(res.exit_code == 0);
  KostantResponse r = parse_kostant_response(res.out);
  CHECK(r.weight == std::vector<Rational>{Rational(1), Rational(2)});
  CHECK(r.normalized_weight == std::vector<Rational>{Rational(2), Rational(1)});
  REQUIRE(r.data.size() == 3);
  CHECK(r.data[0].lambda == Poly::affine(Var::m, Rational(4, 3), Rational(1)));

  DispatchResult so = dispatch({"kostant", "--group", "so(3,1)", "--weight", "2,-1"});
  REQUIRE(so.exit_code == 0);
  KostantResponse rs = parse_kostant_response(so.out);
  CHECK(rs.normalized_weight == std::vector<Rational>{Rational(2), Rational(1)});
}

TEST_CASE("plancherel command") {
  DispatchResult res = dispatch({"plancherel", "--group", "so(3,1)", "--sigma", "2"});
  REQUIRE(res.exit_code == 0);
  PlancherelResponse r = parse_plancherel_response(res.out);
  CHECK(r.density == Poly(Var::t, {Rational(-4), Rational(0), Rational(1)}));

  DispatchResult wrong = dispatch({"plancherel", "--group", "so(5,3)", "--sigma", "2,1"});
  CHECK(wrong.exit_code == 2);
  CHECK(error_of(wrong).code == "BAD_SIGMA");
}

TEST_CASE("gap command") {
  DispatchResult res =
      dispatch({"gap", "--group", "sl3", "--weight", "1,0", "--m", "1", "--p", "0"});
  REQUIRE(res.exit_code == 0);
  GapResponse r = parse_gap_response(res.out);
  CHECK(r.gap == Rational(10, 9));

  DispatchResult badp =
      dispatch({"gap", "--group", "sl3", "--weight", "1,0", "--m", "1", "--p", "7"});
  CHECK(badp.exit_code == 2);
  CHECK(error_of(badp).code == "BAD_ARGS");
}

TEST_CASE("constant table") {
  DispatchResult res = dispatch({"table", "corollary-constants"});
  REQUIRE(res.exit_code == 0);
  TableResponse r = parse_table_response(res.out);
  REQUIRE(r.rows.size() == 12);

  CHECK(r.rows[0].group == "so(3,1)");
  CHECK(r.rows[0].constant == (SymbolicConstant{Rational(-1), 1, 0, -1, {}}));
  REQUIRE(r.rows[0].leading.has_value());
  CHECK(*r.rows[0].leading == Rational(1));

  bool saw53 = false, saw75 = false;
  for (const auto& row : r.rows) {
    if (row.group == "so(5,3)") {
      saw53 = true;
      CHECK(row.constant == (SymbolicConstant{Rational(-6), 1, 0, -1, {}}));
    }
    if (row.group == "so(7,5)") {
      saw75 = true;
      CHECK(row.constant == (SymbolicConstant{Rational(-20), 1, 0, -1, {}}));
    }
    REQUIRE(row.leading.has_value());
    if (row.group != "sl3") CHECK(*row.leading == Rational(1));
  }
  CHECK(saw53);
  CHECK(saw75);

  CHECK(r.rows.back().group == "sl3");
  CHECK(r.rows.back().constant == (SymbolicConstant{Rational(4, 9), 1, 0, -1, {}}));
  CHECK(*r.rows.back().leading == Rational(4, 9));

  DispatchResult unknown = dispatch({"table", "no-such-table"});
  CHECK(unknown.exit_code == 2);
  CHECK(error_of(unknown).code == "BAD_ARGS");
}

TEST_CASE("verify command smoke") {
  DispatchResult res = dispatch({"verify", "--quick", "--suite", "exactalg", "--suite",
                                 "vanishing", "--seed", "11"});
  REQUIRE(res.exit_code == 0);
  json j = json::parse(res.out);
  CHECK(j["command"] == "verify");
  CHECK(j["seed"] == 11);
  CHECK(j["passed"] == true);
  REQUIRE(j["suites"].size() == 2);
  CHECK(j["suites"][0]["name"] == "exactalg");
  CHECK(j["suites"][0]["passed"] == true);
  CHECK(j["suites"][0]["checks"].get<long>() > 0);

  DispatchResult text = dispatch({"verify", "--quick", "--suite", "vanishing", "--format", "text"});
  REQUIRE(text.exit_code == 0);
  CHECK(text.out.find("suite vanishing: pass") != std::string::npos);

  DispatchResult unknown = dispatch({"verify", "--suite", "nope"});
  CHECK(unknown.exit_code == 2);
  CHECK(error_of(unknown).code == "BAD_ARGS");
}

TEST_CASE("seed environment override") {
  setenv("TORSIONLAB_SEED", "77", 1);
  DispatchResult res = dispatch({"verify", "--quick", "--suite", "vanishing"});
  unsetenv("TORSIONLAB_SEED");
  REQUIRE(res.exit_code == 0);
  json j = json::parse(res.out);
  CHECK(j["seed"] == 77);

  setenv("TORSIONLAB_SEED", "77", 1);
  DispatchResult flag = dispatch({"verify", "--quick", "--suite", "vanishing", "--seed", "5"});
  unsetenv("TORSIONLAB_SEED");
  REQUIRE(flag.exit_code == 0);
  CHECK(json::parse(flag.out)["seed"] == 5);
}

TEST_CASE("golden corpus regeneration matches the committed file") {
  std::string tmp = "/tmp/torsionlab_golden_regen.jsonl";
  DispatchResult res = dispatch({"golden-write", "--out", tmp});
  REQUIRE(res.exit_code == 0);

  std::ifstream regen(tmp), committed(std::string(TORSIONLAB_DATA_DIR) + "/golden.jsonl");
  REQUIRE(regen.good());
  REQUIRE(committed.good());
  std::string a, b;
  int lines = 0;
  while (std::getline(committed, a)) {
    REQUIRE(std::getline(regen, b));
    CHECK(parse_golden_record(a) == parse_golden_record(b));
    ++lines;
  }
  CHECK_FALSE(std::getline(regen, b));
  CHECK(lines == 24);
  std::remove(tmp.c_str());
}

TEST_CASE("help output") {
  DispatchResult res = dispatch({"--help"});
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("compute") != std::string::npos);
  CHECK(res.out.find("verify") != std::string::npos);
}
