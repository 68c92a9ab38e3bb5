#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "delta2/cli.hpp"
#include "support/hoa_validator.hpp"

using namespace delta2;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("normalize prints the Delta_2 result") {
  auto r = run_cli({"normalize", "F (a & G (b | F c))"});
  REQUIRE(r.code == 0);
  // first disjunct of the worked example; the rest follows disjunct order
  CHECK(r.out.rfind("F (a & (b | F c) U G b) |", 0) == 0);

  auto parsed = parse_formula(r.out.substr(0, r.out.size() - 1));
  CHECK(parsed.delta_level() <= 2);
}

TEST_CASE("normalize --report-json") {
  auto r = run_cli({"normalize", "F a", "--report-json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["variant"] == "primary");
  CHECK(j["disjuncts"].size() == 2);

  auto rd = run_cli({"normalize", "F a", "--dual", "--report-json"});
  auto jd = nlohmann::json::parse(rd.out);
  CHECK(jd["variant"] == "dual");
}

TEST_CASE("stable-nf subcommand") {
  auto r = run_cli({"stable-nf", "F (a & G (b | F c))"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "G F a & F G b | G F c & G F a\n");
}

TEST_CASE("classify subcommand") {
  CHECK(run_cli({"classify", "a W b"}).out == "Pi1\n");
  CHECK(run_cli({"classify", "X a"}).out == "Sigma1 Pi1\n");
  CHECK(run_cli({"classify", "F (a & G (b | F c))"}).out == "Sigma3\n");
}

TEST_CASE("check subcommand") {
  auto sat = run_cli({"check", "--formula", "G F a", "--lasso", "; {a}{}"});
  CHECK(sat.code == 0);
  CHECK(sat.out == "SAT\n");

  auto unsat = run_cli({"check", "--formula", "G a", "--lasso", "{} ; {a}"});
  CHECK(unsat.code == 1);
  CHECK(unsat.out == "UNSAT\n");

  // formula atoms missing from the lasso default to false
  auto mixed = run_cli({"check", "--formula", "F b", "--lasso", "; {a}"});
  CHECK(mixed.code == 1);
}

TEST_CASE("to-a1w and a1w-to-ltl round trip through JSON") {
  auto r = run_cli({"to-a1w", "F (a & G b)", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  AlternatingAutomaton a = a1w_from_json(j);
  Formula chi = a1w_to_ltl(a);
  CHECK(!equivalent_on_lassos(chi, parse_formula("F (a & G b)"),
                              Alphabet({"a", "b"}), 2, 2));
}

TEST_CASE("to-a1w emits valid HOA v1.1 by default") {
  auto r = run_cli({"to-a1w", "G (a | F b)"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("HOA: v1.1", 0) == 0);
  CHECK(hoa_validator::validate(r.out).ok());
  auto dot = run_cli({"to-a1w", "G (a | F b)", "--dot"});
  CHECK(dot.out.rfind("digraph", 0) == 0);
}

TEST_CASE("to-drw emits valid HOA v1") {
  auto r = run_cli({"to-drw", "F (a & G b)"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("HOA: v1\n", 0) == 0);
  CHECK(hoa_validator::validate(r.out).ok());
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli({"normalize"}).code == 2);
  CHECK(run_cli({"nonsense"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"normalize", "a U"}).code == 2);          // parse error
  CHECK(run_cli({"check", "--formula", "a", "--lasso", "x"}).code == 2);
}

TEST_CASE("xcheck on a small corpus is clean and deterministic") {
  std::vector<std::string> args = {"xcheck", "--seed", "5", "--count", "12",
                                   "--max-size", "8", "--prefix", "1",
                                   "--cycle", "2"};
  auto r1 = run_cli(args);
  auto r2 = run_cli(args);
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);
  CHECK(r1.out.find("12 formulas, 0 failures") != std::string::npos);

  auto empty = run_cli({"xcheck", "--count", "0"});
  CHECK(empty.code == 0);
  CHECK(empty.out.find("0 formulas, 0 failures") != std::string::npos);
}

TEST_CASE("a corrupted simplify rule is flagged by the battery") {
  XCheckOptions opt;
  opt.corpus.seed = 5;
  opt.corpus.count = 30;
  opt.corpus.max_size = 8;
  opt.max_prefix = 1;
  opt.max_cycle = 2;
  opt.with_drw = false;
  opt.corrupt_simplify = true;
  XCheckReport rep = xcheck(opt);
  CHECK(rep.failures > 0);
  CHECK(rep.text.find("simplify soundness") != std::string::npos);
}
