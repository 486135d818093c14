#include <doctest.h>

#include <sstream>

#include "deltamat/cli.hpp"
#include "deltamat/io.hpp"
#include "deltamat/iso.hpp"

using namespace deltamat;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) { return std::string(DELTAMAT_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("dn piped into poly gives the half-width polynomial") {
  const Run dn = cli({"dn", "3"});
  REQUIRE(dn.code == 0);
  const Run poly = cli({"poly", "--half-width"}, dn.out);
  CHECK(poly.code == 0);
  CHECK(poly.out == "8*z^1\n");
  CHECK(cli({"poly", "--pairs"}, dn.out).out == "2:8\n");
}

TEST_CASE("width and binary verdicts") {
  CHECK(cli({"width", data("s5.json")}).out == "r_min=0 r_max=4 width=4\n");
  const Run b = cli({"binary", data("s4.json"), "--method", "both"});
  CHECK(b.code == 1);
  CHECK(b.out.rfind("non-binary\n", 0) == 0);
  const Run d3 = cli({"binary", "--method", "matrix"}, cli({"dn", "3"}).out);
  CHECK(d3.code == 0);
  CHECK(d3.out == "binary\ntwist: {}\nmatrix:\n  011\n  101\n  110\n");
}

TEST_CASE("validate reports a witness") {
  CHECK(cli({"validate", data("s1.json")}).code == 0);
  const Run bad = cli({"validate"}, R"({"elements":["1","2","3"],"feasible":[[],["1","2","3"]]})");
  CHECK(bad.code == 1);
  CHECK(bad.out == "invalid: F1={} F2={1,2,3} x=1\n");
}

TEST_CASE("transforming commands emit set-system files") {
  const Run t = cli({"twist", data("s5.json"), "--set", "1,3"});
  REQUIRE(t.code == 0);
  CHECK(t.out ==
        "{\"elements\":[\"1\",\"2\",\"3\",\"4\"],\"feasible\":[[\"1\",\"2\"],[\"1\",\"3\"],[\"2\",\"3\"],"
        "[\"1\",\"4\"],[\"2\",\"4\"],[\"3\",\"4\"]]}\n");
  CHECK(cli({"validate"}, t.out).code == 0);

  const Run d = cli({"dual", data("s1.json")});
  CHECK(parse_set_system(d.out) == dual(excluded_minor(1)).system());

  const Run m = cli({"minor", data("s1.json"), "--delete", "1"});
  CHECK(m.out == "{\"elements\":[\"2\",\"3\"],\"feasible\":[[],[\"2\",\"3\"]]}\n");
  const Run c = cli({"minor", data("s1.json"), "--contract", "1"});
  CHECK(c.out == "{\"elements\":[\"2\",\"3\"],\"feasible\":[[\"2\"],[\"3\"],[\"2\",\"3\"]]}\n");
}

TEST_CASE("iso command") {
  CHECK(cli({"iso", data("s1.json"), data("s1.json")}).code == 0);
  const Run no = cli({"iso", data("s1.json"), data("s2.json")});
  CHECK(no.code == 1);
  CHECK(no.out == "not isomorphic\n");
}

TEST_CASE("malformed input exits 2 naming the token") {
  const Run unknown = cli({"twist", data("s1.json"), "--set", "9"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("'9'") != std::string::npos);

  const Run dup = cli({"width"}, R"({"elements":["1"],"feasible":[[],[]]})");
  CHECK(dup.code == 2);
  CHECK(dup.err.find("duplicate feasible set {}") != std::string::npos);

  const Run flag = cli({"width", data("s1.json"), "--frobnicate"});
  CHECK(flag.code == 2);
  CHECK(flag.err.find("--frobnicate") != std::string::npos);

  CHECK(cli({"dn", "31"}).code == 2);
  CHECK(cli({"poly", "--half-width", data("s1.json")}).code == 2);
  CHECK(cli({"width", "/nonexistent/file.json"}).code == 2);
  CHECK(cli({"search", "--n", "7"}).code == 2);
  CHECK(cli({}).code == 2);
}

TEST_CASE("search output is byte-identical across worker counts") {
  const Run one = cli({"search", "--n", "5", "--parallel", "1"});
  const Run four = cli({"search", "--n", "5", "--parallel", "4"});
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
  CHECK(one.out.find("violations:              0") != std::string::npos);

  const Run s1 = cli({"search", "--n", "6", "--sample", "2000", "--seed", "3", "--format", "kv"});
  const Run s2 = cli({"search", "--n", "6", "--sample", "2000", "--seed", "3", "--format", "kv",
                      "--parallel", "3"});
  CHECK(s1.out == s2.out);
  CHECK(s1.out.find("mode=sampled\nseed=3\n") != std::string::npos);
}

TEST_CASE("verify-paper runs the acceptance table") {
  const Run r = cli({"verify-paper", "--max-n", "4", "--sample-trials", "500"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("all checks passed") != std::string::npos);
}
