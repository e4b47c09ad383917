#include "helpers.hpp"

#include "fgfc/cli.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace fgfc;

namespace {

int run(std::vector<std::string> args, std::string* out_text = nullptr) {
  args.insert(args.begin(), "fgfc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int rc = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text != nullptr) *out_text = out.str() + err.str();
  return rc;
}

}  // namespace

TEST_CASE("ring grammar") {
  CHECK(parse_ring("Q") == BaseRing::rational());
  CHECK(parse_ring("Z") == BaseRing::integers());
  CHECK(parse_ring("Fp(7)") == BaseRing::prime_field(7));
  CHECK(parse_ring("Zmod(12)") == BaseRing::integers_mod(12));
  CHECK(parse_ring("Val(rank=2, base=Q)").rank == 2);
  CHECK_THROWS_AS(parse_ring("Fp(4)"), ParseError);
  CHECK_THROWS_AS(parse_ring("Zmod(1)"), ParseError);
  CHECK_THROWS_AS(parse_ring("R"), ParseError);
}

TEST_CASE("ideal grammar") {
  const Problem p = parse_problem("Val(rank=2, base=Q)", "a0^2*x - a0; t2*(x - 1)");
  REQUIRE(p.gens.size() == 2);
  CHECK(p.ring.render(p.gens[0]) == "x*t1^2 - t1");
  CHECK(p.vars == std::vector<std::string>{"x"});
  CHECK(parse_problem("Q", "x1*x2 - 1").vars == std::vector<std::string>{"x1", "x2"});
  CHECK(parse_problem("Z", "6").vars == std::vector<std::string>{"x"});
  CHECK(parse_problem("Q", "x/2 + 1").ring.render(parse_problem("Q", "x/2 + 1").gens[0]) == "1/2*x + 1");

  try {
    parse_problem("Z", "2*x +\n  * 3");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
    CHECK_FALSE(e.expected().empty());
  }
  CHECK_THROWS_AS(parse_problem("Val(rank=1, base=Q)", "a1*x"), ParseError);
  CHECK_THROWS_AS(parse_problem("Z", "x/2"), ParseError);
  CHECK_THROWS_AS(parse_problem("Q", "x + x1"), ParseError);
}

TEST_CASE("presets") {
  const Problem o = make_preset("opex", 2, 2);
  CHECK(o.gens.size() == 2);
  CHECK(make_preset("glued", 3, 1).vars == std::vector<std::string>{"x", "y"});
  CHECK_THROWS_AS(make_preset("opex", 2, 3), ParseError);
  CHECK_THROWS_AS(make_preset("opex", 2, 0), ParseError);
  CHECK(parse_problem("", "preset:opex(2,1)").preset == "opex");
}

TEST_CASE("render then parse is the identity") {
  const std::vector<std::string> rings{"Q", "Fp(7)", "Z", "Val(rank=2, base=Q)"};
  std::mt19937_64 g(42);
  for (const auto& rt : rings) {
    const Problem p = parse_problem(rt, "x");
    for (int i = 0; i < 50; ++i) {
      const RingElement a = rt[0] == 'V' ? test::random_valuation_element(p.ring, g) : test::random_poly(p.ring, g);
      const std::string s = p.ring.render(a);
      const auto back = parse_ideal(p.ring, s);
      REQUIRE(back.size() == 1);
      CHECK_MESSAGE(back[0] == a, s);
    }
  }
}

TEST_CASE("exit status table") {
  std::string o;
  CHECK(run({"--ring", "Z", "--ideal", "6"}, &o) == kExitOk);
  CHECK(o.find("(2)") != std::string::npos);
  CHECK(run({"--ideal", "preset:opex(2,2)", "--verify"}, &o) == kExitOk);
  CHECK(o.find("agree") != std::string::npos);
  CHECK(run({"--bogus"}) == kExitUsage);
  CHECK(run({"--ring", "Z"}) == kExitUsage);
  CHECK(run({"--ring", "Fp(4)", "--ideal", "x"}) == kExitParse);
  CHECK(run({"--ring", "Z", "--ideal", "2*x +"}) == kExitParse);
  CHECK(run({"--ring", "Q", "--ideal", "x^2 + 1; y^2 - 2", "--vars", "x,y"}) == kExitCapability);
  CHECK(run({"--ring", "Z", "--ideal", "6", "--format", "json"}, &o) == kExitOk);
  CHECK(o.find("\"schema_version\"") != std::string::npos);
}
