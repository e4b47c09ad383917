#include "helpers.hpp"

#include "fgfc/engine.hpp"
#include "fgfc/oracle.hpp"
#include "fgfc/verify.hpp"

#include <doctest.h>

using namespace fgfc;

namespace {

Poly px(const RingElement& a) { return Poly::from_element(0, a); }
using S = std::vector<std::string>;

}  // namespace

TEST_CASE("gcd_factor_oracle examples") {
  RingDescriptor f5(BaseRing::prime_field(5), Space{{"x"}, 0});
  const RingElement x = f5.variable(0), one = f5.one();
  // x^2 + 1 = (x - 2)(x - 3) over F_5
  CHECK(render_primes(gcd_factor_oracle(GenList{f5, 0, {px(x * x + one)}})) == S{"(0; x + 2)", "(0; x + 3)"});
  CHECK(gcd_factor_oracle(GenList{f5, 0, {px(x), px(x + one)}}).empty());

  RingDescriptor q(BaseRing::rational(), Space{{"x"}, 0});
  const RingElement qx = q.variable(0), two = q.from_int(2);
  const auto qs = gcd_factor_oracle(GenList{q, 0, {px((qx * qx - two) * (two * qx + q.one())), px(qx * qx * qx - two * qx)}});
  CHECK(render_primes(qs) == S{"(0; x^2 - 2)"});
  CHECK(oracle_univariate_factors((qx * qx * qx * qx + q.from_int(4)).num(), 0).size() == 2);
}

TEST_CASE("valuation_shape_oracle examples") {
  RingDescriptor v(BaseRing::valuation(2, Domain{}), Space{{"x"}, 2});
  CHECK(render_primes(valuation_shape_oracle(op_family(v, 2))) == S{"(0; x*t1 - 1)", "(P_1; x*t2 - 1)", "(P_2)"});
  CHECK(valuation_shape_oracle(GenList{v, 0, {px(v.one())}}).empty());
  CHECK(std::string(kValuationOracleJustification).find("going-down") != std::string::npos);
}

TEST_CASE("bivariate oracle detects a wrong answer") {
  RingDescriptor r(BaseRing::prime_field(3), Space{{"x", "y"}, 0});
  const RingElement x = r.variable(0), y = r.variable(1);
  const std::vector<RingElement> gens{x * y, x * x - y};
  const auto primes = min_primes_multi(r, gens);
  CHECK(bivariate_oracle_check(r, gens, primes).empty());
  std::vector<PrimeRep> dropped(primes.begin(), primes.end() - 1);
  CHECK_FALSE(bivariate_oracle_check(r, gens, dropped).empty());
}

TEST_CASE("fitting_support_oracle examples") {
  RingDescriptor z(BaseRing::integers(), Space{});
  PresentationMatrix d{z, 2, 2, {z.from_int(4), z.zero(), z.zero(), z.from_int(9)}};
  CHECK(fitting_support_oracle(d) == std::vector<BasePrime>{BasePrime::principal(2), BasePrime::principal(3)});
  PresentationMatrix wide{z, 1, 2, {z.from_int(2), z.from_int(3)}};
  CHECK(fitting_support_oracle(wide).empty());
  PresentationMatrix tall{z, 2, 1, {z.from_int(2), z.from_int(3)}};
  CHECK(fitting_support_oracle(tall) == std::vector<BasePrime>{BasePrime::zero()});
}

TEST_CASE("oracle answers contain the ideal and are incomparable") {
  for (const BaseRing& b : {BaseRing::prime_field(5), BaseRing::rational()}) {
    const Corpus c(CorpusSpec{CorpusSpec::Kind::FieldUnivariate, b, 4, 6, 10, 7});
    for (std::size_t i = 0; i < 40; ++i) {
      const auto gens = c.ideal(i);
      GenList g{c.ring(), 0, {}};
      for (const RingElement& e : gens) g.gens.push_back(px(e));
      const auto ps = gcd_factor_oracle(g);
      for (std::size_t a = 0; a < ps.size(); ++a) {
        CHECK(ideal_in_prime(gens, ps[a]));
        for (std::size_t b2 = 0; b2 < ps.size(); ++b2) {
          if (a != b2) CHECK_FALSE(prime_contains(ps[a], ps[b2]));
        }
      }
    }
  }
}

TEST_CASE("corpus generation and comparison are deterministic") {
  const CorpusSpec spec{CorpusSpec::Kind::FieldUnivariate, BaseRing::prime_field(5), 4, 6, 10, 1234};
  const Corpus a(spec), b(spec);
  for (std::size_t i = 0; i < 20; ++i) CHECK(a.ideal(i) == b.ideal(i));
  const CompareReport r1 = corpus_compare(spec, 30, 1), r2 = corpus_compare(spec, 30, 4);
  CHECK(r1.agreed == r2.agreed);
  REQUIRE(r1.results.size() == r2.results.size());
  for (std::size_t i = 0; i < r1.results.size(); ++i) {
    CHECK(r1.results[i].engine == r2.results[i].engine);
    CHECK(r1.results[i].oracle == r2.results[i].oracle);
  }
  const CompareReport empty = corpus_compare(spec, 0);
  CHECK(empty.trials == 0);
  CHECK(empty.results.empty());
}
