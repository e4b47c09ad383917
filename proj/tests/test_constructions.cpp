#include "fgfc/constructions.hpp"
#include "fgfc/engine.hpp"
#include "fgfc/verify.hpp"

#include <doctest.h>

using namespace fgfc;

TEST_CASE("op_family examples") {
  RingDescriptor v1(BaseRing::valuation(1, Domain{}), Space{{"x"}, 1});
  const GenList f1 = op_family(v1, 1);
  REQUIRE(f1.gens.size() == 1);
  CHECK(v1.render(f1.gens[0].to_element()) == "x*t1^2 - t1");

  RingDescriptor v2(BaseRing::valuation(2, Domain{}), Space{{"x"}, 2});
  const RingElement x = v2.variable(0), a0 = v2.t(1), a1 = v2.t(2), one = v2.one();
  const GenList f2 = op_family(v2, 2);
  REQUIRE(f2.gens.size() == 2);
  CHECK(f2.gens[0].to_element() == a0 * a0 * x - a0);
  CHECK(f2.gens[1].to_element() == a1 * (a0 * x - one) * (a1 * x - one));
  try {
    op_family(v2, 3);
    FAIL("expected RankExhausted");
  } catch (const MathError& e) {
    CHECK(e.code() == MathError::Code::RankExhausted);
  }
}

TEST_CASE("op_family generators lie in the asserted primes") {
  for (std::size_t n = 1; n <= 3; ++n) {
    RingDescriptor v(BaseRing::valuation(n, Domain{}), Space{{"x"}, n});
    for (std::size_t k = 1; k <= n; ++k) {
      const std::vector<RingElement> gens = elements_of(op_family(v, k));
      for (std::size_t i = 0; i < k; ++i) {
        const PrimeRep q = PrimeRep(v.base(), v.space(), BasePrime::chain_index(i), {0})
                               .with_poly(0, v.t(i + 1) * v.variable(0) - v.one());
        CHECK(ideal_in_prime(gens, q));
      }
    }
  }
}

TEST_CASE("glued_algebra examples") {
  RingDescriptor z(BaseRing::integers(), Space{{"y"}, 0});
  const RingElement y = z.variable(0);
  const auto s = glued_algebra(z, {z.from_int(6)}, 0);
  REQUIRE(s.size() == 2);
  CHECK(s[0] == z.from_int(6) * y);
  CHECK(s[1] == y * y - y);

  RingDescriptor v(BaseRing::valuation(2, Domain{}), Space{{"x", "y"}, 2});
  CHECK(glued_algebra(v, elements_of(op_family(v, 2)), 1).size() == 3);

  RingDescriptor q(BaseRing::rational(), Space{{"y"}, 0});
  const auto sq = glued_algebra(q, {q.zero()}, 0);
  std::vector<RingElement> nonzero;
  for (const RingElement& g : sq) {
    if (!g.is_zero()) nonzero.push_back(g);
  }
  REQUIRE(nonzero.size() == 1);
  CHECK(nonzero[0] == q.variable(0) * q.variable(0) - q.variable(0));
}

TEST_CASE("fitting_F0 examples") {
  RingDescriptor z(BaseRing::integers(), Space{});
  PresentationMatrix d{z, 2, 2, {z.from_int(2), z.zero(), z.zero(), z.from_int(3)}};
  const auto f = fitting_F0(d);
  REQUIRE(f.size() == 1);
  CHECK(f[0] == z.from_int(6));
  auto mins = min_primes_base(z, f);
  std::sort(mins.begin(), mins.end());
  CHECK(mins == std::vector<BasePrime>{BasePrime::principal(2), BasePrime::principal(3)});

  const RingElement a = z.from_int(10);
  CHECK(fitting_F0(PresentationMatrix{z, 1, 1, {a}}) == std::vector<RingElement>{a});

  RingDescriptor f5(BaseRing::prime_field(5), Space{});
  auto e = [&](long long v) { return f5.from_int(v); };
  PresentationMatrix m{f5, 2, 3, {e(1), e(0), e(2), e(0), e(1), e(3)}};
  const auto minors = fitting_F0(m);
  CHECK(minors.size() == 3);
  CHECK(min_primes_base(f5, minors).empty());

  CHECK(fitting_F0(PresentationMatrix{z, 2, 1, {a, a}}) == std::vector<RingElement>{z.zero()});
  CHECK(fitting_F0(PresentationMatrix{z, 0, 2, {}}) == std::vector<RingElement>{z.one()});
  CHECK_THROWS_AS(fitting_F0(PresentationMatrix{z, 2, 2, {a}}), MathError);
}

TEST_CASE("Fitting reduction agrees with the support oracle") {
  for (const BaseRing& b : {BaseRing::integers(), BaseRing::prime_field(5)}) {
    const CompareReport r = corpus_compare(CorpusSpec{CorpusSpec::Kind::Presentation, b, 4, 6, 10, 99}, 40);
    CHECK(r.agreed == 40);
  }
}

TEST_CASE("prime_as_radical") {
  RingDescriptor v2(BaseRing::valuation(2, Domain{}), Space{{}, 2});
  CHECK(prime_as_radical(v2, 1) == v2.t(1));
  CHECK(prime_as_radical(v2, 2) == v2.t(2));
  CHECK(smallest_prime_containing(v2, prime_as_radical(v2, 1)) == BasePrime::chain_index(1));
  RingDescriptor v3(BaseRing::valuation(3, Domain{}), Space{{}, 3});
  CHECK(prime_as_radical(v3, 0).is_zero());
  CHECK_THROWS_AS(prime_as_radical(v2, 3), MathError);
}
