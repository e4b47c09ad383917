#include "helpers.hpp"

#include "fgfc/constructions.hpp"
#include "fgfc/primes.hpp"

#include <doctest.h>

using namespace fgfc;

namespace {

struct V2 {
  RingDescriptor r{BaseRing::valuation(2, Domain{}), Space{{"x"}, 2}};
  RingElement x = r.variable(0), a0 = r.t(1), a1 = r.t(2), one = r.one();
  PrimeRep chain(std::size_t j) const { return PrimeRep(r.base(), r.space(), BasePrime::chain_index(j), {0}); }
};

}  // namespace

TEST_CASE("ideal_in_prime examples") {
  V2 v;
  const PrimeRep q0 = v.chain(0).with_poly(0, v.a0 * v.x - v.one);
  CHECK(ideal_in_prime(std::vector<RingElement>{v.a0 * (v.a0 * v.x - v.one)}, q0));
  CHECK(ideal_in_prime(op_family(v.r, 2), v.chain(2)));
  CHECK_FALSE(ideal_in_prime(op_family(v.r, 2), v.chain(1)));

  RingDescriptor q(BaseRing::rational(), Space{{"x"}, 0});
  const PrimeRep qx = PrimeRep(q.base(), q.space(), BasePrime::zero(), {0}).with_poly(0, q.variable(0));
  CHECK_FALSE(ideal_in_prime(std::vector<RingElement>{q.variable(0) + q.one()}, qx));
}

TEST_CASE("prime_contains examples") {
  V2 v;
  const PrimeRep zero = v.chain(0);
  const PrimeRep p2 = v.chain(2);
  const PrimeRep p1a1 = v.chain(1).with_poly(0, v.a1 * v.x - v.one);
  for (const PrimeRep& any : {zero, p2, p1a1}) CHECK(prime_contains(any, zero));
  CHECK_FALSE(prime_contains(p2, p1a1));
  CHECK_FALSE(prime_contains(p1a1, p2));
  CHECK(prime_contains(p2, v.chain(1)));
  CHECK(prime_equal(p1a1, p1a1));
}

TEST_CASE("minimal_filter examples") {
  RingDescriptor z(BaseRing::integers(), Space{{"x"}, 0});
  const PrimeRep two(z.base(), z.space(), BasePrime::principal(2), {0});
  const PrimeRep two_x = two.with_poly(0, z.variable(0));
  const std::vector<RingElement> ideal{z.from_int(2)};
  auto out = minimal_filter({two, two_x}, ideal);
  REQUIRE(out.size() == 1);
  CHECK(prime_equal(out[0], two));
  CHECK(minimal_filter({two_x}, ideal).size() == 1);
  CHECK_THROWS_AS(minimal_filter({two}, {z.from_int(3)}), std::logic_error);

  V2 v;
  const std::vector<PrimeRep> three{v.chain(0).with_poly(0, v.a0 * v.x - v.one),
                                    v.chain(1).with_poly(0, v.a1 * v.x - v.one), v.chain(2)};
  CHECK(minimal_filter(three, elements_of(op_family(v.r, 2))).size() == 3);
}

TEST_CASE("contract_from_localization examples") {
  RingDescriptor z(BaseRing::integers(), Space{{"x"}, 0});
  const RingElement x = z.variable(0);
  const PrimeRep loc = PrimeRep(z.base(), z.space(), BasePrime::zero(), {0})
                           .with_poly(0, x + z.from_int(3) / z.from_int(2));
  const PrimeRep c = contract_from_localization(loc, z.from_int(2));
  REQUIRE(c.polys().size() == 1);
  CHECK(z.render(c.polys()[0]) == "2*x + 3");
  CHECK(c.contains(z.from_int(2) * x + z.from_int(3)));
  CHECK_FALSE(c.contains(z.from_int(2)));

  const PrimeRep plain = PrimeRep(z.base(), z.space(), BasePrime::principal(3), {0}).with_poly(0, x + z.one());
  CHECK(prime_equal(contract_from_localization(plain, z.from_int(2)), plain));
  const PrimeRep zero(z.base(), z.space(), BasePrime::zero(), {0});
  CHECK(prime_equal(contract_from_localization(zero, z.from_int(5)), zero));
  const PrimeRep two(z.base(), z.space(), BasePrime::principal(2), {0});
  CHECK_THROWS_AS(two.with_poly(0, z.from_int(2) * x + z.one()), MathError);
}

TEST_CASE("localization round trip on the representation shapes") {
  RingDescriptor z(BaseRing::integers(), Space{{"x"}, 0});
  const RingElement x = z.variable(0);
  std::mt19937_64 g(2);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const long long p = std::vector<long long>{0, 2, 3, 5, 7}[uniform(g, 0, 4)];
    PrimeRep q(z.base(), z.space(), p == 0 ? BasePrime::zero() : BasePrime::principal(p), {0});
    // over (p) a leading coefficient divisible by p would not be a generator
    const long long lead = p == 0 ? uniform(g, 1, 4) : 1;
    if (uniform(g, 0, 2) > 0) q = q.with_poly(0, z.from_int(lead) * x + z.from_int(uniform(g, -5, 5)));
    const RingElement c = z.from_int(std::vector<long long>{2, 3, 6, 7}[uniform(g, 0, 3)]);
    if (q.contains(c)) continue;
    ++checked;
    CHECK(prime_equal(contract_from_localization(q, c), q));
  }
  CHECK(checked > 50);
}

TEST_CASE("minimal_filter output is incomparable and covers the discarded") {
  RingDescriptor z(BaseRing::integers(), Space{{"x"}, 0});
  const RingElement x = z.variable(0);
  std::mt19937_64 g(8);
  for (int i = 0; i < 100; ++i) {
    std::vector<PrimeRep> cands;
    for (long long k = uniform(g, 1, 6); k > 0; --k) {
      const long long p = std::vector<long long>{0, 2, 3}[uniform(g, 0, 2)];
      PrimeRep q(z.base(), z.space(), p == 0 ? BasePrime::zero() : BasePrime::principal(p), {0});
      if (uniform(g, 0, 1) == 1) q = q.with_poly(0, x + z.from_int(uniform(g, 0, 2)));
      cands.push_back(q);
    }
    const auto out = minimal_filter(cands, {z.zero()});
    for (std::size_t a = 0; a < out.size(); ++a) {
      for (std::size_t b = 0; b < out.size(); ++b) {
        if (a != b) CHECK_FALSE(prime_contains(out[a], out[b]));
      }
    }
    for (const PrimeRep& c : cands) {
      bool covered = false;
      for (const PrimeRep& o : out) covered = covered || prime_contains(c, o);
      CHECK(covered);
    }
  }
}

TEST_CASE("PrimeRep rendering") {
  V2 v;
  CHECK(v.chain(2).str() == "(P_2)");
  CHECK(v.chain(0).with_poly(0, v.a0 * v.x - v.one).str() == "(0; x*t1 - 1)");
  RingDescriptor z(BaseRing::integers(), Space{{"x"}, 0});
  CHECK(PrimeRep(z.base(), z.space(), BasePrime::principal(2), {0}).str() == "(2)");
}
