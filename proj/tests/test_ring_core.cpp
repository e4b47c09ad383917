#include "helpers.hpp"

#include <doctest.h>

using namespace fgfc;
using fgfc::test::random_poly;
using fgfc::test::random_valuation_element;

namespace {

RingDescriptor v2() { return {BaseRing::valuation(2, Domain{}), Space{{}, 2}}; }

std::vector<BasePrime> mpb(const RingDescriptor& r, std::vector<RingElement> j) { return min_primes_base(r, j); }

}  // namespace

TEST_CASE("min_primes_base examples") {
  RingDescriptor z(BaseRing::integers(), Space{});
  auto p = mpb(z, {z.from_int(6)});
  REQUIRE(p.size() == 2);
  CHECK(p[0] == BasePrime::principal(2));
  CHECK(p[1] == BasePrime::principal(3));

  RingDescriptor q(BaseRing::rational(), Space{});
  auto pq = mpb(q, {q.zero()});
  REQUIRE(pq.size() == 1);
  CHECK(pq[0].is_zero_ideal());

  RingDescriptor v = v2();
  auto pv = mpb(v, {v.t(1) * v.t(2)});
  REQUIRE(pv.size() == 1);
  CHECK(pv[0] == BasePrime::chain_index(1));

  CHECK(mpb(q, {q.one()}).empty());
  CHECK(mpb(z, {z.from_int(12), z.from_int(18)}).size() == 2);
}

TEST_CASE("localize examples") {
  RingDescriptor z(BaseRing::integers(), Space{});
  RingDescriptor z2 = localize(z, z.from_int(2));
  CHECK(z2.is_unit(z2.from_int(2)));
  auto p = mpb(z2, {z2.from_int(3)});
  REQUIRE(p.size() == 1);
  CHECK(p[0] == BasePrime::principal(3));
  CHECK(mpb(z2, {z2.from_int(8)}).empty());

  RingDescriptor v = v2();
  RingDescriptor vt = localize(v, v.t(1));
  std::mt19937_64 g(7);
  for (int i = 0; i < 200; ++i) {
    RingElement a = random_poly(v, g);
    if (!a.is_zero()) CHECK(vt.is_unit(a));
  }
  CHECK(vt.is_unit(v.t(2)));

  RingDescriptor q(BaseRing::rational(), Space{});
  RingDescriptor q5 = localize(q, q.from_int(5));
  CHECK(mpb(q5, {q5.zero()}).size() == 1);
  CHECK_THROWS_AS(localize(q, q.zero()), MathError);
}

TEST_CASE("quotient_ring examples") {
  RingDescriptor z(BaseRing::integers(), Space{});
  RingDescriptor z12 = quotient_ring(z, {z.from_int(12)});
  CHECK(z12.equal(z12.from_int(13), z12.from_int(1)));
  CHECK(mpb(z12, {}).size() == 2);

  RingDescriptor v = v2();
  RingDescriptor vq = quotient_ring(v, {v.t(1)});
  auto p = mpb(vq, {});
  REQUIRE(p.size() == 1);
  CHECK(p[0] == BasePrime::chain_index(1));

  RingDescriptor q(BaseRing::rational(), Space{});
  RingDescriptor zero = quotient_ring(q, {q.one()});
  CHECK(zero.is_zero_ring());
  CHECK(mpb(zero, {}).empty());
}

TEST_CASE("smallest_prime_containing and value_of") {
  RingDescriptor v = v2();
  CHECK(smallest_prime_containing(v, v.t(1)) == BasePrime::chain_index(1));
  CHECK(smallest_prime_containing(v, v.t(2)) == BasePrime::chain_index(2));
  CHECK_THROWS(smallest_prime_containing(v, v.one()));

  CHECK(value_of(v, v.t(1)) == ValueVector({1, 0}));
  CHECK(value_of(v, v.t(1) * v.t(1) + v.t(2)) == ValueVector({0, 1}));
  CHECK_THROWS_AS(value_of(v, (v.t(1) * v.t(1) + v.t(2)) / v.t(1)), MathError);
  CHECK(valuation_of(v, v.zero()).is_infinity());
  CHECK(ValueVector({0, 5}) < ValueVector({1, -3}));
}

TEST_CASE("ring axioms on random triples") {
  std::vector<std::pair<const char*, RingDescriptor>> rings{
      {"Q", RingDescriptor(BaseRing::rational(), Space{{"x"}, 0})},
      {"F5", RingDescriptor(BaseRing::prime_field(5), Space{{"x"}, 0})},
      {"Z", RingDescriptor(BaseRing::integers(), Space{{"x"}, 0})},
      {"Z/12", RingDescriptor(BaseRing::integers_mod(12), Space{{"x"}, 0})},
      {"V2", RingDescriptor(BaseRing::valuation(2, Domain{}), Space{{"x"}, 2})},
  };
  for (const auto& [name, r] : rings) {
    CAPTURE(name);
    std::mt19937_64 g(42);
    const bool val = r.base().kind == BaseKind::ValuationDomain;
    auto draw = [&] { return val ? random_valuation_element(r, g) : random_poly(r, g); };
    int failures = 0;
    for (int i = 0; i < 1000; ++i) {
      const RingElement a = draw(), b = draw(), c = draw();
      if (!((a * b) * c == a * (b * c))) ++failures;
      if (!((a + b) + c == a + (b + c))) ++failures;
      if (!(a * (b + c) == a * b + a * c)) ++failures;
      if (!(a + (-a)).is_zero()) ++failures;
      if (!(a * b == b * a)) ++failures;
      if (!(a * r.one() == a)) ++failures;
      if (!r.contains(a * b) || !r.contains(a + b)) ++failures;
    }
    CHECK(failures == 0);
  }
}

TEST_CASE("valuation law") {
  for (std::size_t n : {2u, 3u}) {
    RingDescriptor v(BaseRing::valuation(n, Domain{}), Space{{}, n});
    std::mt19937_64 g(n);
    int bad = 0, equal_checks = 0;
    for (int i = 0; i < 1000; ++i) {
      const RingElement a = random_valuation_element(v, g), b = random_valuation_element(v, g);
      if (a.is_zero() || b.is_zero()) continue;
      const ValueVector va = valuation_of(v, a), vb = valuation_of(v, b);
      if (!(valuation_of(v, a * b) == va + vb)) ++bad;
      const RingElement s = a + b;
      const ValueVector vs = valuation_of(v, s);
      const ValueVector lo = va < vb ? va : vb;
      if (vs < lo) ++bad;
      if (!(va == vb)) {
        ++equal_checks;
        if (!(vs == lo)) ++bad;
      }
    }
    CHECK(bad == 0);
    CHECK(equal_checks > 100);
  }
}

TEST_CASE("chain membership is monotone") {
  RingDescriptor v(BaseRing::valuation(3, Domain{}), Space{{}, 3});
  std::mt19937_64 g(3);
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const RingElement a = random_valuation_element(v, g);
    for (std::size_t j = 0; j <= 3; ++j) {
      if (!base_prime_member(v.base(), v.space(), BasePrime::chain_index(j), a)) continue;
      for (std::size_t k = j; k <= 3; ++k) {
        if (!base_prime_member(v.base(), v.space(), BasePrime::chain_index(k), a)) ++bad;
      }
    }
  }
  CHECK(bad == 0);
}

TEST_CASE("min_primes_base output is finite, incomparable and contains J") {
  RingDescriptor z(BaseRing::integers(), Space{});
  RingDescriptor v(BaseRing::valuation(3, Domain{}), Space{{}, 3});
  std::mt19937_64 g(11);
  for (int i = 0; i < 300; ++i) {
    const bool use_v = i % 2 == 1;
    const RingDescriptor& r = use_v ? v : z;
    std::vector<RingElement> j;
    for (long long k = uniform(g, 1, 3); k > 0; --k) {
      j.push_back(use_v ? random_valuation_element(v, g) : z.from_int(uniform(g, -60, 60)));
    }
    const auto ps = mpb(r, j);
    for (const BasePrime& p : ps) {
      for (const RingElement& a : j) CHECK(base_prime_member(r.base(), r.space(), p, a));
      for (const BasePrime& q : ps) {
        if (!(p == q)) CHECK_FALSE(base_prime_contains(p, q));
      }
    }
  }
}

TEST_CASE("localization consistency for base rings") {
  RingDescriptor z(BaseRing::integers(), Space{});
  RingDescriptor v(BaseRing::valuation(2, Domain{}), Space{{}, 2});
  std::mt19937_64 g(5);
  for (int i = 0; i < 200; ++i) {
    const bool use_v = i % 2 == 1;
    const RingDescriptor& r = use_v ? v : z;
    std::vector<RingElement> j{use_v ? random_valuation_element(v, g) : r.from_int(uniform(g, 1, 90))};
    RingElement c = use_v ? random_valuation_element(v, g) : r.from_int(uniform(g, 1, 30));
    if (c.is_zero()) continue;
    std::vector<BasePrime> expect;
    for (const BasePrime& p : mpb(r, j)) {
      if (!base_prime_member(r.base(), r.space(), p, c)) expect.push_back(p);
    }
    auto got = mpb(localize(r, c), j);
    std::sort(expect.begin(), expect.end());
    std::sort(got.begin(), got.end());
    CHECK(got == expect);
  }
}
