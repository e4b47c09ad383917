#include "helpers.hpp"

#include "fgfc/poly.hpp"

#include <doctest.h>

using namespace fgfc;
using fgfc::test::random_poly;

namespace {

Poly px(const RingElement& a) { return Poly::from_element(0, a); }

}  // namespace

TEST_CASE("leading_data") {
  RingDescriptor v(BaseRing::valuation(2, Domain{}), Space{{"x"}, 2});
  const RingElement x = v.variable(0);
  auto ld = leading_data(px(v.t(1) * x * x + x));
  CHECK(ld.degree == 2);
  CHECK(ld.lc == v.t(1));

  RingDescriptor z(BaseRing::integers(), Space{{"x"}, 0});
  auto lz = leading_data(px(z.from_int(7)));
  CHECK(lz.degree == 0);
  CHECK(lz.lc == z.from_int(7));
  CHECK_THROWS_AS(leading_data(px(z.zero())), MathError);
}

TEST_CASE("reduce_by_monic examples") {
  RingDescriptor q(BaseRing::rational(), Space{{"x"}, 0});
  const RingElement x = q.variable(0), one = q.one();
  CHECK(reduce_by_monic(px(x * x + one), px(x - one)) == px(q.from_int(2)));
  CHECK(reduce_by_monic(px(x * x + one), px(x * x + one)).is_zero());

  RingDescriptor z(BaseRing::integers(), Space{{"x"}, 0});
  const RingElement zx = z.variable(0);
  CHECK(reduce_by_monic(px(z.from_int(2) * zx * zx * zx), px(zx * zx)).is_zero());
  CHECK_THROWS(reduce_by_monic(px(zx), px(z.from_int(2) * zx)));
}

TEST_CASE("d_measure examples") {
  RingDescriptor v(BaseRing::valuation(2, Domain{}), Space{{"x"}, 2});
  const RingElement x = v.variable(0), a0 = v.t(1), a1 = v.t(2), one = v.one();
  GenList g{v, 0, {px(a0 * (a0 * x - one)), px(a1 * (a0 * x - one) * (a1 * x - one))}};
  CHECK(d_measure(g) == 3);

  RingDescriptor z(BaseRing::integers(), Space{{"x"}, 0});
  CHECK(d_measure(GenList{z, 0, {px(z.from_int(6))}}) == 0);

  RingDescriptor q(BaseRing::rational(), Space{{"x"}, 0});
  const RingElement qx = q.variable(0);
  GenList h{q, 0, {px(qx * qx), px(qx * qx + qx)}};
  CHECK(d_measure(h) == 1);
  const GenList n = normalize(h);
  REQUIRE(n.gens.size() == 1);
  CHECK(n.gens[0] == px(qx));
}

TEST_CASE("reduce_by_monic reconstructs f = q g + r") {
  std::vector<RingDescriptor> rings{RingDescriptor(BaseRing::integers(), Space{{"x"}, 0}),
                                    RingDescriptor(BaseRing::prime_field(7), Space{{"x"}, 0}),
                                    RingDescriptor(BaseRing::integers_mod(12), Space{{"x"}, 0}),
                                    RingDescriptor(BaseRing::valuation(2, Domain{}), Space{{"x"}, 2})};
  for (const RingDescriptor& r : rings) {
    std::mt19937_64 gen(9);
    int bad = 0, nontrivial = 0;
    for (int i = 0; i < 300; ++i) {
      const Poly f = px(random_poly(r, gen, 4, 3));
      const std::size_t d = static_cast<std::size_t>(uniform(gen, 1, 3));
      std::vector<RingElement> low = px(random_poly(r, gen, 3, 2)).coeffs();
      low.resize(std::min(low.size(), d));
      const Poly g = Poly(0, low, r.nvars(), r.domain()) + Poly::monomial(0, r.one(), d);
      REQUIRE(g.is_monic());
      Poly q;
      const Poly rem = reduce_by_monic(f, g, &q);
      if (!(q * g + rem == f)) ++bad;
      if (rem.degree() >= g.degree()) ++bad;
      if (!q.is_zero()) ++nontrivial;
    }
    CHECK(bad == 0);
    CHECK(nontrivial > 50);
  }
}

TEST_CASE("normalization never increases the measure") {
  RingDescriptor r(BaseRing::rational(), Space{{"x"}, 0});
  std::mt19937_64 gen(4);
  for (int i = 0; i < 300; ++i) {
    GenList g{r, 0, {}};
    for (long long k = uniform(gen, 1, 4); k > 0; --k) {
      RingElement a = random_poly(r, gen, 3, 3);
      if (uniform(gen, 0, 1) == 0) a = a * r.variable(0) + r.one();
      g.gens.push_back(px(a));
    }
    int raw = 0;
    for (const Poly& p : g.gens) raw += std::max(p.degree(), 0);
    const GenList n = normalize(g);
    const int d = d_measure(g);
    CHECK(d <= raw);
    bool all_const = true;
    for (const Poly& p : n.gens) all_const = all_const && p.degree() <= 0;
    CHECK((d == 0) == all_const);
  }
}

TEST_CASE("Poly ring axioms") {
  for (const RingDescriptor& r : {RingDescriptor(BaseRing::integers(), Space{{"x"}, 0}),
                                  RingDescriptor(BaseRing::prime_field(5), Space{{"x"}, 0}),
                                  RingDescriptor(BaseRing::valuation(2, Domain{}), Space{{"x"}, 2})}) {
    std::mt19937_64 gen(1);
    int bad = 0;
    for (int i = 0; i < 1000; ++i) {
      const Poly a = px(random_poly(r, gen)), b = px(random_poly(r, gen)), c = px(random_poly(r, gen));
      if (!((a * b) * c == a * (b * c))) ++bad;
      if (!(a * (b + c) == a * b + a * c)) ++bad;
      if (!(a + (-a)).is_zero()) ++bad;
      if (!((a + b).to_element() == a.to_element() + b.to_element())) ++bad;
    }
    CHECK(bad == 0);
  }
}
