#include "helpers.hpp"

#include "fgfc/constructions.hpp"
#include "fgfc/engine.hpp"
#include "fgfc/verify.hpp"

#include <doctest.h>

using namespace fgfc;

namespace {

Poly px(const RingElement& a) { return Poly::from_element(0, a); }

std::vector<std::string> solve(const RingDescriptor& r, const std::vector<RingElement>& gens) {
  TraceNode t;
  auto ps = min_primes_multi(r, gens, &t);
  const TraceReport rep = check_trace(t, r.space().nx());
  CHECK(rep.ok);
  CHECK(check_prime_set(gens, ps).empty());
  return render_primes(ps);
}

using S = std::vector<std::string>;

}  // namespace

TEST_CASE("min_primes_univ examples") {
  RingDescriptor z(BaseRing::integers(), Space{{"x"}, 0});
  const RingElement x = z.variable(0);
  CHECK(render_primes(min_primes_univ(GenList{z, 0, {px(z.from_int(6))}})) == S{"(2)", "(3)"});
  CHECK(render_primes(min_primes_univ(GenList{z, 0, {px(z.from_int(2) * x + z.from_int(3))}})) == S{"(0; 2*x + 3)"});

  RingDescriptor v(BaseRing::valuation(2, Domain{}), Space{{"x"}, 2});
  CHECK(render_primes(min_primes_univ(op_family(v, 2))) == S{"(0; x*t1 - 1)", "(P_1; x*t2 - 1)", "(P_2)"});
}

TEST_CASE("branch_quotient examples") {
  RingDescriptor z(BaseRing::integers(), Space{{"x"}, 0});
  const RingElement x = z.variable(0);
  GenList a = branch_quotient(GenList{z, 0, {px(z.from_int(2) * x + z.from_int(3))}}, 0);
  REQUIRE(a.gens.size() == 2);
  CHECK(a.gens[0] == px(z.from_int(3)));
  CHECK(a.gens[1] == px(z.from_int(2)));

  RingDescriptor v(BaseRing::valuation(2, Domain{}), Space{{"x"}, 2});
  const RingElement vx = v.variable(0);
  GenList b = branch_quotient(GenList{v, 0, {px(v.t(1) * vx * vx + v.one())}}, 0);
  CHECK(b.gens[0] == px(v.one()));
  CHECK(b.gens[1] == px(v.t(1)));
  CHECK(min_primes_univ(b).empty());

  RingDescriptor q(BaseRing::rational(), Space{{"x"}, 0});
  const RingElement qx = q.variable(0);
  GenList c = branch_quotient(GenList{q, 0, {px(qx * qx + qx)}}, 0);
  CHECK(c.gens[0] == px(qx));
  CHECK(c.gens[1] == px(q.one()));
}

TEST_CASE("monic_case examples") {
  RingDescriptor z(BaseRing::integers(), Space{{"x"}, 0});
  const RingElement x = z.variable(0);
  CHECK(render_primes(monic_case(z, {}, px(x * x + z.one()))) == S{"(0; x^2 + 1)"});
  RingDescriptor f(BaseRing::prime_field(5), Space{{"x"}, 0});
  const RingElement fx = f.variable(0);
  CHECK(render_primes(monic_case(f, {}, px(fx * fx + f.one()))) == S{"(0; x + 2)", "(0; x + 3)"});
  for (const RingDescriptor& r : {z, f, RingDescriptor(BaseRing::valuation(2, Domain{}), Space{{"x"}, 2})}) {
    CHECK(render_primes(monic_case(r, {}, px(r.variable(0)))) == S{"(0; x)"});
  }
}

TEST_CASE("min_primes_multi examples") {
  RingDescriptor q(BaseRing::rational(), Space{{"x", "y"}, 0});
  const RingElement x = q.variable(0), y = q.variable(1);
  CHECK(solve(q, {x * y}) == S{"(0; x)", "(0; y)"});
  CHECK(solve(q, {x * x + y * y, x}) == S{"(0; x, y)"});
  RingDescriptor z(BaseRing::integers(), Space{{"x", "y", "z"}, 0});
  CHECK(solve(z, {z.from_int(6)}) == S{"(2)", "(3)"});
}

TEST_CASE("edge ideals") {
  RingDescriptor z(BaseRing::integers(), Space{{"x"}, 0});
  const RingElement x = z.variable(0);
  CHECK(solve(z, {z.zero()}) == S{"(0)"});
  CHECK(solve(z, {z.one()}).empty());
  CHECK(solve(z, {x * x - z.from_int(2), z.from_int(7)}) == S{"(7; x + 3)", "(7; x + 4)"});
  RingDescriptor z6(BaseRing::integers_mod(6), Space{{"x"}, 0});
  const RingElement y = z6.variable(0);
  CHECK(solve(z6, {y * y + z6.one()}) == S{"(2; x + 1)", "(3; x^2 + 1)"});
  CHECK(solve(z6, {z6.zero()}) == S{"(2)", "(3)"});
}

TEST_CASE("Branch A candidates can be strictly above the final answer") {
  RingDescriptor z(BaseRing::integers(), Space{{"x"}, 0});
  const RingElement x = z.variable(0);
  const GenList i{z, 0, {px(z.from_int(2) * x), px(x * x)}};
  const auto from_a = min_primes_univ(branch_quotient(i, 0));
  const auto final_set = min_primes_univ(i);
  CHECK(render_primes(from_a) == S{"(2; x)"});
  CHECK(render_primes(final_set) == S{"(0; x)"});
  REQUIRE(from_a.size() == 1);
  CHECK(prime_contains(from_a[0], final_set[0]));
  CHECK_FALSE(prime_contains(final_set[0], from_a[0]));
}

TEST_CASE("number-field residues raise a capability error with a trace path") {
  RingDescriptor q(BaseRing::rational(), Space{{"x", "y"}, 0});
  const RingElement x = q.variable(0), y = q.variable(1);
  try {
    TraceNode t;
    min_primes_multi(q, {x * x + y * y, x * y - q.one()}, &t);
    FAIL("expected a capability error");
  } catch (const CapabilityError& e) {
    CHECK(e.reason() == "residue-field-factoring");
    CHECK_FALSE(e.trace_path.empty());
  }
}

TEST_CASE("trace measure and depth on random instances") {
  for (const RingDescriptor& r : {RingDescriptor(BaseRing::integers(), Space{{"x"}, 0}),
                                  RingDescriptor(BaseRing::prime_field(3), Space{{"x", "y"}, 0}),
                                  RingDescriptor(BaseRing::valuation(2, Domain{}), Space{{"x"}, 2})}) {
    std::mt19937_64 g(17);
    int ran = 0;
    for (int i = 0; i < 60; ++i) {
      std::vector<RingElement> gens;
      for (long long k = uniform(g, 1, 3); k > 0; --k) {
        RingElement a = fgfc::test::random_poly(r, g, 3, 2, 4);
        if (r.base().kind == BaseKind::ValuationDomain && !r.contains(a)) continue;
        gens.push_back(a);
      }
      TraceNode t;
      std::vector<PrimeRep> ps;
      try {
        ps = min_primes_multi(r, gens, &t);
      } catch (const CapabilityError&) {
        continue;
      }
      ++ran;
      const TraceReport rep = check_trace(t, r.space().nx());
      CHECK(rep.ok);
      CHECK(check_prime_set(gens, ps).empty());
    }
    CHECK(ran > 30);
  }
}
