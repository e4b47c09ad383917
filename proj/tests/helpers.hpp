#pragma once

#include "fgfc/oracle.hpp"

#include <random>

namespace fgfc::test {

/// Random polynomial in the x's and t's with small coefficients.
inline RingElement random_poly(const RingDescriptor& r, std::mt19937_64& g, int max_terms = 3, int max_exp = 2,
                               long long bound = 5) {
  RingElement out = r.zero();
  const auto terms = uniform(g, 0, max_terms);
  for (long long k = 0; k < terms; ++k) {
    RingElement m = r.from_int(uniform(g, -bound, bound));
    for (std::size_t v = 0; v < r.nvars(); ++v) {
      for (long long e = uniform(g, 0, max_exp); e > 0; --e) m = m * r.variable(v);
    }
    out = out + m;
  }
  return out;
}

/// Element of V_n: a polynomial divided by a t-monomial of no larger value.
inline RingElement random_valuation_element(const RingDescriptor& v, std::mt19937_64& g) {
  RingElement a = random_poly(v, g);
  if (a.is_zero() || uniform(g, 0, 1) == 0) return a;
  // divide by t_j^c only when the quotient stays in V
  const std::size_t j = static_cast<std::size_t>(uniform(g, 1, static_cast<long long>(v.space().rank)));
  const RingElement q = a / v.t(j);
  return v.contains(q) ? q : a;
}

}  // namespace fgfc::test
