#include "fgfc/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fgfc {

const char* const kValuationOracleJustification =
    "candidates restricted to P_j[x] and (P_j, g), g irreducible over Frac(V/P_j): by going-down for "
    "R -> R[x]/(f) with f monic (free of finite rank), every minimal prime contracts to a minimal prime of "
    "the base, which in a valuation ring is a chain prime P_j; over the residue field such primes are cut "
    "out by one irreducible factor";

namespace {

struct Candidate {
  std::size_t j = 0;
  bool has_poly = false;
  RingElement g;  // normalized generator (residue level)
};

// Roots in k(t) of a polynomial whose extreme x-coefficients are monomials;
// every root is then a scalar times a Laurent monomial.
std::vector<RingElement> monomial_roots(const MPoly& h, std::size_t x, const Space& space) {
  std::vector<MPoly> cs = h.coeffs_in(x);
  if (cs.size() < 2) return {};
  if (cs.front().size() != 1 || cs.back().size() != 1) {
    throw OracleUnavailable("valuation oracle needs monomial extreme coefficients");
  }
  const std::size_t b = space.nx(), e = space.nx() + space.rank, nv = h.nvars();
  const Domain d = h.domain();
  struct Term {
    int i;
    Exponent a;
    Scalar c;
  };
  std::vector<Term> terms;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (const auto& [ex, c] : cs[i].terms()) terms.push_back({static_cast<int>(i), ex, c});
  }
  std::set<std::vector<int>> gammas;
  for (const Term& s : terms) {
    for (const Term& t : terms) {
      if (t.i <= s.i) continue;
      std::vector<int> g;
      bool integral = true;
      for (std::size_t k = b; k < e && integral; ++k) {
        int num = s.a[k] - t.a[k], den = t.i - s.i;
        integral = num % den == 0;
        g.push_back(num / (integral ? den : 1));
      }
      if (integral) gammas.insert(g);
    }
  }
  std::vector<RingElement> roots;
  for (const std::vector<int>& g : gammas) {
    // Group terms by the exponent of t after substituting x = s t^g.
    std::map<std::vector<int>, std::map<int, Scalar>> groups;
    for (const Term& t : terms) {
      std::vector<int> key;
      for (std::size_t k = b; k < e; ++k) key.push_back(t.a[k] + t.i * g[k - b]);
      groups[key].emplace(t.i, t.c);
    }
    bool possible = std::all_of(groups.begin(), groups.end(), [](const auto& kv) { return kv.second.size() >= 2; });
    if (!possible) continue;
    auto vanishes = [&](const Scalar& s) {
      for (const auto& [key, poly] : groups) {
        Scalar acc(d, 0);
        for (const auto& [i, c] : poly) acc += c * s.pow(static_cast<unsigned>(i));
        if (!acc.is_zero()) return false;
      }
      return true;
    };
    std::vector<Scalar> svals;
    if (d.is_rational()) {
      // Rational roots of the first group polynomial.
      const auto& poly = groups.begin()->second;
      MPoly u(1, d);
      for (const auto& [i, c] : poly) u.add_term(Exponent{i}, c);
      for (const MPoly& f : oracle_univariate_factors(u, 0)) {
        if (f.degree(0) != 1) continue;
        std::vector<MPoly> lin = f.coeffs_in(0);
        svals.push_back(-(lin[0].constant_term() * lin[1].constant_term().inverse()));
      }
    } else {
      for (std::uint64_t v = 1; v < d.modulus; ++v) svals.emplace_back(d, static_cast<long long>(v));
    }
    for (const Scalar& s : svals) {
      if (s.is_zero() || !vanishes(s)) continue;
      Exponent up(nv, 0), down(nv, 0);
      for (std::size_t k = b; k < e; ++k) (g[k - b] >= 0 ? up[k] : down[k]) = std::abs(g[k - b]);
      roots.emplace_back(MPoly::monomial(nv, s, up), MPoly::monomial(nv, Scalar(d, 1), down));
    }
  }
  return roots;
}

// Irreducible factors over k(t) of h (an x-polynomial over k[t]).
std::vector<RingElement> factors_over_function_field(const MPoly& h, std::size_t x, const Space& space) {
  std::vector<RingElement> out;
  const std::size_t nv = h.nvars();
  const Domain d = h.domain();
  MPoly rest = h;
  const MPoly xv = MPoly::variable(nv, d, x);
  bool has_x = false;
  while (rest.degree(x) >= 1) {
    auto q = rest.divide(xv);
    if (!q) break;
    rest = *q;
    has_x = true;
  }
  if (has_x) out.emplace_back(xv);
  if (rest.degree(x) < 1) return out;
  Poly cof = Poly::from_element(x, RingElement(rest));
  for (const RingElement& r : monomial_roots(rest, x, space)) {
    Poly lin = Poly::from_element(x, RingElement(xv) - r);
    out.push_back(lin.to_element());
    while (cof.degree() >= 1) {
      Poly q;
      Poly rem = reduce_by_monic(cof, lin, &q);
      if (!rem.is_zero()) break;
      cof = q;
    }
  }
  if (cof.degree() > 3) throw OracleUnavailable("valuation oracle: root-free cofactor of degree > 3");
  if (cof.degree() >= 1) out.push_back(cof.to_element());
  return out;
}

}  // namespace

std::vector<PrimeRep> valuation_shape_oracle(const GenList& i) {
  const RingDescriptor& v = i.ring;
  if (v.base().kind != BaseKind::ValuationDomain || !v.is_root() || v.effective_rank() != v.base().rank) {
    throw OracleUnavailable("valuation oracle needs an unlocalized V_n");
  }
  const std::size_t n = v.base().rank, x = i.var;
  if (n > 3) throw OracleUnavailable("valuation oracle supports rank <= 3");
  const BaseRing& base = v.base();
  const Space& space = v.space();
  std::vector<RingElement> gens = elements_of(i);

  // residues[j][k]: image of generator k modulo P_j.
  std::vector<std::vector<MPoly>> residues(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    for (const RingElement& g : gens) residues[j].push_back(residue(base, space, BasePrime::chain_index(j), g).num());
  }
  auto contains_ideal = [&](const Candidate& c) {
    for (const MPoly& h : residues[c.j]) {
      if (h.is_zero()) continue;
      if (!c.has_poly || !h.prem(c.g.num(), x).is_zero()) return false;
    }
    return true;
  };
  // big contains small
  auto contains = [&](const Candidate& big, const Candidate& small) {
    if (small.j > big.j) return false;
    if (!small.has_poly) return true;
    if (!big.has_poly) return false;
    MPoly r = residue(base, space, BasePrime::chain_index(big.j), small.g).num();
    return r.prem(big.g.num(), x).is_zero();
  };

  std::vector<Candidate> cands;
  for (std::size_t j = 0; j <= n; ++j) {
    cands.push_back({j, false, {}});
    PrimeRep ext(base, space, BasePrime::chain_index(j), {x});
    for (const MPoly& h : residues[j]) {
      if (h.is_zero()) continue;
      for (const RingElement& f : factors_over_function_field(h, x, space)) {
        cands.push_back({j, true, ext.with_poly(x, f).polys().front()});
      }
    }
  }
  std::vector<Candidate> holding;
  for (const Candidate& c : cands) {
    if (contains_ideal(c)) holding.push_back(c);
  }
  std::vector<Candidate> minimal;
  for (std::size_t a = 0; a < holding.size(); ++a) {
    bool drop = false;
    for (std::size_t b = 0; b < holding.size() && !drop; ++b) {
      if (a == b || !contains(holding[a], holding[b])) continue;
      // strictly above b, or equal to an earlier candidate
      drop = !contains(holding[b], holding[a]) || b < a;
    }
    if (!drop) minimal.push_back(holding[a]);
  }
  std::vector<PrimeRep> out;
  for (const Candidate& c : minimal) {
    PrimeRep p(base, space, BasePrime::chain_index(c.j), {x});
    out.push_back(c.has_poly ? p.with_poly(x, c.g) : p);
  }
  return out;
}

}  // namespace fgfc
