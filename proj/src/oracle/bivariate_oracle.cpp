#include "fgfc/oracle.hpp"

#include <map>
#include <set>

namespace fgfc {

namespace {

// F_(p^e) as base-p digit vectors packed into integers, with full tables.
struct SmallField {
  int p = 0, e = 0, q = 0;
  std::vector<int> add, mul, frob;

  int pack(const std::vector<int>& v) const {
    int r = 0;
    for (int i = e; i-- > 0;) r = r * p + v[i];
    return r;
  }
  std::vector<int> unpack(int a) const {
    std::vector<int> v(e);
    for (int i = 0; i < e; ++i, a /= p) v[i] = a % p;
    return v;
  }
  int power(int a, unsigned k) const {
    int r = 1;
    for (; k > 0; k >>= 1, a = mul[a * q + a]) {
      if (k & 1U) r = mul[r * q + a];
    }
    return r;
  }
};

bool irreducible_mod_p(const std::vector<int>& m, int p) {
  // m monic of degree e <= 4: irreducible iff no factor of degree <= e/2.
  const int e = static_cast<int>(m.size()) - 1;
  for (int d = 1; 2 * d <= e; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int c = 0; c < count; ++c) {
      std::vector<int> div(d + 1, 1);
      for (int i = 0, v = c; i < d; ++i, v /= p) div[i] = v % p;
      std::vector<int> r = m;
      for (int k = e; k >= d; --k) {
        int f = r[k];
        for (int i = 0; i <= d; ++i) r[k - d + i] = ((r[k - d + i] - f * div[i]) % p + p) % p;
      }
      bool zero = true;
      for (int i = 0; i < d; ++i) zero = zero && r[i] == 0;
      if (zero) return false;
    }
  }
  return true;
}

SmallField make_field(int p, int e) {
  SmallField k;
  k.p = p;
  k.e = e;
  k.q = 1;
  for (int i = 0; i < e; ++i) k.q *= p;
  std::vector<int> m(e + 1, 0);
  m[e] = 1;
  for (int c = 0; c < k.q; ++c) {
    for (int i = 0, v = c; i < e; ++i, v /= p) m[i] = v % p;
    if (irreducible_mod_p(m, p)) break;
  }
  k.add.assign(static_cast<std::size_t>(k.q) * k.q, 0);
  k.mul.assign(static_cast<std::size_t>(k.q) * k.q, 0);
  for (int a = 0; a < k.q; ++a) {
    const auto va = k.unpack(a);
    for (int b = 0; b < k.q; ++b) {
      const auto vb = k.unpack(b);
      std::vector<int> s(e), prod(2 * e, 0);
      for (int i = 0; i < e; ++i) s[i] = (va[i] + vb[i]) % p;
      for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + va[i] * vb[j]) % p;
      for (int d = 2 * e - 1; d >= e; --d) {
        int f = prod[d];
        prod[d] = 0;
        for (int i = 0; i < e; ++i) prod[d - e + i] = ((prod[d - e + i] - f * m[i]) % p + p) % p;
      }
      prod.resize(e);
      k.add[a * k.q + b] = k.pack(s);
      k.mul[a * k.q + b] = k.pack(prod);
    }
  }
  k.frob.resize(k.q);
  for (int a = 0; a < k.q; ++a) k.frob[a] = k.power(a, static_cast<unsigned>(p));
  return k;
}

int eval(const SmallField& k, const MPoly& f, int x, int y) {
  int acc = 0;
  for (const auto& [ex, c] : f.terms()) {
    int t = static_cast<int>(c.residue() % static_cast<std::uint64_t>(k.p));
    t = k.mul[t * k.q + k.power(x, static_cast<unsigned>(ex[0]))];
    t = k.mul[t * k.q + k.power(y, static_cast<unsigned>(ex[1]))];
    acc = k.add[acc * k.q + t];
  }
  return acc;
}

// Irreducible factors of a bivariate polynomial of total degree <= 2 by trial
// division with every normalized linear form.
std::vector<MPoly> small_factors(const MPoly& g) {
  std::vector<MPoly> out;
  const Domain d = g.domain();
  const long long p = static_cast<long long>(d.modulus);
  MPoly rest = g;
  std::vector<MPoly> lin;
  for (long long c = 0; c < p; ++c) {
    lin.push_back(MPoly::variable(2, d, 1) + MPoly::constant(2, d, c));
    for (long long b = 0; b < p; ++b) {
      lin.push_back(MPoly::variable(2, d, 0) + MPoly::variable(2, d, 1).scaled(Scalar(d, b)) + MPoly::constant(2, d, c));
    }
  }
  for (const MPoly& l : lin) {
    bool hit = false;
    while (rest.total_degree() >= 1) {
      auto q = rest.divide(l);
      if (!q) break;
      rest = *q;
      hit = true;
    }
    if (hit) out.push_back(l);
  }
  if (rest.total_degree() >= 1) out.push_back(rest.monic());
  return out;
}

}  // namespace

std::string bivariate_oracle_check(const RingDescriptor& ring, const std::vector<RingElement>& gens,
                                   const std::vector<PrimeRep>& engine) {
  const BaseRing& base = ring.base();
  if (base.kind != BaseKind::PrimeField || base.modulus > 7 || ring.space().nvars() != 2 || ring.space().rank != 0) {
    throw OracleUnavailable("bivariate oracle needs F_p[x,y] with p <= 7");
  }
  const int p = static_cast<int>(base.modulus);
  std::vector<MPoly> fs;
  for (const RingElement& a : gens) {
    if (a.num().total_degree() > 2) throw OracleUnavailable("bivariate oracle needs total degree <= 2");
    if (!a.num().is_zero()) fs.push_back(a.num());
  }
  const Space& space = ring.space();
  const std::vector<std::size_t> amb{0, 1};
  if (fs.empty()) {
    PrimeRep zero(base, space, BasePrime::zero(), amb);
    return engine.size() == 1 && prime_equal(engine[0], zero) ? "" : "expected the zero prime";
  }
  MPoly g(2, fs[0].domain());
  for (const MPoly& f : fs) g = gcd(g, f);

  // Principal part.
  std::vector<PrimeRep> principal;
  std::vector<MPoly> gfac;
  if (!g.is_constant()) gfac = small_factors(g);
  for (const MPoly& h : gfac) {
    PrimeRep q(base, space, BasePrime::zero(), amb);
    principal.push_back(q.with_poly(h.involves(1) ? 1 : 0, RingElement(h)));
  }
  std::vector<PrimeRep> maximal;
  for (const PrimeRep& e : engine) {
    bool is_principal = e.polys().size() == 1;
    if (is_principal) {
      bool found = false;
      for (const PrimeRep& q : principal) found = found || prime_equal(q, e);
      if (!found) return "engine prime " + e.str() + " is not a factor of the gcd";
    } else if (e.polys().size() == 2) {
      maximal.push_back(e);
    } else {
      return "unexpected prime shape " + e.str();
    }
  }
  for (const PrimeRep& q : principal) {
    bool found = false;
    for (const PrimeRep& e : engine) found = found || prime_equal(q, e);
    if (!found) return "gcd factor " + q.str() + " missing from the engine answer";
  }

  // Zero-dimensional part: closed points of V(I/g) off V(g).
  std::vector<MPoly> js;
  for (const MPoly& f : fs) js.push_back(g.is_constant() ? f : *f.divide(g));
  std::vector<std::size_t> hits(maximal.size(), 0);
  std::size_t total = 0;
  for (int e = 1; e <= 4; ++e) {
    if (js.size() < 2) break;
    const SmallField k = make_field(p, e);
    for (int x = 0; x < k.q; ++x) {
      for (int y = 0; y < k.q; ++y) {
        bool on = true;
        for (const MPoly& j : js) on = on && eval(k, j, x, y) == 0;
        if (!on || (!g.is_constant() && eval(k, g, x, y) == 0)) continue;
        int size = 1;
        for (int fx = k.frob[x], fy = k.frob[y]; fx != x || fy != y; fx = k.frob[fx], fy = k.frob[fy]) ++size;
        if (size != e) continue;
        ++total;
        for (std::size_t m = 0; m < maximal.size(); ++m) {
          const auto& ps = maximal[m].polys();
          if (eval(k, ps[0].num(), x, y) == 0 && eval(k, ps[1].num(), x, y) == 0) ++hits[m];
        }
      }
    }
  }
  std::size_t sum = 0;
  for (std::size_t m = 0; m < maximal.size(); ++m) {
    const auto& ps = maximal[m].polys();
    const std::size_t deg = static_cast<std::size_t>(ps[0].num().degree(0) * ps[1].num().degree(1));
    if (hits[m] != deg) {
      return "engine prime " + maximal[m].str() + " has " + std::to_string(hits[m]) + " oracle points, expected " +
             std::to_string(deg);
    }
    sum += deg;
  }
  if (sum != total) {
    return "oracle found " + std::to_string(total) + " points, engine primes cover " + std::to_string(sum);
  }
  return "";
}

}  // namespace fgfc
