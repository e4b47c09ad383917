#include "fgfc/factor.hpp"

#include "fgfc/errors.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace fgfc {

namespace {

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

BigInt gcd_big(BigInt a, BigInt b) {
  a = abs_big(a);
  b = abs_big(b);
  while (b != 0) {
    BigInt t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  ztrim(r);
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  ztrim(r);
  return r;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  ztrim(r);
  return r;
}

BigInt mod_nonneg(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

ZPoly zmod(ZPoly a, const BigInt& m) {
  for (auto& c : a) c = mod_nonneg(c, m);
  ztrim(a);
  return a;
}

ZPoly zsym(ZPoly a, const BigInt& m) {
  for (auto& c : a) {
    c = mod_nonneg(c, m);
    if (2 * c > m) c -= m;
  }
  ztrim(a);
  return a;
}

// Division by a monic polynomial modulo m.
std::pair<ZPoly, ZPoly> zdivmod_monic(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  ZPoly r = zmod(a, m);
  if (r.size() < b.size()) return {{}, r};
  ZPoly q(r.size() - b.size() + 1, 0);
  for (std::size_t i = r.size(); i >= b.size(); --i) {
    BigInt t = mod_nonneg(r[i - 1], m);
    std::size_t shift = i - b.size();
    q[shift] = t;
    if (t != 0) {
      for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = mod_nonneg(r[shift + j] - t * b[j], m);
    }
  }
  ztrim(r);
  ztrim(q);
  return {q, r};
}

std::optional<ZPoly> zdivide_exact(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  if (r.size() < b.size()) return r.empty() ? std::optional<ZPoly>(ZPoly{}) : std::nullopt;
  ZPoly q(r.size() - b.size() + 1, 0);
  for (std::size_t i = r.size(); i >= b.size(); --i) {
    if (r[i - 1] == 0) continue;
    if (r[i - 1] % b.back() != 0) return std::nullopt;
    BigInt t = r[i - 1] / b.back();
    std::size_t shift = i - b.size();
    q[shift] = t;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= t * b[j];
  }
  ztrim(r);
  if (!r.empty()) return std::nullopt;
  ztrim(q);
  return q;
}

BigInt zcontent(const ZPoly& a) {
  BigInt g = 0;
  for (const auto& c : a) g = gcd_big(g, c);
  return g;
}

ZPoly zprimitive(ZPoly a) {
  if (a.empty()) return a;
  BigInt g = zcontent(a);
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

GFPoly to_gf(const GaloisField& k, const ZPoly& a) {
  GFPoly r;
  BigInt p = k.characteristic();
  for (const auto& c : a) r.push_back(GaloisField::Elem{static_cast<std::uint64_t>(mod_nonneg(c, p))});
  gfpoly::trim(k, r);
  return r;
}

ZPoly from_gf(const GFPoly& a) {
  ZPoly r;
  for (const auto& c : a) r.emplace_back(c[0]);
  ztrim(r);
  return r;
}

ZPoly zderiv(const ZPoly& a) {
  ZPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<long long>(i));
  ztrim(r);
  return r;
}

// Pseudo-remainder of a by b over Z.
ZPoly zprem(ZPoly a, const ZPoly& b) {
  while (!a.empty() && a.size() >= b.size()) {
    BigInt la = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= b.back();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
    ztrim(a);
  }
  return a;
}

// Primitive remainder sequence gcd; result primitive with positive lc.
ZPoly zgcd(ZPoly a, ZPoly b) {
  a = zprimitive(a);
  b = zprimitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = zprimitive(zprem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Yun's squarefree decomposition over Q.
std::vector<std::pair<ZPoly, int>> squarefree_q(const ZPoly& f) {
  std::vector<std::pair<ZPoly, int>> out;
  ZPoly a = zprimitive(f);
  ZPoly da = zderiv(a);
  ZPoly b = zgcd(a, da);
  ZPoly c = *zdivide_exact(a, b);
  ZPoly d = zsub(*zdivide_exact(da, b), zderiv(c));
  int i = 1;
  while (c.size() > 1) {
    ZPoly g = d.empty() ? zprimitive(c) : zgcd(c, d);
    if (g.size() > 1) out.emplace_back(g, i);
    c = *zdivide_exact(c, g);
    d = zsub(*zdivide_exact(d, g), zderiv(c));
    ++i;
  }
  return out;
}

// One quadratic Hensel step modulo m -> m^2 (von zur Gathen & Gerhard, Alg. 15.10).
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const BigInt& m2) {
  ZPoly e = zmod(zsub(f, zmul(g, h)), m2);
  auto [q, r] = zdivmod_monic(zmul(s, e), h, m2);
  ZPoly g2 = zmod(zadd(g, zadd(zmul(t, e), zmul(q, g))), m2);
  ZPoly h2 = zmod(zadd(h, r), m2);
  ZPoly b = zmod(zsub(zadd(zmul(s, g2), zmul(t, h2)), ZPoly{1}), m2);
  auto [c, d] = zdivmod_monic(zmul(s, b), h2, m2);
  s = zmod(zsub(s, d), m2);
  t = zmod(zsub(t, zadd(zmul(t, b), zmul(c, g2))), m2);
  g = std::move(g2);
  h = std::move(h2);
}

// Lift f = lc * u_1 ... u_r (mod p) to monic factors modulo `target`.
void hensel_lift(const ZPoly& f, const std::vector<GFPoly>& factors, const GaloisField& k, const BigInt& target,
                 std::vector<ZPoly>& out) {
  const BigInt p = k.characteristic();
  if (factors.size() == 1) {
    // f / lc(f) modulo target.
    BigInt lc = mod_nonneg(f.back(), target);
    BigInt inv;
    {
      // Inverse of lc modulo target via extended Euclid.
      BigInt a = lc, m = target, x0 = 1, x1 = 0;
      while (m != 0) {
        BigInt q = a / m, tmp = a - q * m;
        a = m;
        m = tmp;
        tmp = x0 - q * x1;
        x0 = x1;
        x1 = tmp;
      }
      inv = mod_nonneg(x0, target);
    }
    ZPoly u = f;
    for (auto& c : u) c = mod_nonneg(c * inv, target);
    out.push_back(u);
    return;
  }
  GFPoly rest{k.one()};
  for (std::size_t i = 1; i < factors.size(); ++i) rest = gfpoly::mul(k, rest, factors[i]);
  GFPoly g0 = gfpoly::mul(k, factors[0], GFPoly{GaloisField::Elem{static_cast<std::uint64_t>(mod_nonneg(f.back(), p))}});
  auto [one, s0, t0] = gfpoly::xgcd(k, g0, rest);
  // Normalize degrees: deg s < deg h, deg t < deg g.
  GFPoly s1 = gfpoly::divmod(k, s0, rest).second;
  GFPoly t1 = gfpoly::divmod(k, gfpoly::sub(k, GFPoly{k.one()}, gfpoly::mul(k, s1, g0)), rest).first;
  t1 = gfpoly::divmod(k, t1, GFPoly{k.one()}).first;
  ZPoly g = from_gf(g0), h = from_gf(rest), s = from_gf(s1), t = from_gf(t1);
  BigInt m = p;
  while (m < target) {
    m = m * m;
    hensel_step(zmod(f, m), g, h, s, t, m);
  }
  g = zmod(g, target);
  h = zmod(h, target);
  std::vector<GFPoly> first{factors[0]};
  hensel_lift(g, first, k, target, out);
  std::vector<GFPoly> others(factors.begin() + 1, factors.end());
  hensel_lift(h, others, k, target, out);
}

std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const std::size_t n = f.size() - 1;
  if (n <= 1) return {f};
  ZPoly df;
  for (std::size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * static_cast<long>(i));
  std::uint64_t p = 3;
  std::vector<std::pair<GFPoly, int>> mod_factors;
  for (;; p += 2) {
    if (!is_prime_u64(p) || f.back() % p == 0) continue;
    GaloisField k(p);
    GFPoly fp = to_gf(k, f);
    if (gfpoly::gcd(k, fp, to_gf(k, df)).size() != 1) continue;
    mod_factors = factor_gf(k, fp);
    break;
  }
  if (mod_factors.size() == 1) return {f};
  if (mod_factors.size() > FactorLimits{}.max_modular_factors) {
    throw CapabilityError("factorization-recombination", "too many modular factors to recombine");
  }
  GaloisField k(p);
  std::vector<GFPoly> us;
  for (auto& [u, e] : mod_factors) us.push_back(u);

  BigInt maxabs = 0;
  for (const auto& c : f) maxabs = std::max(maxabs, abs_big(c));
  BigInt bound = 2 * abs_big(f.back()) * (BigInt(1) << n) * (n + 1) * maxabs;
  BigInt modulus = p;
  while (modulus <= bound) modulus *= p;

  std::vector<ZPoly> lifted;
  hensel_lift(f, us, k, modulus, lifted);

  std::vector<ZPoly> result;
  ZPoly rem = f;
  std::vector<std::size_t> alive(lifted.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  std::size_t size = 1;
  while (2 * size <= alive.size()) {
    bool found = false;
    std::vector<std::size_t> pick(size);
    std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t start, std::size_t depth) -> bool {
      if (depth == size) {
        ZPoly g{rem.back()};
        for (std::size_t idx : pick) g = zmod(zmul(g, lifted[alive[idx]]), modulus);
        g = zprimitive(zsym(g, modulus));
        if (g.size() < 2) return false;
        auto q = zdivide_exact(rem, g);
        if (!q) return false;
        result.push_back(g);
        rem = *q;
        std::vector<std::size_t> next;
        for (std::size_t i = 0; i < alive.size(); ++i) {
          if (std::find(pick.begin(), pick.end(), i) == pick.end()) next.push_back(alive[i]);
        }
        alive = next;
        return true;
      }
      for (std::size_t i = start; i < alive.size(); ++i) {
        pick[depth] = i;
        if (search(i + 1, depth + 1)) return true;
      }
      return false;
    };
    found = search(0, 0);
    if (!found) ++size;
  }
  if (rem.size() > 1) result.push_back(zprimitive(rem));
  return result;
}

}  // namespace

std::vector<std::pair<ZPoly, int>> factor_z(const ZPoly& f0) {
  ZPoly f = f0;
  ztrim(f);
  if (f.empty()) throw MathError(MathError::Code::ZeroPolynomial, "factoring the zero polynomial");
  std::vector<std::pair<ZPoly, int>> out;
  if (f.size() == 1) return out;
  f = zprimitive(f);
  for (const auto& [g, mult] : squarefree_q(f)) {
    for (ZPoly& h : zassenhaus(g)) out.emplace_back(zprimitive(h), mult);
  }
  return out;
}

}  // namespace fgfc

namespace fgfc {

namespace {

struct Kronecker {
  std::vector<std::size_t> vars;
  std::vector<BigInt> weights;  // weight of each variable in the substituted exponent
  std::vector<int> bases;       // digit base (degree + 1) per variable
  std::size_t nvars = 0;
  Domain domain{};

  std::size_t encode(const Exponent& e) const {
    BigInt total = 0;
    for (std::size_t i = 0; i < vars.size(); ++i) total += weights[i] * e[vars[i]];
    return static_cast<std::size_t>(total);
  }

  MPoly decode(const std::vector<Scalar>& coeffs) const {
    MPoly m(nvars, domain);
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
      if (coeffs[d].is_zero()) continue;
      Exponent e(nvars, 0);
      std::size_t rest = d;
      for (std::size_t i = vars.size(); i-- > 0;) {
        auto w = static_cast<std::size_t>(weights[i]);
        e[vars[i]] = static_cast<int>(rest / w);
        rest %= w;
      }
      m.add_term(e, coeffs[d]);
    }
    return m;
  }
};

MPoly normalize_factor(const MPoly& f) {
  if (f.domain().is_rational()) {
    BigInt l = 1, g = 0;
    for (const auto& [e, c] : f.terms()) {
      BigInt d = boost::multiprecision::denominator(c.rational());
      l = l / gcd_big(l, d) * d;
    }
    for (const auto& [e, c] : f.terms()) g = gcd_big(g, boost::multiprecision::numerator(BigRational(c.rational() * l)));
    BigRational s(l, g);
    if (f.leading_coeff().rational() < 0) s = -s;
    return f.scaled(Scalar(Domain{}, s));
  }
  return f.monic();
}

}  // namespace

static std::vector<std::pair<MPoly, int>> factor_core(const MPoly& f0) {
  if (f0.is_zero()) throw MathError(MathError::Code::ZeroPolynomial, "factoring the zero polynomial");
  if (!f0.domain().is_field()) throw CapabilityError("factorization-domain", "factorization needs Q or F_p coefficients");
  std::vector<std::pair<MPoly, int>> out;
  if (f0.is_constant()) return out;
  const FactorLimits limits;

  Kronecker kr;
  kr.nvars = f0.nvars();
  kr.domain = f0.domain();
  kr.vars = f0.variables();
  BigInt w = 1;
  for (std::size_t v : kr.vars) {
    kr.weights.push_back(w);
    kr.bases.push_back(f0.degree(v) + 1);
    w *= f0.degree(v) + 1;
  }
  if (w > limits.max_substituted_degree + 1) {
    throw CapabilityError("factorization-degree", "Kronecker substitution degree " + BigInt(w - 1).str() + " exceeds limit");
  }
  std::size_t image_degree = 0;
  for (const auto& [e, c] : f0.terms()) image_degree = std::max(image_degree, kr.encode(e));

  // Univariate image and its irreducible factors as coefficient vectors.
  std::vector<std::vector<Scalar>> pieces;
  MPoly f = normalize_factor(f0);
  if (kr.domain.is_rational()) {
    ZPoly img(image_degree + 1, 0);
    for (const auto& [e, c] : f.terms()) img[kr.encode(e)] = boost::multiprecision::numerator(c.rational());
    for (const auto& [g, mult] : factor_z(img)) {
      std::vector<Scalar> cs;
      for (const auto& c : g) cs.emplace_back(Domain{}, BigRational(c));
      for (int i = 0; i < mult; ++i) pieces.push_back(cs);
    }
  } else {
    GaloisField k(kr.domain.modulus);
    GFPoly img(image_degree + 1, k.zero());
    for (const auto& [e, c] : f.terms()) img[kr.encode(e)] = GaloisField::Elem{c.residue()};
    for (const auto& [g, mult] : factor_gf(k, img)) {
      std::vector<Scalar> cs;
      for (const auto& c : g) cs.emplace_back(kr.domain, static_cast<long long>(c[0]));
      for (int i = 0; i < mult; ++i) pieces.push_back(cs);
    }
  }
  if (pieces.size() > limits.max_modular_factors) {
    throw CapabilityError("factorization-recombination", "too many univariate pieces to recombine");
  }

  auto poly_mul = [](const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    std::vector<Scalar> r(a.size() + b.size() - 1, Scalar(a[0].domain(), 0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
  };

  std::vector<MPoly> found;
  std::vector<std::size_t> alive(pieces.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  std::size_t size = 1;
  while (size <= alive.size() && !f.is_constant()) {
    std::vector<std::size_t> pick(size);
    std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t start, std::size_t depth) -> bool {
      if (depth == size) {
        std::vector<Scalar> prod{Scalar(kr.domain, 1)};
        for (std::size_t idx : pick) prod = poly_mul(prod, pieces[alive[idx]]);
        MPoly cand = kr.decode(prod);
        if (cand.is_constant()) return false;
        auto q = f.divide(cand);
        if (!q) return false;
        found.push_back(normalize_factor(cand));
        f = *q;
        std::vector<std::size_t> next;
        for (std::size_t i = 0; i < alive.size(); ++i) {
          if (std::find(pick.begin(), pick.end(), i) == pick.end()) next.push_back(alive[i]);
        }
        alive = next;
        return true;
      }
      for (std::size_t i = start; i < alive.size(); ++i) {
        pick[depth] = i;
        if (search(i + 1, depth + 1)) return true;
      }
      return false;
    };
    if (!search(0, 0)) ++size;
  }
  if (!f.is_constant()) found.push_back(normalize_factor(f));

  for (MPoly& g : found) {
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& pr) { return pr.first == g; });
    if (it != out.end()) {
      ++it->second;
    } else {
      out.emplace_back(std::move(g), 1);
    }
  }
  return out;
}

// Monomial content and per-variable contents are split off first so the
// Kronecker image only carries the genuinely mixed part.
std::vector<std::pair<MPoly, int>> factor_multivariate(const MPoly& f0) {
  if (f0.is_zero()) throw MathError(MathError::Code::ZeroPolynomial, "factoring the zero polynomial");
  if (!f0.domain().is_field()) throw CapabilityError("factorization-domain", "factorization needs Q or F_p coefficients");
  std::vector<std::pair<MPoly, int>> out;
  auto merge = [&out](const MPoly& g, int m) {
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& pr) { return pr.first == g; });
    if (it != out.end()) {
      it->second += m;
    } else {
      out.emplace_back(g, m);
    }
  };
  MPoly f = f0;
  const std::size_t nv = f.nvars();
  Exponent low(nv, 0);
  for (std::size_t v = 0; v < nv; ++v) {
    int k = -1;
    for (const auto& [e, c] : f.terms()) k = k < 0 ? e[v] : std::min(k, e[v]);
    if (k > 0) {
      low[v] = k;
      merge(MPoly::variable(nv, f.domain(), v), k);
    }
  }
  if (std::any_of(low.begin(), low.end(), [](int k) { return k > 0; })) {
    MPoly mono = MPoly::monomial(nv, Scalar(f.domain(), 1), low);
    f = *f.divide(mono);
  }
  if (f.is_constant()) return out;
  for (std::size_t v : f.variables()) {
    MPoly c = content(f, v);
    if (c.is_constant()) continue;
    f = *f.divide(c);
    for (const auto& [g, m] : factor_multivariate(c)) merge(g, m);
  }
  for (const auto& [g, m] : factor_core(f)) merge(g, m);
  return out;
}

}  // namespace fgfc
