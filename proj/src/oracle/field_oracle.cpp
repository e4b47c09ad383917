#include "fgfc/oracle.hpp"

#include <algorithm>
#include <functional>

namespace fgfc {

namespace {

using IntPoly = std::vector<BigInt>;  // ascending

BigInt babs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

void trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Primitive integer coefficients of a univariate rational polynomial.
IntPoly to_int_poly(const MPoly& f, std::size_t var) {
  MPoly g = f.scaled(Scalar(Domain{}, BigRational(1) / rational_content(f)));
  IntPoly out(static_cast<std::size_t>(g.degree(var)) + 1, 0);
  for (const auto& [e, c] : g.terms()) out[static_cast<std::size_t>(e[var])] = boost::multiprecision::numerator(c.rational());
  if (out.back() < 0) {
    for (auto& c : out) c = -c;
  }
  return out;
}

MPoly from_int_poly(const IntPoly& a, std::size_t nvars, std::size_t var) {
  MPoly m(nvars, Domain{});
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    Exponent e(nvars, 0);
    e[var] = static_cast<int>(i);
    m.add_term(e, Scalar(Domain{}, BigRational(a[i])));
  }
  return m;
}

// Exact quotient a / b over Z, if any.
bool int_divide(const IntPoly& a, const IntPoly& b, IntPoly& q) {
  IntPoly r = a;
  if (r.size() < b.size()) return false;
  q.assign(r.size() - b.size() + 1, 0);
  for (std::size_t i = r.size(); i >= b.size(); --i) {
    if (r[i - 1] == 0) continue;
    if (r[i - 1] % b.back() != 0) return false;
    BigInt t = r[i - 1] / b.back();
    q[i - b.size()] = t;
    for (std::size_t j = 0; j < b.size(); ++j) r[i - b.size() + j] -= t * b[j];
  }
  trim(r);
  trim(q);
  return r.empty();
}

BigInt eval(const IntPoly& a, const BigInt& x) {
  BigInt v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * x + a[i];
  return v;
}

std::vector<long long> positive_divisors(long long n) {
  std::vector<long long> small, large;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

constexpr long long kMaxMagnitude = 1LL << 40;

// Monic divisor search over F_p: smallest degrees first.
std::vector<MPoly> fp_factors(MPoly f, std::size_t var) {
  const Domain d = f.domain();
  const std::uint64_t p = d.modulus;
  if (p > 13 || f.degree(var) > 8) throw OracleUnavailable("F_p factor search beyond p <= 13, degree <= 8");
  std::vector<MPoly> out;
  f = f.monic();
  const std::size_t nv = f.nvars();
  for (int k = 1; 2 * k <= f.degree(var); ++k) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(k), 0);
    while (true) {
      MPoly g = MPoly::variable(nv, d, var, k);
      for (int i = 0; i < k; ++i) {
        if (c[static_cast<std::size_t>(i)] != 0) {
          g += MPoly::variable(nv, d, var, i).scaled(Scalar(d, static_cast<long long>(c[static_cast<std::size_t>(i)])));
        }
      }
      bool found = false;
      while (auto q = f.divide(g)) {
        found = true;
        f = *q;
      }
      if (found) out.push_back(g);
      std::size_t pos = 0;
      while (pos < c.size() && ++c[pos] == p) c[pos++] = 0;
      if (pos == c.size()) break;
    }
  }
  if (f.degree(var) >= 1) out.push_back(f);
  return out;
}

// Integer factor of degree k through the given points, by Kronecker's
// interpolation over divisor tuples (divided differences prune early).
bool kronecker_factor(const IntPoly& f, int k, IntPoly& factor) {
  std::vector<std::pair<long long, long long>> pts;  // (x, f(x))
  for (long long a = -12; a <= 12; ++a) {
    BigInt v = eval(f, BigInt(a));
    if (v == 0) return false;  // roots are removed beforehand
    if (babs(v) < kMaxMagnitude) pts.emplace_back(a, static_cast<long long>(v));
  }
  if (pts.size() < static_cast<std::size_t>(k + 1)) throw OracleUnavailable("values too large for interpolation");
  std::stable_sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    return positive_divisors(std::llabs(a.second)).size() < positive_divisors(std::llabs(b.second)).size();
  });
  pts.resize(static_cast<std::size_t>(k + 1));
  std::vector<std::vector<long long>> cands;
  for (const auto& pt : pts) {
    std::vector<long long> ds;
    for (long long dv : positive_divisors(std::llabs(pt.second))) {
      ds.push_back(dv);
      ds.push_back(-dv);
    }
    cands.push_back(ds);
  }
  const BigInt lc = f.back();
  // table[j][m]: divided difference of order m ending at point j; the Newton
  // coefficients are the diagonal table[i][i].
  std::vector<std::vector<long long>> table(static_cast<std::size_t>(k + 1));
  std::function<bool(std::size_t)> rec = [&](std::size_t j) -> bool {
    if (j == static_cast<std::size_t>(k + 1)) {
      long long top = table[j - 1][j - 1];
      if (top == 0 || lc % top != 0) return false;
      // Newton form -> coefficients.
      IntPoly g{BigInt(table[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)])};
      for (int i = k - 1; i >= 0; --i) {
        IntPoly next(g.size() + 1, 0);
        for (std::size_t m = 0; m < g.size(); ++m) {
          next[m + 1] += g[m];
          next[m] -= g[m] * pts[static_cast<std::size_t>(i)].first;
        }
        next[0] += table[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
        g = next;
      }
      trim(g);
      if (static_cast<int>(g.size()) != k + 1) return false;
      IntPoly q;
      if (!int_divide(f, g, q)) return false;
      factor = g;
      return true;
    }
    const auto& choices = cands[j];
    for (std::size_t c = 0; c < choices.size(); ++c) {
      if (j == 0 && choices[c] < 0) continue;  // g and -g give the same factor
      table[j].assign(j + 1, 0);
      table[j][0] = choices[c];
      bool ok = true;
      for (std::size_t m = 1; m <= j && ok; ++m) {
        long long num = table[j][m - 1] - table[j - 1][m - 1];
        long long den = pts[j].first - pts[j - m].first;
        if (num % den != 0) ok = false;
        else table[j][m] = num / den;
      }
      if (ok) {
        if (rec(j + 1)) return true;
      }
    }
    return false;
  };
  return rec(0);
}

std::vector<MPoly> q_factors(const MPoly& f0, std::size_t var) {
  if (f0.degree(var) > 8) throw OracleUnavailable("Q factor search beyond degree 8");
  const std::size_t nv = f0.nvars();
  IntPoly f = to_int_poly(f0, var);
  std::vector<IntPoly> found;
  auto strip = [&](const IntPoly& g) {
    IntPoly q;
    bool any = false;
    while (f.size() > 1 && int_divide(f, g, q)) {
      f = q;
      any = true;
    }
    if (any) found.push_back(g);
  };
  if (f.front() == 0) strip(IntPoly{0, 1});
  // Rational roots p/q: p | a0, q | lc.
  if (f.size() > 2) {
    if (babs(f.front()) > kMaxMagnitude || babs(f.back()) > kMaxMagnitude) throw OracleUnavailable("coefficients too large");
    for (long long q : positive_divisors(static_cast<long long>(babs(f.back())))) {
      for (long long p : positive_divisors(static_cast<long long>(babs(f.front())))) {
        for (long long s : {1LL, -1LL}) {
          if (f.size() <= 2) break;
          IntPoly lin{BigInt(-s * p), BigInt(q)};
          strip(lin);
        }
      }
    }
  }
  for (int k = 2; 2 * k <= static_cast<int>(f.size()) - 1; ++k) {
    IntPoly g;
    while (2 * k <= static_cast<int>(f.size()) - 1 && kronecker_factor(f, k, g)) {
      if (g.back() < 0) {
        for (auto& c : g) c = -c;
      }
      strip(g);
    }
  }
  if (f.size() >= 2) {
    if (f.back() < 0) {
      for (auto& c : f) c = -c;
    }
    found.push_back(f);
  }
  std::vector<MPoly> out;
  for (const IntPoly& g : found) {
    if (g.size() >= 2) out.push_back(from_int_poly(g, nv, var));
  }
  return out;
}

}  // namespace

std::vector<MPoly> oracle_univariate_factors(const MPoly& f, std::size_t var) {
  if (f.is_zero() || f.degree(var) < 1) return {};
  for (std::size_t v : f.variables()) {
    if (v != var) throw OracleUnavailable("univariate oracle given a multivariate polynomial");
  }
  return f.domain().is_rational() ? q_factors(f, var) : fp_factors(f, var);
}

std::vector<PrimeRep> gcd_factor_oracle(const GenList& i) {
  const RingDescriptor& r = i.ring;
  if (!r.base().is_field() || !r.is_root()) throw OracleUnavailable("gcd oracle needs Q or F_p");
  MPoly g(r.nvars(), r.domain());
  for (const Poly& p : i.gens) g = gcd(g, p.to_element().num());
  PrimeRep zero(r.base(), r.space(), BasePrime::zero(), {i.var});
  if (g.is_zero()) return {zero};
  std::vector<PrimeRep> out;
  for (const MPoly& f : oracle_univariate_factors(g, i.var)) out.push_back(zero.with_poly(i.var, RingElement(f)));
  return out;
}

}  // namespace fgfc
