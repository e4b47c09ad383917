#include "fgfc/galois.hpp"

#include "fgfc/errors.hpp"

#include <random>
#include <stdexcept>

namespace fgfc {

GaloisField::GaloisField(std::uint64_t p, std::vector<std::uint64_t> modulus)
    : p_(p), d_(modulus.empty() ? 1 : modulus.size() - 1), modulus_(std::move(modulus)) {
  if (!modulus_.empty() && modulus_.back() != 1) throw std::invalid_argument("field modulus must be monic");
}

BigInt GaloisField::order() const {
  BigInt q = 1;
  for (std::size_t i = 0; i < d_; ++i) q *= p_;
  return q;
}

GaloisField::Elem GaloisField::one() const {
  Elem e(d_, 0);
  e[0] = 1 % p_;
  return e;
}

GaloisField::Elem GaloisField::from_int(long long v) const {
  Elem e(d_, 0);
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += static_cast<long long>(p_);
  e[0] = static_cast<std::uint64_t>(r);
  return e;
}

GaloisField::Elem GaloisField::from_coeffs(std::vector<std::uint64_t> c) const {
  for (auto& x : c) x %= p_;
  if (d_ == 1) {
    Elem e(1, 0);
    // Evaluate at the single "u" = nothing: constant term only.
    e[0] = c.empty() ? 0 : c[0];
    for (std::size_t i = 1; i < c.size(); ++i) {
      if (c[i] != 0) throw std::invalid_argument("prime field element with u-terms");
    }
    return e;
  }
  // Reduce modulo the monic modulus.
  for (std::size_t i = c.size(); i-- > d_;) {
    std::uint64_t t = c[i];
    if (t == 0) continue;
    for (std::size_t j = 0; j <= d_; ++j) {
      std::uint64_t sub = mulmod(t, modulus_[j], p_);
      std::uint64_t& x = c[i - d_ + j];
      x = (x + p_ - sub) % p_;
    }
  }
  c.resize(d_, 0);
  return c;
}

bool GaloisField::is_zero(const Elem& a) const {
  for (auto x : a) {
    if (x != 0) return false;
  }
  return true;
}

GaloisField::Elem GaloisField::add(const Elem& a, const Elem& b) const {
  Elem r(d_);
  for (std::size_t i = 0; i < d_; ++i) r[i] = (a[i] + b[i]) % p_;
  return r;
}

GaloisField::Elem GaloisField::neg(const Elem& a) const {
  Elem r(d_);
  for (std::size_t i = 0; i < d_; ++i) r[i] = a[i] == 0 ? 0 : p_ - a[i];
  return r;
}

GaloisField::Elem GaloisField::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

GaloisField::Elem GaloisField::mul(const Elem& a, const Elem& b) const {
  if (d_ == 1) return Elem{mulmod(a[0], b[0], p_)};
  std::vector<std::uint64_t> c(2 * d_ - 1, 0);
  for (std::size_t i = 0; i < d_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d_; ++j) c[i + j] = (c[i + j] + mulmod(a[i], b[j], p_)) % p_;
  }
  return from_coeffs(std::move(c));
}

GaloisField::Elem GaloisField::pow(const Elem& a, const BigInt& e) const {
  Elem r = one();
  if (e == 0) return r;
  for (long i = static_cast<long>(boost::multiprecision::msb(e)); i >= 0; --i) {
    r = mul(r, r);
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) r = mul(r, a);
  }
  return r;
}

GaloisField::Elem GaloisField::inv(const Elem& a) const {
  if (is_zero(a)) throw MathError(MathError::Code::ZeroElement, "inverse of zero in a finite field");
  return pow(a, order() - 2);
}

namespace gfpoly {

void trim(const GaloisField& k, GFPoly& a) {
  while (!a.empty() && k.is_zero(a.back())) a.pop_back();
}

GFPoly add(const GaloisField& k, const GFPoly& a, const GFPoly& b) {
  GFPoly r(std::max(a.size(), b.size()), k.zero());
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] = k.add(r[i], a[i]);
    if (i < b.size()) r[i] = k.add(r[i], b[i]);
  }
  trim(k, r);
  return r;
}

GFPoly sub(const GaloisField& k, const GFPoly& a, const GFPoly& b) {
  GFPoly nb = b;
  for (auto& x : nb) x = k.neg(x);
  return add(k, a, nb);
}

GFPoly mul(const GaloisField& k, const GFPoly& a, const GFPoly& b) {
  if (a.empty() || b.empty()) return {};
  GFPoly r(a.size() + b.size() - 1, k.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (k.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
  }
  trim(k, r);
  return r;
}

std::pair<GFPoly, GFPoly> divmod(const GaloisField& k, const GFPoly& a, const GFPoly& b) {
  if (b.empty()) throw MathError(MathError::Code::ZeroPolynomial, "division by zero polynomial");
  GFPoly r = a;
  trim(k, r);
  if (r.size() < b.size()) return {{}, r};
  GFPoly q(r.size() - b.size() + 1, k.zero());
  GaloisField::Elem inv = k.inv(b.back());
  for (std::size_t i = r.size(); i-- >= b.size();) {
    GaloisField::Elem t = k.mul(r[i], inv);
    q[i - b.size() + 1] = t;
    if (k.is_zero(t)) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i - b.size() + 1 + j] = k.sub(r[i - b.size() + 1 + j], k.mul(t, b[j]));
    }
    if (i == b.size() - 1) break;
  }
  trim(k, r);
  trim(k, q);
  return {q, r};
}

GFPoly monic(const GaloisField& k, const GFPoly& a) {
  if (a.empty()) return a;
  GaloisField::Elem inv = k.inv(a.back());
  GFPoly r = a;
  for (auto& x : r) x = k.mul(x, inv);
  return r;
}

GFPoly gcd(const GaloisField& k, GFPoly a, GFPoly b) {
  trim(k, a);
  trim(k, b);
  while (!b.empty()) {
    GFPoly r = divmod(k, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(k, a);
}

std::tuple<GFPoly, GFPoly, GFPoly> xgcd(const GaloisField& k, const GFPoly& a0, const GFPoly& b0) {
  GFPoly a = a0, b = b0, s0{k.one()}, s1{}, t0{}, t1{k.one()};
  trim(k, a);
  trim(k, b);
  while (!b.empty()) {
    auto [q, r] = divmod(k, a, b);
    a = std::move(b);
    b = std::move(r);
    GFPoly s2 = sub(k, s0, mul(k, q, s1));
    GFPoly t2 = sub(k, t0, mul(k, q, t1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (a.empty()) return {a, s0, t0};
  GaloisField::Elem inv = k.inv(a.back());
  for (auto& x : a) x = k.mul(x, inv);
  for (auto& x : s0) x = k.mul(x, inv);
  for (auto& x : t0) x = k.mul(x, inv);
  return {a, s0, t0};
}

GFPoly derivative(const GaloisField& k, const GFPoly& a) {
  GFPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(k.mul(a[i], k.from_int(static_cast<long long>(i % k.characteristic()))));
  trim(k, r);
  return r;
}

GFPoly powmod(const GaloisField& k, GFPoly base, const BigInt& e, const GFPoly& mod) {
  GFPoly r{k.one()};
  r = divmod(k, r, mod).second;
  base = divmod(k, base, mod).second;
  if (e == 0) return r;
  for (long i = static_cast<long>(boost::multiprecision::msb(e)); i >= 0; --i) {
    r = divmod(k, mul(k, r, r), mod).second;
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) r = divmod(k, mul(k, r, base), mod).second;
  }
  return r;
}

}  // namespace gfpoly

namespace {

using namespace gfpoly;

// p-th root of a polynomial whose derivative vanishes.
GFPoly pth_root(const GaloisField& k, const GFPoly& f) {
  std::uint64_t p = k.characteristic();
  BigInt e = k.order() / p;  // a -> a^(q/p) inverts Frobenius
  GFPoly r;
  for (std::size_t i = 0; i < f.size(); i += p) r.push_back(k.pow(f[i], e));
  trim(k, r);
  return r;
}

void squarefree(const GaloisField& k, const GFPoly& f, int mult, std::vector<std::pair<GFPoly, int>>& out) {
  GFPoly df = derivative(k, f);
  if (df.empty()) {
    if (f.size() > 1) squarefree(k, pth_root(k, f), mult * static_cast<int>(k.characteristic()), out);
    return;
  }
  GFPoly c = gcd(k, f, df);
  GFPoly w = divmod(k, f, c).first;
  int i = 1;
  while (w.size() > 1) {
    GFPoly y = gcd(k, w, c);
    GFPoly z = divmod(k, w, y).first;
    if (z.size() > 1) out.emplace_back(monic(k, z), i * mult);
    ++i;
    w = y;
    c = divmod(k, c, y).first;
  }
  if (c.size() > 1) squarefree(k, pth_root(k, c), mult * static_cast<int>(k.characteristic()), out);
}

void equal_degree(const GaloisField& k, const GFPoly& f, std::size_t d, std::mt19937_64& rng,
                  std::vector<GFPoly>& out) {
  std::size_t n = f.size() - 1;
  if (n == d) {
    out.push_back(f);
    return;
  }
  const BigInt q = k.order();
  std::uniform_int_distribution<std::uint64_t> dist(0, k.characteristic() - 1);
  while (true) {
    GFPoly a(n, k.zero());
    for (auto& c : a) {
      std::vector<std::uint64_t> cs(k.degree());
      for (auto& x : cs) x = dist(rng);
      c = k.from_coeffs(cs);
    }
    trim(k, a);
    if (a.size() < 2) continue;
    GFPoly b;
    if (k.characteristic() == 2) {
      // Trace map a + a^2 + ... + a^(2^(m d - 1)) with q = 2^m.
      std::size_t steps = static_cast<std::size_t>(boost::multiprecision::msb(q)) * d;
      GFPoly t = divmod(k, a, f).second;
      b = t;
      for (std::size_t i = 1; i < steps; ++i) {
        t = divmod(k, mul(k, t, t), f).second;
        b = add(k, b, t);
      }
    } else {
      BigInt e = (boost::multiprecision::pow(q, static_cast<unsigned>(d)) - 1) / 2;
      b = sub(k, powmod(k, a, e, f), GFPoly{k.one()});
    }
    GFPoly g = gcd(k, b, f);
    if (g.size() > 1 && g.size() < f.size()) {
      equal_degree(k, g, d, rng, out);
      equal_degree(k, monic(k, divmod(k, f, g).first), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<GFPoly, int>> factor_gf(const GaloisField& k, const GFPoly& f0) {
  GFPoly f = f0;
  trim(k, f);
  if (f.empty()) throw MathError(MathError::Code::ZeroPolynomial, "factoring the zero polynomial");
  std::vector<std::pair<GFPoly, int>> sqf, out;
  if (f.size() == 1) return out;
  squarefree(k, monic(k, f), 1, sqf);
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  const BigInt q = k.order();
  for (const auto& [g0, mult] : sqf) {
    GFPoly g = g0;
    GFPoly x{k.zero(), k.one()};
    GFPoly h = x;
    for (std::size_t d = 1; 2 * d <= g.size() - 1; ++d) {
      h = powmod(k, h, q, g);
      GFPoly part = gcd(k, sub(k, h, x), g);
      if (part.size() > 1) {
        std::vector<GFPoly> pieces;
        equal_degree(k, part, d, rng, pieces);
        for (auto& p : pieces) out.emplace_back(std::move(p), mult);
        g = divmod(k, g, part).first;
        h = divmod(k, h, g).second;
      }
    }
    if (g.size() > 1) out.emplace_back(monic(k, g), mult);
  }
  return out;
}

}  // namespace fgfc
