#include "fgfc/poly.hpp"

#include <algorithm>

namespace fgfc {

Poly::Poly(std::size_t var, std::vector<RingElement> coeffs, std::size_t nvars, Domain d)
    : var_(var), nvars_(nvars), domain_(d), coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::monomial(std::size_t var, const RingElement& c, std::size_t exp) {
  std::vector<RingElement> cs(exp + 1, RingElement::zero(c.nvars(), c.domain()));
  cs[exp] = c;
  return Poly(var, std::move(cs), c.nvars(), c.domain());
}

Poly Poly::from_element(std::size_t var, const RingElement& a) {
  if (a.den().involves(var)) throw MathError(MathError::Code::Shape, "denominator involves the polynomial variable");
  std::vector<RingElement> cs;
  for (const MPoly& c : a.num().coeffs_in(var)) cs.emplace_back(c, a.den());
  return Poly(var, std::move(cs), a.nvars(), a.domain());
}

RingElement Poly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : RingElement::zero(nvars_, domain_);
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<RingElement> cs(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = a.coeff(i) + b.coeff(i);
  return Poly(a.var_, std::move(cs), a.nvars_, a.domain_);
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.var_, a.nvars_, a.domain_);
  std::vector<RingElement> cs(a.coeffs_.size() + b.coeffs_.size() - 1, RingElement::zero(a.nvars_, a.domain_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(a.var_, std::move(cs), a.nvars_, a.domain_);
}

Poly Poly::scaled(const RingElement& c) const {
  std::vector<RingElement> cs;
  cs.reserve(coeffs_.size());
  for (const auto& x : coeffs_) cs.push_back(x * c);
  return Poly(var_, std::move(cs), nvars_, domain_);
}

RingElement Poly::to_element() const {
  if (coeffs_.empty()) return RingElement::zero(nvars_, domain_);
  // Common denominator: lcm of coefficient denominators.
  MPoly den = MPoly::constant(nvars_, domain_, 1);
  for (const auto& c : coeffs_) {
    if (c.den().is_constant()) continue;
    MPoly g = gcd(den, c.den());
    den = *(den * c.den()).divide(g);
  }
  MPoly num(nvars_, domain_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    MPoly scale = *den.divide(coeffs_[i].den());
    num += (coeffs_[i].num() * scale) * MPoly::variable(nvars_, domain_, var_, static_cast<int>(i));
  }
  return RingElement(num, den);
}

Poly Poly::in_ring(const RingDescriptor& r) const {
  std::vector<RingElement> cs;
  for (const auto& c : coeffs_) cs.push_back(r.canonical(c));
  return Poly(var_, std::move(cs), r.nvars(), r.domain());
}

LeadingData leading_data(const Poly& f) {
  if (f.is_zero()) throw MathError(MathError::Code::ZeroPolynomial, "leading data of the zero polynomial");
  return {f.degree(), f.lc()};
}

Poly reduce_by_monic(const Poly& f, const Poly& g, Poly* quotient) {
  if (g.degree() < 1 || !g.is_monic()) {
    throw MathError(MathError::Code::NotMonic, "reduction needs a monic divisor of positive degree");
  }
  Poly r = f;
  Poly q = Poly::zero(f.var(), f.nvars(), f.domain());
  while (r.degree() >= g.degree()) {
    Poly t = Poly::monomial(f.var(), r.lc(), static_cast<std::size_t>(r.degree() - g.degree()));
    r = r - t * g;
    q = q + t;
  }
  if (quotient != nullptr) *quotient = q;
  return r;
}

std::vector<std::string> GenList::render() const {
  std::vector<std::string> out;
  for (const Poly& p : gens) out.push_back(p.str(ring.space().names()));
  return out;
}

GenList normalize(const GenList& g) {
  GenList out{g.ring, g.var, {}};
  for (const Poly& p : g.gens) {
    Poly q = p.in_ring(g.ring);
    if (!q.is_zero()) out.gens.push_back(std::move(q));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < out.gens.size() && !changed; ++i) {
      for (std::size_t j = 0; j < out.gens.size(); ++j) {
        const Poly& m = out.gens[j];
        if (j == i || m.degree() < 1 || !m.is_monic()) continue;
        int di = out.gens[i].degree();
        if (m.degree() > di || (m.degree() == di && j > i)) continue;
        Poly r = reduce_by_monic(out.gens[i], m);
        if (r.is_zero()) {
          out.gens.erase(out.gens.begin() + static_cast<long>(i));
        } else {
          out.gens[i] = std::move(r);
        }
        changed = true;
        break;
      }
    }
  }
  return out;
}

int d_measure(const GenList& g) {
  int d = 0;
  for (const Poly& p : normalize(g).gens) d += p.degree();
  return d;
}

}  // namespace fgfc
