#include "fgfc/ring_element.hpp"

#include "fgfc/errors.hpp"

namespace fgfc {

RingElement::RingElement(MPoly num) : num_(std::move(num)) {
  den_ = MPoly::constant(num_.nvars(), num_.domain(), 1);
}

RingElement::RingElement(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

RingElement RingElement::zero(std::size_t nvars, Domain d) { return RingElement(MPoly(nvars, d)); }

RingElement RingElement::one(std::size_t nvars, Domain d) { return RingElement(MPoly::constant(nvars, d, 1)); }

RingElement RingElement::integer(std::size_t nvars, Domain d, long long v) {
  return RingElement(MPoly::constant(nvars, d, v));
}

void RingElement::normalize() {
  if (den_.is_zero()) throw MathError(MathError::Code::ZeroElement, "fraction with zero denominator");
  const std::size_t n = num_.nvars();
  if (num_.is_zero()) {
    den_ = MPoly::constant(n, num_.domain(), 1);
    return;
  }
  if (den_.is_constant()) {
    if (!den_.is_one()) {
      num_ = num_.scaled(den_.leading_coeff().inverse());
      den_ = MPoly::constant(n, num_.domain(), 1);
    }
    return;
  }
  if (!num_.domain().is_field()) {
    throw MathError(MathError::Code::ZeroElement, "non-constant denominator over a non-field coefficient ring");
  }
  MPoly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = *num_.divide(g);
    den_ = *den_.divide(g);
  }
  Scalar s = den_.leading_coeff().inverse();
  num_ = num_.scaled(s);
  den_ = den_.scaled(s);
}

RingElement RingElement::operator-() const {
  RingElement r = *this;
  r.num_ = -r.num_;
  return r;
}

RingElement operator+(const RingElement& a, const RingElement& b) {
  if (a.den_ == b.den_) return RingElement(a.num_ + b.num_, a.den_);
  return RingElement(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RingElement operator-(const RingElement& a, const RingElement& b) { return a + (-b); }

RingElement operator*(const RingElement& a, const RingElement& b) {
  if (a.den_.is_one() && b.den_.is_one()) return RingElement(a.num_ * b.num_);
  return RingElement(a.num_ * b.num_, a.den_ * b.den_);
}

RingElement operator/(const RingElement& a, const RingElement& b) { return a * b.inverse(); }

RingElement RingElement::inverse() const {
  if (is_zero()) throw MathError(MathError::Code::ZeroElement, "inverse of zero");
  if (!domain().is_field()) {
    if (!num_.is_constant()) throw MathError(MathError::Code::NotMember, "inverse of a non-constant over Z/m");
    return RingElement(MPoly::constant(nvars(), num_.leading_coeff().inverse()));
  }
  return RingElement(den_, num_);
}

RingElement RingElement::pow(unsigned e) const {
  RingElement r = one(nvars(), domain());
  RingElement b = *this;
  while (e > 0) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e > 0) b *= b;
  }
  return r;
}

bool operator<(const RingElement& a, const RingElement& b) {
  if (!(a.num_ == b.num_)) return a.num_ < b.num_;
  return a.den_ < b.den_;
}

RingElement RingElement::map_coeffs(Domain target) const {
  return RingElement(num_.map_coeffs(target), den_.map_coeffs(target));
}

std::string RingElement::str(const std::vector<std::string>& names) const {
  if (den_.is_one()) return num_.str(names);
  return "(" + num_.str(names) + ")/(" + den_.str(names) + ")";
}

}  // namespace fgfc
