#include "fgfc/scalar.hpp"

#include <numeric>
#include <stdexcept>

namespace fgfc {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit inputs.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool Domain::is_field() const { return modulus == 0 || is_prime_u64(modulus); }

Scalar::Scalar(Domain d, long long v) : domain_(d) {
  if (d.is_rational()) {
    q_ = v;
  } else {
    long long m = static_cast<long long>(d.modulus);
    long long r = v % m;
    if (r < 0) r += m;
    r_ = static_cast<std::uint64_t>(r);
  }
}

Scalar::Scalar(Domain d, const BigRational& v) : domain_(d) {
  if (d.is_rational()) {
    q_ = v;
  } else {
    *this = Scalar(Domain{}, v).convert(d);
  }
}

bool Scalar::is_zero() const { return domain_.is_rational() ? q_ == 0 : r_ == 0; }

bool Scalar::is_one() const {
  return domain_.is_rational() ? q_ == 1 : r_ == 1 % domain_.modulus;
}

bool Scalar::is_unit() const {
  if (domain_.is_rational()) return q_ != 0;
  return std::gcd(r_, domain_.modulus) == 1;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (domain_.is_rational()) {
    s.q_ = -q_;
  } else if (r_ != 0) {
    s.r_ = domain_.modulus - r_;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (domain_.is_rational()) {
    q_ += o.q_;
  } else {
    r_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r_) + o.r_) % domain_.modulus);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (domain_.is_rational()) {
    q_ *= o.q_;
  } else {
    r_ = mulmod(r_, o.r_, domain_.modulus);
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (!is_unit()) throw std::domain_error("inverse of a non-unit coefficient " + str());
  Scalar s = *this;
  if (domain_.is_rational()) {
    s.q_ = 1 / q_;
    return s;
  }
  // Extended Euclid on signed 128-bit values.
  __int128 a = r_, m = domain_.modulus, x0 = 1, x1 = 0;
  while (m != 0) {
    __int128 q = a / m;
    __int128 t = a - q * m;
    a = m;
    m = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  __int128 mod = domain_.modulus;
  s.r_ = static_cast<std::uint64_t>(((x0 % mod) + mod) % mod);
  return s;
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar r(domain_, 1);
  Scalar b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.domain_.is_rational()) return a.q_ == b.q_;
  return a.r_ == b.r_;
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (a.domain_.is_rational()) return a.q_ < b.q_;
  return a.r_ < b.r_;
}

Scalar Scalar::convert(Domain target) const {
  if (target == domain_) return *this;
  if (target.is_rational()) {
    if (!domain_.is_rational()) throw std::domain_error("cannot lift a residue to Q");
    return *this;
  }
  if (domain_.is_rational()) {
    BigInt m = target.modulus;
    BigInt num = boost::multiprecision::numerator(q_);
    BigInt den = boost::multiprecision::denominator(q_);
    BigInt nr = num % m;
    if (nr < 0) nr += m;
    BigInt dr = den % m;
    Scalar n(target), d(target);
    n.r_ = static_cast<std::uint64_t>(nr);
    d.r_ = static_cast<std::uint64_t>(dr);
    return n * d.inverse();
  }
  if (domain_.modulus % target.modulus != 0) {
    throw std::domain_error("incompatible residue moduli");
  }
  Scalar s(target);
  s.r_ = r_ % target.modulus;
  return s;
}

std::string Scalar::str() const {
  if (domain_.is_rational()) {
    if (boost::multiprecision::denominator(q_) == 1) return boost::multiprecision::numerator(q_).str();
    return boost::multiprecision::numerator(q_).str() + "/" + boost::multiprecision::denominator(q_).str();
  }
  return std::to_string(r_);
}

}  // namespace fgfc
