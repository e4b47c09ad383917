#pragma once

// Coefficient arithmetic shared by every ring in the engine: exact rationals,
// residues modulo a prime, and residues modulo a composite integer.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace fgfc {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Coefficient domain: modulus 0 means Q, otherwise Z/modulus.
struct Domain {
  std::uint64_t modulus = 0;

  bool is_rational() const { return modulus == 0; }
  bool is_field() const;  // Q or Z/p
  friend bool operator==(const Domain&, const Domain&) = default;
};

bool is_prime_u64(std::uint64_t n);

class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(Domain d) : domain_(d) {}
  Scalar(Domain d, long long v);
  Scalar(Domain d, const BigRational& v);

  Domain domain() const { return domain_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const;

  // Rational value; only valid in Q.
  const BigRational& rational() const { return q_; }
  // Residue in [0, modulus); only valid in Z/m.
  std::uint64_t residue() const { return r_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

  /// Multiplicative inverse; throws std::domain_error for non-units.
  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Total order for canonical sorting (not an algebraic order).
  friend bool operator<(const Scalar& a, const Scalar& b);

  /// Reduce a rational (or a residue modulo a multiple) into another domain.
  /// Throws std::domain_error if a denominator is not invertible there.
  Scalar convert(Domain target) const;

  std::string str() const;

 private:
  Domain domain_{};
  BigRational q_{0};
  std::uint64_t r_ = 0;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

}  // namespace fgfc
