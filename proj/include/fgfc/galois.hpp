#pragma once

// Finite fields F_p[u]/(g) and univariate factorization over them
// (squarefree split, distinct-degree split, Cantor-Zassenhaus).

#include "fgfc/scalar.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace fgfc {

class GaloisField {
 public:
  using Elem = std::vector<std::uint64_t>;  // coefficients in u, length degree()

  /// F_p when `modulus` is empty, otherwise F_p[u]/(modulus) with monic irreducible modulus.
  explicit GaloisField(std::uint64_t p, std::vector<std::uint64_t> modulus = {});

  std::uint64_t characteristic() const { return p_; }
  std::size_t degree() const { return d_; }
  BigInt order() const;

  Elem zero() const { return Elem(d_, 0); }
  Elem one() const;
  Elem from_int(long long v) const;
  /// Element with the given u-coefficients (reduced).
  Elem from_coeffs(std::vector<std::uint64_t> c) const;
  bool is_zero(const Elem& a) const;
  bool is_one(const Elem& a) const { return a == one(); }

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem pow(const Elem& a, const BigInt& e) const;

 private:
  std::uint64_t p_;
  std::size_t d_;
  std::vector<std::uint64_t> modulus_;  // monic, length d_+1 (empty for d_=1)
};

using GFPoly = std::vector<GaloisField::Elem>;  // ascending, no trailing zeros

namespace gfpoly {
void trim(const GaloisField& k, GFPoly& a);
GFPoly add(const GaloisField& k, const GFPoly& a, const GFPoly& b);
GFPoly sub(const GaloisField& k, const GFPoly& a, const GFPoly& b);
GFPoly mul(const GaloisField& k, const GFPoly& a, const GFPoly& b);
/// Quotient and remainder by nonzero b.
std::pair<GFPoly, GFPoly> divmod(const GaloisField& k, const GFPoly& a, const GFPoly& b);
GFPoly monic(const GaloisField& k, const GFPoly& a);
GFPoly gcd(const GaloisField& k, GFPoly a, GFPoly b);
GFPoly derivative(const GaloisField& k, const GFPoly& a);
GFPoly powmod(const GaloisField& k, GFPoly base, const BigInt& e, const GFPoly& mod);
/// Extended Euclid: returns (g, s, t) with s a + t b = g monic.
std::tuple<GFPoly, GFPoly, GFPoly> xgcd(const GaloisField& k, const GFPoly& a, const GFPoly& b);
}  // namespace gfpoly

/// Monic irreducible factors with multiplicities; f must be nonzero.
std::vector<std::pair<GFPoly, int>> factor_gf(const GaloisField& k, const GFPoly& f);

}  // namespace fgfc
