#pragma once

#include "fgfc/mpoly.hpp"

#include <string>
#include <vector>

namespace fgfc {

/// An element of the fraction field of a root ring's polynomial extension,
/// stored as a reduced fraction num/den. Over Z/m only denominators that are
/// unit constants are allowed, and they are folded into the numerator.
///
/// Canonical form: gcd(num, den) = 1 and den has lex-leading coefficient 1,
/// so structural equality is ring equality.
class RingElement {
 public:
  RingElement() = default;
  explicit RingElement(MPoly num);
  RingElement(MPoly num, MPoly den);

  static RingElement zero(std::size_t nvars, Domain d);
  static RingElement one(std::size_t nvars, Domain d);
  static RingElement integer(std::size_t nvars, Domain d, long long v);

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  std::size_t nvars() const { return num_.nvars(); }
  Domain domain() const { return num_.domain(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool involves(std::size_t var) const { return num_.involves(var) || den_.involves(var); }

  RingElement operator-() const;
  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend RingElement operator/(const RingElement& a, const RingElement& b);
  RingElement& operator+=(const RingElement& o) { return *this = *this + o; }
  RingElement& operator-=(const RingElement& o) { return *this = *this - o; }
  RingElement& operator*=(const RingElement& o) { return *this = *this * o; }
  RingElement inverse() const;
  RingElement pow(unsigned e) const;

  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const RingElement& a, const RingElement& b);

  /// Re-express the element over another coefficient domain.
  RingElement map_coeffs(Domain target) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  void normalize();
  MPoly num_;
  MPoly den_;
};

}  // namespace fgfc
