#pragma once

// Univariate polynomials over a ring descriptor, in one distinguished
// variable of the space. Multivariate polynomials are handled by nesting:
// R[x1..xm] is R[x1..x(m-1)][xm].

#include "fgfc/ring.hpp"

#include <string>
#include <vector>

namespace fgfc {

class Poly {
 public:
  Poly() = default;
  /// Trailing zero coefficients are trimmed.
  Poly(std::size_t var, std::vector<RingElement> coeffs, std::size_t nvars, Domain d);

  static Poly zero(std::size_t var, std::size_t nvars, Domain d) { return Poly(var, {}, nvars, d); }
  static Poly constant(std::size_t var, const RingElement& c) { return Poly(var, {c}, c.nvars(), c.domain()); }
  static Poly monomial(std::size_t var, const RingElement& c, std::size_t exp);
  /// Split an element of B[var] into coefficients; denominators must not involve var.
  static Poly from_element(std::size_t var, const RingElement& a);

  std::size_t var() const { return var_; }
  std::size_t nvars() const { return nvars_; }
  Domain domain() const { return domain_; }
  const std::vector<RingElement>& coeffs() const { return coeffs_; }
  /// -1 stands for the degree of the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  RingElement coeff(std::size_t i) const;
  const RingElement& lc() const { return coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const RingElement& c) const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.var_ == b.var_ && a.coeffs_ == b.coeffs_; }

  /// The same polynomial as an element of B[var].
  RingElement to_element() const;
  /// Re-express coefficients in the ring's canonical domain.
  Poly in_ring(const RingDescriptor& r) const;
  std::string str(const std::vector<std::string>& names) const { return to_element().str(names); }

 private:
  std::size_t var_ = 0;
  std::size_t nvars_ = 0;
  Domain domain_{};
  std::vector<RingElement> coeffs_;
};

struct LeadingData {
  int degree = 0;
  RingElement lc;
};

/// Degree and leading coefficient; MathError(ZeroPolynomial) for f = 0.
LeadingData leading_data(const Poly& f);

/// Remainder of f by monic g (deg g >= 1) via top-term cancellation; valid
/// over any commutative ring. Optionally returns the quotient.
Poly reduce_by_monic(const Poly& f, const Poly& g, Poly* quotient = nullptr);

/// Generators of an ideal of B[var].
struct GenList {
  RingDescriptor ring;  // the coefficient ring B
  std::size_t var = 0;
  std::vector<Poly> gens;

  std::vector<std::string> render() const;
};

/// Drop zero generators and reduce each generator by the monic generators of
/// lower (or equal, earlier-listed) positive degree until nothing changes.
GenList normalize(const GenList& g);

/// Sum of generator degrees of the normalized list.
int d_measure(const GenList& g);

}  // namespace fgfc
