#pragma once

// Sparse multivariate polynomials over a coefficient Domain. Terms are kept in
// lexicographically descending order of exponent vectors (variable 0 is the
// most significant), so the first term is the lex-leading term.

#include "fgfc/scalar.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fgfc {

using Exponent = std::vector<int>;

class MPoly {
 public:
  using TermMap = std::map<Exponent, Scalar, std::greater<>>;

  MPoly() = default;
  MPoly(std::size_t nvars, Domain d) : nvars_(nvars), domain_(d) {}

  static MPoly constant(std::size_t nvars, const Scalar& c);
  static MPoly constant(std::size_t nvars, Domain d, long long c);
  static MPoly variable(std::size_t nvars, Domain d, std::size_t var, int power = 1);
  static MPoly monomial(std::size_t nvars, const Scalar& c, Exponent e);

  std::size_t nvars() const { return nvars_; }
  Domain domain() const { return domain_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// Constant coefficient value (zero scalar if absent).
  Scalar constant_term() const;

  const Exponent& leading_exponent() const { return terms_.begin()->first; }
  const Scalar& leading_coeff() const { return terms_.begin()->second; }

  int degree(std::size_t var) const;  // -1 for zero
  int total_degree() const;           // -1 for zero
  bool involves(std::size_t var) const;
  std::vector<std::size_t> variables() const;

  /// Coefficients as polynomials in `var`: result[i] multiplies var^i.
  std::vector<MPoly> coeffs_in(std::size_t var) const;
  static MPoly from_coeffs(std::size_t var, const std::vector<MPoly>& coeffs, std::size_t nvars, Domain d);

  void add_term(const Exponent& e, const Scalar& c);

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly scaled(const Scalar& c) const;
  MPoly shifted(const Exponent& e) const;  // multiply by a monomial
  MPoly pow(unsigned e) const;

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const MPoly& a, const MPoly& b);

  /// Divide by the lex-leading coefficient.
  MPoly monic() const;
  /// Exact division; nullopt when `b` does not divide `*this`.
  std::optional<MPoly> divide(const MPoly& b) const;
  /// Pseudo-remainder with respect to `var` (lc(b)^k * a = q*b + r).
  MPoly prem(const MPoly& b, std::size_t var) const;
  MPoly derivative(std::size_t var) const;
  /// Substitute `var` := value (a polynomial in the same space).
  MPoly substitute(std::size_t var, const MPoly& value) const;

  MPoly map_coeffs(Domain target) const;
  /// Rename variables: variable i of *this becomes variable map[i] of a space with `nvars` variables.
  MPoly remap(const std::vector<std::size_t>& map, std::size_t nvars) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_ = 0;
  Domain domain_{};
  TermMap terms_;
};

/// Monic gcd over a field domain (Q or F_p); gcd(0,0) = 0.
MPoly gcd(const MPoly& a, const MPoly& b);
/// gcd of the coefficients of `a` viewed as a polynomial in `var`.
MPoly content(const MPoly& a, std::size_t var);
MPoly primitive_part(const MPoly& a, std::size_t var);

/// Lex comparison of exponent vectors restricted to the first `prefix` coordinates.
int compare_prefix(const Exponent& a, const Exponent& b, std::size_t begin, std::size_t end);

}  // namespace fgfc
