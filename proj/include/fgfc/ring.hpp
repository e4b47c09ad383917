#pragma once

// Base rings the engine computes over: Q, F_p, Z, Z/n and the rank-n
// valuation domains V_n. V_n is the valuation ring of the lexicographic
// monomial valuation on k(t1..tn); its spectrum is the chain
// P_0 = (0) < P_1 < ... < P_n, with a in P_j iff the first j coordinates of
// v(a) are not all zero.

#include "fgfc/errors.hpp"
#include "fgfc/ring_element.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace fgfc {

/// Variable layout shared by every element of one computation: the
/// polynomial variables x come first (most significant in lex order), then
/// the valuation parameters t1..tn.
struct Space {
  std::vector<std::string> x_names;
  std::size_t rank = 0;  // number of t variables

  std::size_t nx() const { return x_names.size(); }
  std::size_t nvars() const { return x_names.size() + rank; }
  std::size_t t_index(std::size_t i) const { return x_names.size() + i; }  // t_{i+1}
  std::vector<std::string> names() const;
  friend bool operator==(const Space&, const Space&) = default;
};

enum class BaseKind { RationalField, PrimeField, Integers, IntegersMod, ValuationDomain };

struct BaseRing {
  BaseKind kind = BaseKind::RationalField;
  std::uint64_t modulus = 0;  // p for PrimeField, n for IntegersMod
  std::size_t rank = 0;       // ValuationDomain
  Domain residue_base{};      // ValuationDomain: Q or F_p

  static BaseRing rational();
  static BaseRing prime_field(std::uint64_t p);
  static BaseRing integers();
  static BaseRing integers_mod(std::uint64_t n);
  static BaseRing valuation(std::size_t rank, Domain residue_base);

  /// Domain of the coefficients used to represent elements.
  Domain coefficient_domain() const;
  bool is_field() const { return kind == BaseKind::RationalField || kind == BaseKind::PrimeField; }
  std::string str() const;
  friend bool operator==(const BaseRing&, const BaseRing&) = default;
};

/// Element of Z^n or the symbol Infinity, ordered lexicographically with
/// Infinity above every tuple.
class ValueVector {
 public:
  ValueVector() = default;  // Infinity
  explicit ValueVector(std::vector<int> coords) : coords_(std::move(coords)) {}
  static ValueVector infinity() { return {}; }

  bool is_infinity() const { return !coords_.has_value(); }
  const std::vector<int>& coords() const { return *coords_; }
  /// Index (1-based) of the first nonzero coordinate; 0 for the zero vector.
  std::size_t first_nonzero() const;

  friend ValueVector operator+(const ValueVector& a, const ValueVector& b);
  friend ValueVector operator-(const ValueVector& a, const ValueVector& b);
  friend std::strong_ordering operator<=>(const ValueVector& a, const ValueVector& b);
  friend bool operator==(const ValueVector& a, const ValueVector& b) { return (a <=> b) == 0; }
  std::string str() const;

 private:
  std::optional<std::vector<int>> coords_;
};

/// A prime of a root ring (no polynomial variables).
struct BasePrime {
  enum class Kind { Zero, Principal, ChainIndex, Residue };
  Kind kind = Kind::Zero;
  BigInt generator = 0;  // Principal (Z) and Residue (Z/n): the prime p
  std::size_t chain = 0; // ChainIndex j for P_j

  static BasePrime zero() { return {}; }
  static BasePrime principal(BigInt p) { return {Kind::Principal, std::move(p), 0}; }
  static BasePrime chain_index(std::size_t j) { return {Kind::ChainIndex, 0, j}; }
  static BasePrime residue(BigInt p) { return {Kind::Residue, std::move(p), 0}; }

  bool is_zero_ideal() const { return kind == Kind::Zero || (kind == Kind::ChainIndex && chain == 0); }
  std::string str() const;
  friend bool operator==(const BasePrime&, const BasePrime&) = default;
  friend bool operator<(const BasePrime& a, const BasePrime& b);
};

/// Containment of base primes: chain indices by <=, principal primes by
/// equality, Zero below everything.
bool base_prime_contains(const BasePrime& big, const BasePrime& small);

/// Ring descriptor: a root ring with polynomial variables adjoined, then
/// localized and/or taken modulo finitely many elements. Localization and
/// quotient data are kept in normal form per root kind; `history` records
/// the Localized/Quotient nesting for display and depth accounting.
class RingDescriptor {
 public:
  RingDescriptor() = default;
  RingDescriptor(BaseRing base, Space space);

  const BaseRing& base() const { return base_; }
  const Space& space() const { return space_; }
  std::size_t nvars() const { return space_.nvars(); }
  /// Coefficient domain of elements (changes under localization for Z/n).
  Domain domain() const;

  /// Polynomial variables adjoined to the root (indices into the space).
  const std::vector<std::size_t>& poly_vars() const { return poly_vars_; }
  bool is_root() const { return poly_vars_.empty(); }
  const std::vector<RingElement>& inverted() const { return inverted_; }
  const std::vector<RingElement>& quotient() const { return quotient_; }
  const std::vector<BigInt>& inverted_primes() const { return inverted_primes_; }
  std::uint64_t effective_modulus() const { return modulus_; }
  std::size_t effective_rank() const { return effective_rank_; }
  bool is_zero_ring() const { return zero_ring_; }
  std::size_t nesting_depth() const { return history_.size(); }

  /// R[var]; only on rings without localization or quotient data.
  RingDescriptor with_variable(std::size_t var) const;
  /// Same ring with the polynomial-level inverted elements forgotten.
  RingDescriptor without_inverted() const;
  /// Drop the last adjoined variable (and any polynomial-level localization).
  RingDescriptor without_last_variable() const;

  RingElement zero() const { return RingElement::zero(nvars(), domain()); }
  RingElement one() const { return RingElement::one(nvars(), domain()); }
  RingElement from_int(long long v) const { return RingElement::integer(nvars(), domain(), v); }
  RingElement variable(std::size_t var) const { return RingElement(MPoly::variable(nvars(), domain(), var)); }
  RingElement t(std::size_t i) const { return variable(space_.t_index(i - 1)); }  // t_i, 1-based
  /// Bring an element into this ring's canonical coefficient domain.
  RingElement canonical(const RingElement& a) const;

  /// True iff `a` belongs to the ring (before quotient).
  bool contains(const RingElement& a) const;
  bool is_unit(const RingElement& a) const;
  /// Equality in the ring, including modulo the quotient ideal.
  bool equal(const RingElement& a, const RingElement& b) const;

  std::string str() const;
  std::string render(const RingElement& a) const { return a.str(space_.names()); }

 private:
  friend RingDescriptor localize(const RingDescriptor& r, const RingElement& c);
  friend RingDescriptor quotient_ring(const RingDescriptor& r, const std::vector<RingElement>& j);

  BaseRing base_;
  Space space_;
  std::vector<std::size_t> poly_vars_;
  std::vector<BigInt> inverted_primes_;
  std::uint64_t modulus_ = 0;
  std::size_t effective_rank_ = 0;
  std::vector<RingElement> inverted_;
  std::vector<RingElement> quotient_;
  bool zero_ring_ = false;
  std::vector<std::string> history_;
};

/// R_c; c must be nonzero. Throws MathError(DegenerateLocalization) for c = 0.
RingDescriptor localize(const RingDescriptor& r, const RingElement& c);
/// R/(J). Quotients by the unit ideal produce the zero-ring marker.
RingDescriptor quotient_ring(const RingDescriptor& r, const std::vector<RingElement>& j);

/// Minimal primes of a root ring (possibly localized / quotiented) over J.
/// Throws CapabilityError for rings with polynomial variables.
std::vector<BasePrime> min_primes_base(const RingDescriptor& r, const std::vector<RingElement>& j);

/// v(a) for a in the fraction field of V_n; Infinity iff a = 0.
ValueVector valuation_of(const RingDescriptor& v, const RingElement& a);
/// v(a), additionally requiring a in V_n (NotMember otherwise).
ValueVector value_of(const RingDescriptor& v, const RingElement& a);
/// Smallest chain prime containing a nonzero nonunit a.
BasePrime smallest_prime_containing(const RingDescriptor& v, const RingElement& a);

/// Coefficient domain of the residue field of p.
Domain residue_domain(const BaseRing& base, const BasePrime& p);
/// Image of `a` (an element of the local ring at p, possibly with polynomial
/// variables) in Frac(R/p)[x...]. Throws MathError(NotMember) when `a` has a
/// denominator inside p.
RingElement residue(const BaseRing& base, const Space& space, const BasePrime& p, const RingElement& a);
/// Membership a in p (for a in the local ring at p).
bool base_prime_member(const BaseRing& base, const Space& space, const BasePrime& p, const RingElement& a);
/// t-variables that remain transcendental in the residue field of p.
std::vector<std::size_t> residue_parameters(const BaseRing& base, const Space& space, const BasePrime& p);

/// Distinct prime factors of |n| (n != 0). CapabilityError beyond trial-division reach.
std::vector<BigInt> prime_factors(const BigInt& n);

/// Rational content c with a / c having coprime integer coefficients (a over Q).
BigRational rational_content(const MPoly& a);

}  // namespace fgfc
