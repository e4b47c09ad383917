#pragma once

// Primes of R[x1..xm] in triangular form: a base prime p of R together with
// polynomials g1, g2, ... over the residue field of p, each in its own main
// variable and irreducible over the field generated by the earlier ones.
// The represented prime is the kernel of R[x] -> Frac(R/p)(free x)[bound x]/(g).

#include "fgfc/poly.hpp"

#include <string>
#include <vector>

namespace fgfc {

class PrimeRep {
 public:
  PrimeRep() = default;
  /// Extension pR[x..] of a base prime to the ambient variables.
  PrimeRep(BaseRing ring, Space space, BasePrime base, std::vector<std::size_t> ambient);

  const BaseRing& ring() const { return ring_; }
  const Space& space() const { return space_; }
  const BasePrime& base() const { return base_; }
  const std::vector<RingElement>& polys() const { return polys_; }
  const std::vector<std::size_t>& poly_vars() const { return poly_vars_; }
  const std::vector<std::size_t>& ambient() const { return ambient_; }
  Domain residue_domain() const;

  /// Adjoin a generator with main variable `var` (later than every bound one).
  /// The generator is reduced by the chain and normalized.
  PrimeRep with_poly(std::size_t var, const RingElement& g) const;
  /// Same prime viewed in a ring with more variables.
  PrimeRep with_ambient(std::vector<std::size_t> ambient) const;

  /// Image of a in the residue ring, reduced through the chain (numerator only).
  /// Zero iff a is a member. Throws MathError(NotMember) when a is not in the
  /// local ring at the base prime.
  MPoly reduce(const RingElement& a) const;
  /// Membership; elements with a denominator inside the prime are reported absent.
  bool contains(const RingElement& a) const;
  /// Polypart generators as elements of the ambient ring.
  std::vector<RingElement> lifted_polys() const;

  std::string base_label() const;
  std::vector<std::string> poly_strings() const;
  /// "(p; g1, g2)" or "(p)" without polypart.
  std::string str() const;

 private:
  BaseRing ring_;
  Space space_;
  BasePrime base_;
  std::vector<std::size_t> ambient_;
  std::vector<RingElement> polys_;
  std::vector<std::size_t> poly_vars_;
};

bool ideal_in_prime(const std::vector<RingElement>& gens, const PrimeRep& q);
bool ideal_in_prime(const GenList& g, const PrimeRep& q);
/// big contains small.
bool prime_contains(const PrimeRep& big, const PrimeRep& small);
bool prime_equal(const PrimeRep& a, const PrimeRep& b);

/// Drop duplicates and candidates strictly containing another candidate.
/// Every candidate must contain `ideal` (std::logic_error otherwise).
std::vector<PrimeRep> minimal_filter(const std::vector<PrimeRep>& cands, const std::vector<RingElement>& ideal);

/// Contraction of a prime of R_c[x..] to R[x..]. With the residue-level
/// representation this only re-normalizes generators (denominators cleared);
/// the result never contains c.
PrimeRep contract_from_localization(const PrimeRep& q, const RingElement& c);

/// Canonical order: base prime, then polypart rendering.
void sort_canonical(std::vector<PrimeRep>& primes);
/// Set equality up to mutual containment.
bool same_prime_sets(const std::vector<PrimeRep>& a, const std::vector<PrimeRep>& b);

/// Ring elements of a GenList (each Poly as an element).
std::vector<RingElement> elements_of(const GenList& g);

}  // namespace fgfc
