#pragma once

// Brute-force verification oracles. They share ring-core, poly and the prime
// data type with the engine but never call the engine or its factorization
// code: factoring here is exhaustive search (F_p), rational roots plus
// Kronecker interpolation (Q), monomial root search (k(t)), and point
// enumeration over small extension fields (bivariate F_p).

#include "fgfc/constructions.hpp"
#include "fgfc/primes.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace fgfc {

/// Raised when an instance exceeds an oracle's search bounds; callers skip
/// the instance rather than inventing a verdict.
class OracleUnavailable : public Error {
 public:
  using Error::Error;
};

/// Distinct irreducible factors of a univariate polynomial over Q or F_p
/// (p <= 13, degree <= 8). Q: primitive integer, positive leading coefficient;
/// F_p: monic.
std::vector<MPoly> oracle_univariate_factors(const MPoly& f, std::size_t var);

/// Min primes of an ideal of k[x], k = Q or F_p: irreducible factors of the gcd.
std::vector<PrimeRep> gcd_factor_oracle(const GenList& i);

/// Min primes of an ideal of V_n[x] (n <= 3) by enumerating the candidate
/// shapes P_j[x] and (P_j, g) with g an irreducible factor over Frac(V/P_j)
/// of a generator's image. The shape restriction rests on going-down for
/// the finite free extension: every minimal prime contracts to a chain prime
/// and is then cut out by an irreducible factor over the residue field.
std::vector<PrimeRep> valuation_shape_oracle(const GenList& i);
extern const char* const kValuationOracleJustification;

/// Bivariate F_p[x,y] check: compares an engine answer against the gcd's
/// irreducible factors (exhaustive search) and the points of the residual
/// zero-dimensional part (enumerated over F_(p^e), e <= 4). Returns an empty
/// string on agreement, otherwise the reason.
std::string bivariate_oracle_check(const RingDescriptor& ring, const std::vector<RingElement>& gens,
                                   const std::vector<PrimeRep>& engine);

/// Minimal primes of the support of coker(P) by rank computations modulo
/// each prime (Z) or over the field (F_p), without forming minors.
std::vector<BasePrime> fitting_support_oracle(const PresentationMatrix& p);

struct CorpusSpec {
  enum class Kind { FieldUnivariate, Valuation, Bivariate, Presentation, Localization };
  Kind kind = Kind::FieldUnivariate;
  BaseRing base = BaseRing::rational();
  std::size_t max_gens = 4;
  int max_degree = 6;
  long long coeff_bound = 10;
  std::uint64_t seed = 1;
};

/// Deterministic generator driven by a CorpusSpec; trial i uses its own
/// stream so corpora do not depend on evaluation order.
class Corpus {
 public:
  explicit Corpus(CorpusSpec spec) : spec_(std::move(spec)) {}
  const CorpusSpec& spec() const { return spec_; }
  /// Ring for the ideals of this corpus (x, or x,y for bivariate).
  RingDescriptor ring() const;
  /// Generators of trial i.
  std::vector<RingElement> ideal(std::size_t i) const;
  /// Presentation of trial i (Presentation corpora).
  PresentationMatrix presentation(std::size_t i) const;
  /// Element to invert in trial i (Localization corpora).
  RingElement localizer(std::size_t i) const;

 private:
  std::mt19937_64 stream(std::size_t i, std::uint64_t salt = 0) const;
  CorpusSpec spec_;
};

/// Uniform integer in [lo, hi] from a 64-bit engine (portable across libraries).
long long uniform(std::mt19937_64& g, long long lo, long long hi);

}  // namespace fgfc
