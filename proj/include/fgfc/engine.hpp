#pragma once

// Minimal primes of finitely generated ideals of R[x1..xm].
//
// One variable at a time: for I in B[x], B = R[x1..x(v-1)] localized at
// finitely many elements, pick a generator f of least positive degree with
// leading coefficient c and split into
//   A: I' = (others, f - c x^deg f, c)        (primes containing c)
//   B: I over B_c[x], where f is monic up to a unit:
//      reduce another generator of degree >= deg f and recurse, or, when all
//      others are constants J, factor f over the residue field of every
//      minimal prime of B_c/J.
// The union is filtered for minimality. Degree-zero ideals recurse into B.

#include "fgfc/primes.hpp"

#include <string>
#include <vector>

namespace fgfc {

struct TraceNode {
  std::string kind;  // root | quotient | localize | d0 | monic | base
  std::string ring;
  std::string var;
  std::size_t level = 0;  // number of polynomial variables below `var`
  std::vector<std::string> ideal;
  int measure = -1;
  std::string pivot;       // leading coefficient split on
  std::string split_case;  // localize: reduce | monic
  std::vector<std::string> factors;
  std::vector<std::string> primes;
  std::vector<TraceNode> children;
};

/// Minimal primes of B over J, where B carries polynomial variables and
/// localization data. Primes are reported over B's variables.
std::vector<PrimeRep> min_primes(const RingDescriptor& b, const std::vector<RingElement>& j, TraceNode* trace = nullptr);

/// Minimal primes of B[x] over I (the one-variable step).
std::vector<PrimeRep> min_primes_univ(const GenList& i, TraceNode* trace = nullptr);

/// The quotient branch: (f_1.., f_n - c x^deg, .., c) for generator index n of I.
GenList branch_quotient(const GenList& i, std::size_t n);

/// Minimal primes of B/J [x]/(f) for f with a unit leading coefficient in B.
std::vector<PrimeRep> monic_case(const RingDescriptor& b, const std::vector<RingElement>& j, const Poly& f,
                                 TraceNode* trace = nullptr);

/// Irreducible factors (residue-level, involving `var`) of the image of f in
/// kappa(p)[var]. CapabilityError for residue fields without an oracle.
std::vector<RingElement> residue_factors(const PrimeRep& p, const RingElement& f, std::size_t var);

/// Minimal primes over the ideal generated by `gens` in root[x1..xm] (all
/// x variables of the root's space). Unused variables extend primes freely.
std::vector<PrimeRep> min_primes_multi(const RingDescriptor& root, const std::vector<RingElement>& gens,
                                       TraceNode* trace = nullptr);

struct TraceReport {
  bool ok = true;
  std::size_t nodes = 0;
  std::size_t max_depth = 0;
  std::vector<std::string> violations;
};

/// Measure strictly drops at quotient and reduce nodes; per variable level
/// the depth stays within the level's initial measure plus the variable count.
TraceReport check_trace(const TraceNode& root, std::size_t nvars);

}  // namespace fgfc
