#pragma once

// Polynomial factorization used by the engine's monic case:
//  - univariate over Z (Zassenhaus: factor mod p, quadratic Hensel lifting,
//    subset recombination),
//  - multivariate over Q or F_p by Kronecker substitution to one variable.

#include "fgfc/galois.hpp"
#include "fgfc/mpoly.hpp"

#include <utility>
#include <vector>

namespace fgfc {

using ZPoly = std::vector<BigInt>;  // ascending, no trailing zeros

/// Primitive irreducible factors (positive leading coefficient) with multiplicities.
/// The integer content is dropped.
std::vector<std::pair<ZPoly, int>> factor_z(const ZPoly& f);

/// Irreducible factors of a nonzero polynomial over Q or F_p in any number of
/// variables, with multiplicities. Factors are primitive with positive
/// leading coefficient over Q and monic over F_p; constants are dropped.
/// CapabilityError when the substituted degree or factor count is out of reach.
std::vector<std::pair<MPoly, int>> factor_multivariate(const MPoly& f);

struct FactorLimits {
  std::size_t max_substituted_degree = 720;
  std::size_t max_modular_factors = 22;
};

}  // namespace fgfc
