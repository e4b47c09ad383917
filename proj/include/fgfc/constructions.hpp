#pragma once

// Finite truncations of the example objects used as test instances.

#include "fgfc/poly.hpp"

#include <vector>

namespace fgfc {

/// f_i = a_i * prod_{j<=i} (a_j x - 1), i < k, with a_i = t_(i+1), over V[x].
/// MathError(RankExhausted) when k exceeds the rank.
GenList op_family(const RingDescriptor& v, std::size_t k, std::size_t xvar = 0);

/// {y f : f in I} followed by y^2 - y; `y` is a variable of the ring's space.
std::vector<RingElement> glued_algebra(const RingDescriptor& r, const std::vector<RingElement>& ideal, std::size_t y);

/// M = coker of a rows x cols matrix (relations as columns, free module of
/// rank `rows`). Entries row-major.
struct PresentationMatrix {
  RingDescriptor base;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<RingElement> entries;

  const RingElement& at(std::size_t i, std::size_t j) const { return entries.at(i * cols + j); }
};

/// All rows x rows minors; (0) when cols < rows.
std::vector<RingElement> fitting_F0(const PresentationMatrix& p);

/// Determinant of a square matrix given row-major.
RingElement determinant(const std::vector<RingElement>& m, std::size_t n);

/// t_j with sqrt((t_j)) = P_j; j = 0 gives the zero element.
RingElement prime_as_radical(const RingDescriptor& v, std::size_t j);

}  // namespace fgfc
