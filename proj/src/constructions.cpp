#include "fgfc/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace fgfc {

namespace {

void require_valuation(const RingDescriptor& v) {
  if (v.base().kind != BaseKind::ValuationDomain) {
    throw MathError(MathError::Code::Shape, "expected a valuation domain, got " + v.str());
  }
}

}  // namespace

GenList op_family(const RingDescriptor& v, std::size_t k, std::size_t xvar) {
  require_valuation(v);
  if (k == 0) throw MathError(MathError::Code::Shape, "truncation k must be at least 1");
  if (k > v.base().rank) {
    throw MathError(MathError::Code::RankExhausted,
                    "k = " + std::to_string(k) + " needs rank >= k, have " + std::to_string(v.base().rank));
  }
  GenList out{v, xvar, {}};
  const RingElement x = v.variable(xvar);
  RingElement prod = v.one();
  for (std::size_t i = 0; i < k; ++i) {
    const RingElement a = v.t(i + 1);
    // a_i lies in P_(i+1) but not in P_i.
    if (smallest_prime_containing(v, a).chain != i + 1) throw MathError(MathError::Code::Shape, "bad a_i");
    prod = prod * (a * x - v.one());
    out.gens.push_back(Poly::from_element(xvar, a * prod));
  }
  return out;
}

std::vector<RingElement> glued_algebra(const RingDescriptor& r, const std::vector<RingElement>& ideal, std::size_t y) {
  const RingElement yy = r.variable(y);
  std::vector<RingElement> out;
  for (const RingElement& f : ideal) {
    if (!f.is_zero()) out.push_back(yy * f);
  }
  out.push_back(yy * yy - yy);
  return out;
}

RingElement determinant(const std::vector<RingElement>& m, std::size_t n) {
  if (n == 0) return RingElement();
  const RingElement zero = m.front() - m.front();
  if (n == 1) return m[0];
  RingElement det = zero;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    RingElement term = m[perm[0]];
    for (std::size_t i = 1; i < n && !term.is_zero(); ++i) term = term * m[i * n + perm[i]];
    det = inversions % 2 ? det - term : det + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

std::vector<RingElement> fitting_F0(const PresentationMatrix& p) {
  if (p.entries.size() != p.rows * p.cols) {
    throw MathError(MathError::Code::Shape, "presentation matrix needs rows*cols entries");
  }
  if (p.rows == 0) return {p.base.one()};
  if (p.cols < p.rows) return {p.base.zero()};
  std::vector<RingElement> out;
  std::vector<bool> pick(p.cols, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(p.rows), true);
  do {
    std::vector<RingElement> sub;
    for (std::size_t i = 0; i < p.rows; ++i) {
      for (std::size_t j = 0; j < p.cols; ++j) {
        if (pick[j]) sub.push_back(p.base.canonical(p.at(i, j)));
      }
    }
    out.push_back(determinant(sub, p.rows));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

RingElement prime_as_radical(const RingDescriptor& v, std::size_t j) {
  require_valuation(v);
  if (j > v.base().rank) throw MathError(MathError::Code::RankExhausted, "chain index beyond the rank");
  if (j == 0) return v.zero();
  return v.t(j);
}

}  // namespace fgfc
