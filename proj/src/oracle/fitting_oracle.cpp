#include "fgfc/oracle.hpp"

#include <cmath>

namespace fgfc {

namespace {

std::size_t rank_mod(std::vector<long long> m, std::size_t rows, std::size_t cols, long long p) {
  auto inv = [p](long long a) {
    long long r = 1, e = p - 2;
    for (a %= p; e > 0; e >>= 1, a = a * a % p) {
      if (e & 1) r = r * a % p;
    }
    return r;
  };
  for (long long& v : m) v = ((v % p) + p) % p;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    for (std::size_t k = 0; k < cols; ++k) std::swap(m[piv * cols + k], m[rank * cols + k]);
    const long long iv = inv(m[rank * cols + c]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const long long f = m[r * cols + c] * iv % p;
      for (std::size_t k = 0; k < cols; ++k) m[r * cols + k] = ((m[r * cols + k] - f * m[rank * cols + k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_q(std::vector<BigRational> m, std::size_t rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    for (std::size_t k = 0; k < cols; ++k) std::swap(m[piv * cols + k], m[rank * cols + k]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const BigRational f = m[r * cols + c] / m[rank * cols + c];
      for (std::size_t k = 0; k < cols; ++k) m[r * cols + k] -= f * m[rank * cols + k];
    }
    ++rank;
  }
  return rank;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

std::vector<BasePrime> fitting_support_oracle(const PresentationMatrix& pm) {
  const RingDescriptor& r = pm.base;
  if (!r.is_root() || r.space().nvars() != 0) throw OracleUnavailable("fitting oracle needs a constant matrix over the base");
  if (pm.entries.size() != pm.rows * pm.cols) throw OracleUnavailable("malformed presentation");
  if (pm.rows == 0) return {};
  const BaseRing& b = r.base();
  const std::size_t n = pm.rows, m = pm.cols;
  switch (b.kind) {
    case BaseKind::RationalField:
    case BaseKind::PrimeField: {
      std::vector<BigRational> q;
      std::vector<long long> z;
      for (const RingElement& e : pm.entries) {
        const Scalar c = e.num().constant_term() * e.den().constant_term().inverse();
        q.push_back(c.rational());
        z.push_back(static_cast<long long>(c.residue()));
      }
      const std::size_t rk = b.kind == BaseKind::PrimeField ? rank_mod(z, n, m, static_cast<long long>(b.modulus)) : rank_q(q, n, m);
      if (rk < n) return {BasePrime::zero()};
      return {};
    }
    case BaseKind::Integers:
    case BaseKind::IntegersMod: {
      std::vector<long long> z;
      for (const RingElement& e : pm.entries) {
        const Scalar c = e.num().constant_term() * e.den().constant_term().inverse();
        if (b.kind == BaseKind::IntegersMod) {
          z.push_back(static_cast<long long>(c.residue()));
          continue;
        }
        const BigRational v = c.rational();
        if (denominator(v) != 1 || abs(numerator(v)) > 1000000) throw OracleUnavailable("fitting oracle: entry out of range");
        z.push_back(static_cast<long long>(numerator(v)));
      }
      if (b.kind == BaseKind::IntegersMod) {
        std::vector<BasePrime> out;
        for (long long p = 2; p <= static_cast<long long>(b.modulus); ++p) {
          if (is_prime(p) && b.modulus % p == 0 && rank_mod(z, n, m, p) < n) out.push_back(BasePrime::residue(p));
        }
        return out;
      }
      std::vector<BigRational> q(z.begin(), z.end());
      if (rank_q(q, n, m) < n) return {BasePrime::zero()};
      // Any prime in the support divides a nonzero maximal minor, so it is
      // bounded by Hadamard's bound over the rows.
      long double bound = 1;
      for (std::size_t i = 0; i < n; ++i) {
        long double s = 0;
        for (std::size_t j = 0; j < m; ++j) s += static_cast<long double>(z[i * m + j]) * static_cast<long double>(z[i * m + j]);
        bound *= std::sqrt(s * static_cast<long double>(m));
      }
      if (bound > 2e7L) throw OracleUnavailable("fitting oracle: Hadamard bound too large");
      std::vector<BasePrime> out;
      for (long long p = 2; p <= static_cast<long long>(bound) + 1; ++p) {
        if (is_prime(p) && rank_mod(z, n, m, p) < n) out.push_back(BasePrime::principal(p));
      }
      return out;
    }
    case BaseKind::ValuationDomain:
      break;
  }
  throw OracleUnavailable("fitting oracle does not cover valuation domains");
}

}  // namespace fgfc
