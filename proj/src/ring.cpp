#include "fgfc/ring.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace fgfc {

namespace {

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

BigInt gcd_big(BigInt a, BigInt b) {
  a = abs_big(a);
  b = abs_big(b);
  while (b != 0) {
    BigInt t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

}  // namespace


std::vector<std::string> Space::names() const {
  std::vector<std::string> n = x_names;
  for (std::size_t i = 1; i <= rank; ++i) n.push_back("t" + std::to_string(i));
  return n;
}

BaseRing BaseRing::rational() { return {}; }

BaseRing BaseRing::prime_field(std::uint64_t p) {
  if (!is_prime_u64(p) || p >= (1ull << 31)) {
    throw MathError(MathError::Code::NotPrime, std::to_string(p) + " is not a prime below 2^31");
  }
  return {BaseKind::PrimeField, p, 0, Domain{}};
}

BaseRing BaseRing::integers() { return {BaseKind::Integers, 0, 0, Domain{}}; }

BaseRing BaseRing::integers_mod(std::uint64_t n) {
  if (n < 2 || n >= (1ull << 31)) throw MathError(MathError::Code::Shape, "Zmod needs 2 <= n < 2^31");
  return {BaseKind::IntegersMod, n, 0, Domain{}};
}

BaseRing BaseRing::valuation(std::size_t rank, Domain residue_base) {
  if (rank < 1) throw MathError(MathError::Code::Shape, "valuation rank must be at least 1");
  if (!residue_base.is_field()) throw MathError(MathError::Code::NotPrime, "residue base must be Q or F_p");
  return {BaseKind::ValuationDomain, 0, rank, residue_base};
}

Domain BaseRing::coefficient_domain() const {
  switch (kind) {
    case BaseKind::PrimeField:
    case BaseKind::IntegersMod:
      return Domain{modulus};
    case BaseKind::ValuationDomain:
      return residue_base;
    default:
      return Domain{};
  }
}

std::string BaseRing::str() const {
  switch (kind) {
    case BaseKind::RationalField:
      return "Q";
    case BaseKind::PrimeField:
      return "Fp(" + std::to_string(modulus) + ")";
    case BaseKind::Integers:
      return "Z";
    case BaseKind::IntegersMod:
      return "Zmod(" + std::to_string(modulus) + ")";
    case BaseKind::ValuationDomain:
      return "Val(rank=" + std::to_string(rank) + ", base=" +
             (residue_base.is_rational() ? std::string("Q") : "Fp(" + std::to_string(residue_base.modulus) + ")") + ")";
  }
  return "?";
}

std::size_t ValueVector::first_nonzero() const {
  for (std::size_t i = 0; i < coords_->size(); ++i) {
    if ((*coords_)[i] != 0) return i + 1;
  }
  return 0;
}

ValueVector operator+(const ValueVector& a, const ValueVector& b) {
  if (a.is_infinity() || b.is_infinity()) return ValueVector::infinity();
  std::vector<int> c = a.coords();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords()[i];
  return ValueVector(std::move(c));
}

ValueVector operator-(const ValueVector& a, const ValueVector& b) {
  if (a.is_infinity() || b.is_infinity()) return ValueVector::infinity();
  std::vector<int> c = a.coords();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords()[i];
  return ValueVector(std::move(c));
}

std::strong_ordering operator<=>(const ValueVector& a, const ValueVector& b) {
  if (a.is_infinity() && b.is_infinity()) return std::strong_ordering::equal;
  if (a.is_infinity()) return std::strong_ordering::greater;
  if (b.is_infinity()) return std::strong_ordering::less;
  return a.coords() <=> b.coords();
}

std::string ValueVector::str() const {
  if (is_infinity()) return "inf";
  std::string s = "(";
  for (std::size_t i = 0; i < coords_->size(); ++i) {
    if (i) s += ",";
    s += std::to_string((*coords_)[i]);
  }
  return s + ")";
}

std::string BasePrime::str() const {
  switch (kind) {
    case Kind::Zero:
      return "0";
    case Kind::Principal:
    case Kind::Residue:
      return "(" + generator.str() + ")";
    case Kind::ChainIndex:
      return "P_" + std::to_string(chain);
  }
  return "?";
}

bool operator<(const BasePrime& a, const BasePrime& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.generator != b.generator) return a.generator < b.generator;
  return a.chain < b.chain;
}

bool base_prime_contains(const BasePrime& big, const BasePrime& small) {
  if (small.is_zero_ideal()) return true;
  if (big.is_zero_ideal()) return false;
  if (big.kind == BasePrime::Kind::ChainIndex) return small.kind == big.kind && small.chain <= big.chain;
  return small.kind == big.kind && small.generator == big.generator;
}

std::vector<BigInt> prime_factors(const BigInt& n0) {
  BigInt n = abs_big(n0);
  if (n == 0) throw MathError(MathError::Code::ZeroElement, "prime factors of zero");
  std::vector<BigInt> out;
  for (std::uint64_t p = 2; p <= 1000000 && BigInt(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      out.emplace_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) {
    if (n < BigInt(1000000) * 1000000 ||
        (n <= BigInt(std::numeric_limits<std::uint64_t>::max()) && is_prime_u64(static_cast<std::uint64_t>(n)))) {
      out.push_back(n);
    } else {
      throw CapabilityError("integer-factorization", "cannot factor " + n.str() + " by trial division");
    }
  }
  return out;
}

BigRational rational_content(const MPoly& a) {
  if (a.is_zero()) return 0;
  BigInt g = 0, l = 1;
  for (const auto& [e, c] : a.terms()) {
    g = gcd_big(g, boost::multiprecision::numerator(c.rational()));
    BigInt d = boost::multiprecision::denominator(c.rational());
    l = l / gcd_big(l, d) * d;
  }
  BigRational c(g, l);
  if (a.leading_coeff().rational() < 0) c = -c;
  return c;
}

}  // namespace fgfc
