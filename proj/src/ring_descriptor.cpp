#include "fgfc/ring.hpp"

#include <algorithm>
#include <map>
#include <numeric>

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

BigInt strip_primes(BigInt n, const std::vector<BigInt>& primes) {
  n = abs_big(n);
  if (n == 0) return n;
  for (const BigInt& p : primes) {
    while (n % p == 0) n /= p;
  }
  return n;
}

bool is_x_free(const RingElement& a, const Space& s) {
  for (std::size_t i = 0; i < s.nx(); ++i) {
    if (a.involves(i)) return false;
  }
  return true;
}

BigRational as_rational(const RingElement& a) { return a.num().constant_term().rational(); }

// Lex-minimal projection of the exponents of `p` onto coordinates [begin, end).
std::vector<int> min_projection(const MPoly& p, std::size_t begin, std::size_t end) {
  const Exponent* best = nullptr;
  for (const auto& [e, c] : p.terms()) {
    if (best == nullptr || compare_prefix(e, *best, begin, end) < 0) best = &e;
  }
  return std::vector<int>(best->begin() + static_cast<long>(begin), best->begin() + static_cast<long>(end));
}

int compare_vec(const std::vector<int>& a, const std::vector<int>& b) {
  if (a == b) return 0;
  return a < b ? -1 : 1;
}

std::vector<int> truncate(const ValueVector& v, std::size_t r) {
  return std::vector<int>(v.coords().begin(), v.coords().begin() + static_cast<long>(r));
}

bool all_zero(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

bool lex_nonnegative(const std::vector<int>& v) {
  for (int x : v) {
    if (x != 0) return x > 0;
  }
  return true;
}

int padic_valuation(const BigRational& q, const BigInt& p) {
  int e = 0;
  BigInt n = boost::multiprecision::numerator(q), d = boost::multiprecision::denominator(q);
  while (n != 0 && n % p == 0) {
    n /= p;
    ++e;
  }
  while (d % p == 0) {
    d /= p;
    --e;
  }
  return e;
}

}  // namespace

RingDescriptor::RingDescriptor(BaseRing base, Space space)
    : base_(base), space_(std::move(space)), modulus_(base.modulus), effective_rank_(base.rank) {
  if (base_.kind == BaseKind::ValuationDomain && space_.rank != base_.rank) {
    throw MathError(MathError::Code::Shape, "space rank must match the valuation rank");
  }
}

Domain RingDescriptor::domain() const {
  if (base_.kind == BaseKind::IntegersMod) return Domain{modulus_ < 2 ? base_.modulus : modulus_};
  return base_.coefficient_domain();
}

RingDescriptor RingDescriptor::with_variable(std::size_t var) const {
  RingDescriptor r = *this;
  r.poly_vars_.push_back(var);
  return r;
}

RingDescriptor RingDescriptor::without_inverted() const {
  RingDescriptor r = *this;
  r.inverted_.clear();
  return r;
}

RingDescriptor RingDescriptor::without_last_variable() const {
  RingDescriptor r = without_inverted();
  if (!r.poly_vars_.empty()) r.poly_vars_.pop_back();
  return r;
}

RingElement RingDescriptor::canonical(const RingElement& a) const {
  if (a.domain() == domain() && a.nvars() == nvars()) return a;
  return a.map_coeffs(domain());
}

bool RingDescriptor::contains(const RingElement& a0) const {
  RingElement a = canonical(a0);
  if (!is_x_free(a, space_)) {
    // Polynomial bases: denominators must come from the inverted elements.
    MPoly g = a.den();
    for (const RingElement& inv : inverted_) {
      if (!g.domain().is_field()) break;
      MPoly h = gcd(g, inv.num());
      while (!h.is_constant()) {
        g = *g.divide(h);
        h = gcd(g, inv.num());
      }
    }
    for (std::size_t i = 0; i < space_.nx(); ++i) {
      if (g.involves(i)) return false;
    }
    if (!inverted_.empty()) return true;
    // Coefficient-wise: every x-monomial coefficient must lie in the base.
    std::map<Exponent, MPoly> parts;
    for (const auto& [e, c] : a.num().terms()) {
      Exponent xe(e.size(), 0), te(e.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) (i < space_.nx() ? xe : te)[i] = e[i];
      auto it = parts.try_emplace(xe, a.num().nvars(), a.num().domain()).first;
      it->second.add_term(te, c);
    }
    for (const auto& [xe, coef] : parts) {
      if (!contains(RingElement(coef, a.den()))) return false;
    }
    return true;
  }
  switch (base_.kind) {
    case BaseKind::RationalField:
    case BaseKind::PrimeField:
    case BaseKind::IntegersMod:
      return a.is_constant() || a.den().is_constant();
    case BaseKind::Integers: {
      if (!a.is_constant()) return a.den().is_constant();
      BigInt d = boost::multiprecision::denominator(as_rational(a));
      return strip_primes(d, inverted_primes_) == 1;
    }
    case BaseKind::ValuationDomain: {
      ValueVector v = valuation_of(*this, a);
      return v.is_infinity() || lex_nonnegative(truncate(v, effective_rank_));
    }
  }
  return false;
}

bool RingDescriptor::is_unit(const RingElement& a0) const {
  if (zero_ring_) return true;
  RingElement a = canonical(a0);
  if (a.is_zero() || !is_x_free(a, space_)) return false;
  switch (base_.kind) {
    case BaseKind::RationalField:
    case BaseKind::PrimeField:
      return true;
    case BaseKind::IntegersMod:
      return a.num().constant_term().is_unit();
    case BaseKind::Integers: {
      if (!a.is_constant()) return false;
      BigRational q = as_rational(a);
      return strip_primes(boost::multiprecision::numerator(q), inverted_primes_) == 1 &&
             strip_primes(boost::multiprecision::denominator(q), inverted_primes_) == 1;
    }
    case BaseKind::ValuationDomain:
      return all_zero(truncate(valuation_of(*this, a), effective_rank_));
  }
  return false;
}

bool RingDescriptor::equal(const RingElement& a0, const RingElement& b0) const {
  if (zero_ring_) throw MathError(MathError::Code::ZeroRing, "no arithmetic on the zero ring");
  RingElement d = canonical(a0) - canonical(b0);
  if (d.is_zero()) return true;
  if (quotient_.empty()) return false;
  if (!is_root()) throw CapabilityError("quotient-equality", "equality modulo an ideal of a polynomial base");
  switch (base_.kind) {
    case BaseKind::RationalField:
    case BaseKind::PrimeField:
    case BaseKind::IntegersMod:
      // Fields with nonzero modulus are zero rings; Z/n folds the modulus.
      return false;
    case BaseKind::Integers: {
      BigInt g = 0;
      for (const RingElement& q : quotient_) g = gcd_big(g, boost::multiprecision::numerator(as_rational(q)));
      g = strip_primes(g, inverted_primes_);
      if (g == 0) return false;
      return strip_primes(boost::multiprecision::numerator(as_rational(d)), inverted_primes_) % g == 0;
    }
    case BaseKind::ValuationDomain: {
      std::vector<int> dv = truncate(valuation_of(*this, d), effective_rank_);
      for (const RingElement& q : quotient_) {
        if (q.is_zero()) continue;
        if (compare_vec(dv, truncate(valuation_of(*this, q), effective_rank_)) >= 0) return true;
      }
      return false;
    }
  }
  return false;
}

std::string RingDescriptor::str() const {
  std::string s = base_.str();
  for (std::size_t v : poly_vars_) s += "[" + space_.names().at(v) + "]";
  for (const std::string& h : history_) s = h + "(" + s + ")";
  if (zero_ring_) s = "ZeroRing<" + s + ">";
  return s;
}

RingDescriptor localize(const RingDescriptor& r0, const RingElement& c0) {
  RingDescriptor r = r0;
  RingElement c = r.canonical(c0);
  if (c.is_zero()) throw MathError(MathError::Code::DegenerateLocalization, "localization at zero");
  r.history_.push_back("Localized[" + r.render(c) + "]");
  if (r.zero_ring_ || r.is_unit(c)) return r;
  if (!is_x_free(c, r.space_)) {
    if (std::find(r.inverted_.begin(), r.inverted_.end(), c) == r.inverted_.end()) r.inverted_.push_back(c);
    return r;
  }
  switch (r.base_.kind) {
    case BaseKind::RationalField:
    case BaseKind::PrimeField:
      break;
    case BaseKind::Integers: {
      if (!c.is_constant()) {
        r.inverted_.push_back(c);
        break;
      }
      for (const BigInt& p : prime_factors(boost::multiprecision::numerator(as_rational(c)))) {
        if (std::find(r.inverted_primes_.begin(), r.inverted_primes_.end(), p) == r.inverted_primes_.end()) {
          r.inverted_primes_.push_back(p);
        }
      }
      std::sort(r.inverted_primes_.begin(), r.inverted_primes_.end());
      break;
    }
    case BaseKind::IntegersMod: {
      // Z/m is the product of its primary components; c kills those where it is nilpotent.
      std::uint64_t m = r.modulus_;
      std::uint64_t res = c.num().constant_term().residue();
      for (const BigInt& pb : prime_factors(BigInt(m))) {
        auto p = static_cast<std::uint64_t>(pb);
        if (res % p == 0) {
          while (m % p == 0) m /= p;
        }
      }
      r.modulus_ = m;
      if (m == 1) r.zero_ring_ = true;
      break;
    }
    case BaseKind::ValuationDomain: {
      // V_c is V localized at the largest chain prime avoiding c.
      std::size_t j = ValueVector(truncate(valuation_of(r, c), r.effective_rank_)).first_nonzero();
      if (j > 0) r.effective_rank_ = j - 1;
      break;
    }
  }
  return r;
}

RingDescriptor quotient_ring(const RingDescriptor& r0, const std::vector<RingElement>& j) {
  RingDescriptor r = r0;
  std::string label = "Quotient[";
  for (std::size_t i = 0; i < j.size(); ++i) label += (i ? ", " : "") + r.render(r.canonical(j[i]));
  r.history_.push_back(label + "]");
  for (const RingElement& a : j) {
    RingElement c = r.canonical(a);
    if (!c.is_zero()) r.quotient_.push_back(c);
  }
  if (r.zero_ring_ || !r.is_root()) return r;
  if (r.base_.kind == BaseKind::IntegersMod) {
    std::uint64_t m = r.modulus_;
    for (const RingElement& q : r.quotient_) m = std::gcd(m, q.num().constant_term().residue());
    r.modulus_ = m;
    r.quotient_.clear();
    if (m == 1) r.zero_ring_ = true;
    return r;
  }
  if (min_primes_base(r, {}).empty()) r.zero_ring_ = true;
  return r;
}

std::vector<BasePrime> min_primes_base(const RingDescriptor& r, const std::vector<RingElement>& j) {
  if (!r.is_root()) {
    throw CapabilityError("base-min-primes", "min_primes_base needs a root ring; use the engine for " + r.str());
  }
  if (r.is_zero_ring()) return {};
  std::vector<RingElement> all = r.quotient();
  for (const RingElement& a : j) {
    RingElement c = r.canonical(a);
    if (!c.is_zero()) all.push_back(c);
  }
  switch (r.base().kind) {
    case BaseKind::RationalField:
    case BaseKind::PrimeField:
      if (all.empty()) return {BasePrime::zero()};
      return {};
    case BaseKind::Integers: {
      BigInt g = 0;
      for (const RingElement& a : all) g = gcd_big(g, boost::multiprecision::numerator(as_rational(a)));
      if (g == 0) return {BasePrime::zero()};
      std::vector<BasePrime> out;
      for (const BigInt& p : prime_factors(g)) {
        if (std::find(r.inverted_primes().begin(), r.inverted_primes().end(), p) == r.inverted_primes().end()) {
          out.push_back(BasePrime::principal(p));
        }
      }
      return out;
    }
    case BaseKind::IntegersMod: {
      std::uint64_t g = r.effective_modulus();
      for (const RingElement& a : all) g = std::gcd(g, a.num().constant_term().residue());
      std::vector<BasePrime> out;
      if (g == 1) return out;
      for (const BigInt& p : prime_factors(BigInt(g))) out.push_back(BasePrime::residue(p));
      return out;
    }
    case BaseKind::ValuationDomain: {
      if (all.empty()) return {BasePrime::chain_index(0)};
      // Finitely generated ideals of a valuation ring are principal: take the
      // generator of least value.
      std::vector<int> best;
      for (const RingElement& a : all) {
        if (!r.contains(a)) throw MathError(MathError::Code::NotMember, "generator outside the valuation ring");
        std::vector<int> v = truncate(valuation_of(r, a), r.effective_rank());
        if (best.empty() || compare_vec(v, best) < 0) best = v;
      }
      std::size_t idx = ValueVector(best).first_nonzero();
      if (idx == 0) return {};
      return {BasePrime::chain_index(idx)};
    }
  }
  return {};
}

ValueVector valuation_of(const RingDescriptor& v, const RingElement& a) {
  if (v.base().kind != BaseKind::ValuationDomain) {
    throw MathError(MathError::Code::Shape, "valuation requested on " + v.str());
  }
  if (a.is_zero()) return ValueVector::infinity();
  const Space& s = v.space();
  std::size_t b = s.nx(), e = s.nx() + s.rank;
  std::vector<int> n = min_projection(a.num(), b, e), d = min_projection(a.den(), b, e);
  for (std::size_t i = 0; i < n.size(); ++i) n[i] -= d[i];
  return ValueVector(std::move(n));
}

ValueVector value_of(const RingDescriptor& v, const RingElement& a) {
  ValueVector val = valuation_of(v, a);
  if (!val.is_infinity() && !lex_nonnegative(val.coords())) {
    throw MathError(MathError::Code::NotMember, "value " + val.str() + " is negative: not an element of V");
  }
  return val;
}

BasePrime smallest_prime_containing(const RingDescriptor& v, const RingElement& a) {
  if (a.is_zero()) throw MathError(MathError::Code::ZeroElement, "the zero element: special-case the zero ideal");
  std::size_t j = value_of(v, a).first_nonzero();
  if (j == 0) throw MathError(MathError::Code::NoPrimeContains, "a unit lies in no prime");
  return BasePrime::chain_index(j);
}

Domain residue_domain(const BaseRing& base, const BasePrime& p) {
  switch (base.kind) {
    case BaseKind::Integers:
    case BaseKind::IntegersMod:
      if (p.kind == BasePrime::Kind::Zero) return Domain{};
      return Domain{static_cast<std::uint64_t>(p.generator)};
    default:
      return base.coefficient_domain();
  }
}

RingElement residue(const BaseRing& base, const Space& space, const BasePrime& p, const RingElement& a) {
  Domain target = residue_domain(base, p);
  switch (base.kind) {
    case BaseKind::RationalField:
    case BaseKind::PrimeField:
      return a;
    case BaseKind::IntegersMod:
      return a.map_coeffs(target);
    case BaseKind::Integers: {
      if (p.kind == BasePrime::Kind::Zero || a.is_zero()) return a.map_coeffs(target);
      BigRational cn = rational_content(a.num()), cd = rational_content(a.den());
      BigRational scale = cn / cd;
      int e = padic_valuation(scale, p.generator);
      if (e < 0) throw MathError(MathError::Code::NotMember, "denominator divisible by " + p.generator.str());
      if (e > 0) return RingElement::zero(a.nvars(), target);
      MPoly n = a.num().scaled(Scalar(Domain{}, BigRational(1) / cn)).map_coeffs(target);
      MPoly d = a.den().scaled(Scalar(Domain{}, BigRational(1) / cd)).map_coeffs(target);
      return RingElement(n.scaled(Scalar(target, scale)), d);
    }
    case BaseKind::ValuationDomain: {
      if (p.chain == 0 || a.is_zero()) return a;
      std::size_t b = space.nx(), e = space.nx() + p.chain;
      std::vector<int> beta = min_projection(a.den(), b, e);
      auto restrict_to = [&](const MPoly& m, bool check) {
        MPoly out(m.nvars(), m.domain());
        for (const auto& [ex, c] : m.terms()) {
          std::vector<int> proj(ex.begin() + static_cast<long>(b), ex.begin() + static_cast<long>(e));
          int cmp = compare_vec(proj, beta);
          if (check && cmp < 0) {
            throw MathError(MathError::Code::NotMember, "element not in the local ring at P_" + std::to_string(p.chain));
          }
          if (cmp != 0) continue;
          Exponent f = ex;
          for (std::size_t i = b; i < e; ++i) f[i] = 0;
          out.add_term(f, c);
        }
        return out;
      };
      return RingElement(restrict_to(a.num(), true), restrict_to(a.den(), false));
    }
  }
  return a;
}

bool base_prime_member(const BaseRing& base, const Space& space, const BasePrime& p, const RingElement& a) {
  return residue(base, space, p, a).is_zero();
}

std::vector<std::size_t> residue_parameters(const BaseRing& base, const Space& space, const BasePrime& p) {
  std::vector<std::size_t> out;
  if (base.kind != BaseKind::ValuationDomain) return out;
  for (std::size_t i = p.chain; i < space.rank; ++i) out.push_back(space.t_index(i));
  return out;
}

}  // namespace fgfc
