#include "fgfc/primes.hpp"

#include <algorithm>
#include <stdexcept>

namespace fgfc {

namespace {

bool is_member_error(const MathError& e) { return e.code() == MathError::Code::NotMember; }

MPoly lift_coeffs(const MPoly& m, Domain target) {
  if (m.domain() == target || m.domain().is_rational()) return m.map_coeffs(target);
  MPoly out(m.nvars(), target);
  for (const auto& [e, c] : m.terms()) {
    out.add_term(e, Scalar(target, static_cast<long long>(c.residue())));
  }
  return out;
}

std::size_t t_begin(const BaseRing& ring, const Space& space, const BasePrime& p) {
  return space.nx() + (ring.kind == BaseKind::ValuationDomain ? p.chain : 0);
}

}  // namespace

PrimeRep::PrimeRep(BaseRing ring, Space space, BasePrime base, std::vector<std::size_t> ambient)
    : ring_(ring), space_(std::move(space)), base_(std::move(base)), ambient_(std::move(ambient)) {}

Domain PrimeRep::residue_domain() const { return fgfc::residue_domain(ring_, base_); }

PrimeRep PrimeRep::with_poly(std::size_t var, const RingElement& g) const {
  if (!poly_vars_.empty() && var <= poly_vars_.back()) {
    throw MathError(MathError::Code::Shape, "polypart variables must increase");
  }
  // Ring-level generators are first mapped to the residue field.
  const bool residue_level = ring_.kind == BaseKind::Integers && g.domain() == residue_domain() && !base_.is_zero_ideal();
  MPoly n = residue_level ? g.num() : residue(ring_, space_, base_, g).num();
  for (std::size_t i = polys_.size(); i-- > 0;) n = n.prem(polys_[i].num(), poly_vars_[i]);
  if (n.degree(var) < 1) throw MathError(MathError::Code::Shape, "prime generator must involve its main variable");
  const std::size_t nv = space_.nvars();
  const Domain d = residue_domain();
  // Clear the smallest monomial value so the content is a unit of R/p.
  MPoly den = MPoly::constant(nv, d, 1);
  if (ring_.kind == BaseKind::ValuationDomain) {
    const std::size_t b = t_begin(ring_, space_, base_), e = space_.nx() + space_.rank;
    const Exponent* best = nullptr;
    for (const auto& [ex, c] : n.terms()) {
      if (best == nullptr || compare_prefix(ex, *best, b, e) < 0) best = &ex;
    }
    Exponent up(nv, 0), down(nv, 0);
    for (std::size_t i = b; i < e; ++i) ((*best)[i] > 0 ? down[i] : up[i]) = std::abs((*best)[i]);
    n = n.shifted(up);
    den = den.shifted(down);
  }
  if (d.is_rational()) {
    BigRational s = rational_content(n);
    if (n.leading_coeff().rational() < 0) s = -s;
    n = n.scaled(Scalar(d, BigRational(1) / s));
  } else {
    n = n.monic();
  }
  PrimeRep out = *this;
  out.polys_.emplace_back(n, den);
  out.poly_vars_.push_back(var);
  if (std::find(out.ambient_.begin(), out.ambient_.end(), var) == out.ambient_.end()) {
    out.ambient_.push_back(var);
    std::sort(out.ambient_.begin(), out.ambient_.end());
  }
  return out;
}

PrimeRep PrimeRep::with_ambient(std::vector<std::size_t> ambient) const {
  PrimeRep out = *this;
  out.ambient_ = std::move(ambient);
  return out;
}

MPoly PrimeRep::reduce(const RingElement& a) const {
  MPoly n = residue(ring_, space_, base_, a).num();
  for (std::size_t i = polys_.size(); i-- > 0;) n = n.prem(polys_[i].num(), poly_vars_[i]);
  return n;
}

bool PrimeRep::contains(const RingElement& a) const {
  try {
    return reduce(a).is_zero();
  } catch (const MathError& e) {
    if (is_member_error(e)) return false;
    throw;
  }
}

std::vector<RingElement> PrimeRep::lifted_polys() const {
  std::vector<RingElement> out;
  const Domain target = ring_.coefficient_domain();
  for (const RingElement& g : polys_) out.emplace_back(lift_coeffs(g.num(), target), lift_coeffs(g.den(), target));
  return out;
}

std::string PrimeRep::base_label() const {
  switch (base_.kind) {
    case BasePrime::Kind::Zero:
      return "0";
    case BasePrime::Kind::Principal:
    case BasePrime::Kind::Residue:
      return base_.generator.str();
    case BasePrime::Kind::ChainIndex:
      return base_.chain == 0 ? "0" : "P_" + std::to_string(base_.chain);
  }
  return "?";
}

std::vector<std::string> PrimeRep::poly_strings() const {
  std::vector<std::string> out;
  for (const RingElement& g : polys_) out.push_back(g.str(space_.names()));
  return out;
}

std::string PrimeRep::str() const {
  std::string s = "(" + base_label();
  const auto ps = poly_strings();
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i == 0 ? "; " : ", ") + ps[i];
  return s + ")";
}

bool ideal_in_prime(const std::vector<RingElement>& gens, const PrimeRep& q) {
  return std::all_of(gens.begin(), gens.end(), [&](const RingElement& g) { return q.contains(g); });
}

std::vector<RingElement> elements_of(const GenList& g) {
  std::vector<RingElement> out;
  for (const Poly& p : g.gens) out.push_back(p.to_element());
  return out;
}

bool ideal_in_prime(const GenList& g, const PrimeRep& q) { return ideal_in_prime(elements_of(g), q); }

bool prime_contains(const PrimeRep& big, const PrimeRep& small) {
  if (!base_prime_contains(big.base(), small.base())) return false;
  return ideal_in_prime(small.lifted_polys(), big);
}

bool prime_equal(const PrimeRep& a, const PrimeRep& b) { return prime_contains(a, b) && prime_contains(b, a); }

std::vector<PrimeRep> minimal_filter(const std::vector<PrimeRep>& cands, const std::vector<RingElement>& ideal) {
  for (const PrimeRep& q : cands) {
    if (!ideal_in_prime(ideal, q)) throw std::logic_error("candidate prime " + q.str() + " misses the ideal");
  }
  std::vector<PrimeRep> uniq;
  for (const PrimeRep& q : cands) {
    bool dup = std::any_of(uniq.begin(), uniq.end(), [&](const PrimeRep& u) { return prime_equal(u, q); });
    if (!dup) uniq.push_back(q);
  }
  std::vector<PrimeRep> out;
  for (std::size_t i = 0; i < uniq.size(); ++i) {
    bool above = false;
    for (std::size_t j = 0; j < uniq.size() && !above; ++j) {
      above = j != i && prime_contains(uniq[i], uniq[j]);
    }
    if (!above) out.push_back(uniq[i]);
  }
  return out;
}

PrimeRep contract_from_localization(const PrimeRep& q, const RingElement& c) {
  PrimeRep out(q.ring(), q.space(), q.base(), q.ambient());
  for (std::size_t i = 0; i < q.polys().size(); ++i) out = out.with_poly(q.poly_vars()[i], q.polys()[i]);
  if (!c.is_zero() && out.contains(c)) throw std::logic_error("contraction contains the inverted element");
  return out;
}

void sort_canonical(std::vector<PrimeRep>& primes) {
  std::stable_sort(primes.begin(), primes.end(), [](const PrimeRep& a, const PrimeRep& b) {
    if (!(a.base() == b.base())) return a.base() < b.base();
    return a.poly_strings() < b.poly_strings();
  });
}

bool same_prime_sets(const std::vector<PrimeRep>& a, const std::vector<PrimeRep>& b) {
  auto covered = [](const std::vector<PrimeRep>& xs, const std::vector<PrimeRep>& ys) {
    return std::all_of(xs.begin(), xs.end(), [&](const PrimeRep& x) {
      return std::any_of(ys.begin(), ys.end(), [&](const PrimeRep& y) { return prime_equal(x, y); });
    });
  };
  return covered(a, b) && covered(b, a);
}

}  // namespace fgfc
