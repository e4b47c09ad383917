#include "fgfc/oracle.hpp"

namespace fgfc {

long long uniform(std::mt19937_64& g, long long lo, long long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long long>(g() % span);
}

std::mt19937_64 Corpus::stream(std::size_t i, std::uint64_t salt) const {
  std::seed_seq seq{static_cast<std::uint32_t>(spec_.seed), static_cast<std::uint32_t>(spec_.seed >> 32),
                    static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(salt), 0x5eedU};
  return std::mt19937_64(seq);
}

RingDescriptor Corpus::ring() const {
  switch (spec_.kind) {
    case CorpusSpec::Kind::FieldUnivariate:
      return {spec_.base, Space{{"x"}, 0}};
    case CorpusSpec::Kind::Valuation:
    case CorpusSpec::Kind::Localization:
      return {spec_.base, Space{{"x"}, spec_.base.kind == BaseKind::ValuationDomain ? spec_.base.rank : 0}};
    case CorpusSpec::Kind::Bivariate:
      return {spec_.base, Space{{"x", "y"}, 0}};
    case CorpusSpec::Kind::Presentation:
      return {spec_.base, Space{{}, 0}};
  }
  return {};
}

namespace {

RingElement random_univariate(const RingDescriptor& r, std::mt19937_64& g, int deg, long long bound) {
  RingElement out = r.zero();
  const RingElement x = r.variable(0);
  RingElement xp = r.one();
  for (int k = 0; k <= deg; ++k, xp = xp * x) {
    long long c = uniform(g, -bound, bound);
    if (k == deg && c == 0) c = 1;
    out = out + r.from_int(c) * xp;
  }
  return out;
}

// Monomial coefficient with nonnegative value: c * t^a, small exponents.
RingElement random_monomial(const RingDescriptor& r, std::mt19937_64& g) {
  RingElement m = r.from_int(uniform(g, 1, 3) * (uniform(g, 0, 1) == 0 ? 1 : -1));
  for (std::size_t j = 1; j <= r.space().rank; ++j) {
    for (long long e = uniform(g, 0, 1); e > 0; --e) m = m * r.t(j);
  }
  return m;
}

RingElement random_valuation_poly(const RingDescriptor& r, std::mt19937_64& g, int deg) {
  RingElement out = r.zero(), xp = r.one();
  const RingElement x = r.variable(0);
  for (int k = 0; k <= deg; ++k, xp = xp * x) {
    if (k == deg || k == 0 || uniform(g, 0, 2) == 0) out = out + random_monomial(r, g) * xp;
  }
  return out;
}

RingElement random_bivariate(const RingDescriptor& r, std::mt19937_64& g, int deg, long long p) {
  RingElement out = r.zero();
  const RingElement x = r.variable(0), y = r.variable(1);
  for (int a = 0; a <= deg; ++a) {
    for (int b = 0; a + b <= deg; ++b) {
      RingElement m = r.from_int(uniform(g, 0, p - 1));
      for (int i = 0; i < a; ++i) m = m * x;
      for (int i = 0; i < b; ++i) m = m * y;
      out = out + m;
    }
  }
  return out;
}

}  // namespace

std::vector<RingElement> Corpus::ideal(std::size_t i) const {
  std::mt19937_64 g = stream(i);
  const RingDescriptor r = ring();
  const auto ngens = static_cast<std::size_t>(uniform(g, 1, static_cast<long long>(std::max<std::size_t>(spec_.max_gens, 1))));
  std::vector<RingElement> out;
  switch (spec_.kind) {
    case CorpusSpec::Kind::FieldUnivariate: {
      // Half the trials share a common factor so the gcd is nontrivial.
      const int common = uniform(g, 0, 1) == 0 ? 0 : static_cast<int>(uniform(g, 1, std::min(3, spec_.max_degree)));
      const RingElement h = common > 0 ? random_univariate(r, g, common, spec_.coeff_bound) : r.one();
      for (std::size_t k = 0; k < ngens; ++k) {
        const int d = static_cast<int>(uniform(g, 0, spec_.max_degree - common));
        out.push_back(h * random_univariate(r, g, d, spec_.coeff_bound));
      }
      break;
    }
    case CorpusSpec::Kind::Valuation:
    case CorpusSpec::Kind::Localization: {
      const bool val = r.base().kind == BaseKind::ValuationDomain;
      const int maxd = std::min(3, spec_.max_degree);
      const int common = uniform(g, 0, 1) == 0 ? 0 : 1;
      const RingElement h = common == 0 ? r.one() : val ? random_valuation_poly(r, g, 1) : random_univariate(r, g, 1, spec_.coeff_bound);
      for (std::size_t k = 0; k < std::min<std::size_t>(ngens, 3); ++k) {
        const int d = static_cast<int>(uniform(g, 0, maxd - common));
        out.push_back(h * (val ? random_valuation_poly(r, g, d) : random_univariate(r, g, d, spec_.coeff_bound)));
      }
      break;
    }
    case CorpusSpec::Kind::Bivariate: {
      const long long p = static_cast<long long>(spec_.base.modulus);
      const bool common = uniform(g, 0, 2) == 0;
      const RingElement h = common ? random_bivariate(r, g, 1, p) : r.one();
      for (std::size_t k = 0; k < std::min<std::size_t>(ngens, 3); ++k) {
        out.push_back(h * random_bivariate(r, g, common ? 1 : 2, p));
      }
      break;
    }
    case CorpusSpec::Kind::Presentation:
      break;
  }
  return out;
}

PresentationMatrix Corpus::presentation(std::size_t i) const {
  std::mt19937_64 g = stream(i, 1);
  PresentationMatrix m;
  m.base = ring();
  m.rows = static_cast<std::size_t>(uniform(g, 1, 3));
  m.cols = static_cast<std::size_t>(uniform(g, 1, 3));
  const long long b = std::min<long long>(spec_.coeff_bound, 6);
  for (std::size_t k = 0; k < m.rows * m.cols; ++k) m.entries.push_back(m.base.from_int(uniform(g, -b, b)));
  return m;
}

RingElement Corpus::localizer(std::size_t i) const {
  std::mt19937_64 g = stream(i, 2);
  const RingDescriptor r = ring();
  if (r.base().kind == BaseKind::ValuationDomain) {
    switch (uniform(g, 0, 3)) {
      case 0:
        return r.t(1);
      case 1:
        return r.t(std::min<std::size_t>(2, r.space().rank));
      case 2:
        return r.t(1) * r.t(std::min<std::size_t>(2, r.space().rank));
      default:
        return r.from_int(2);  // a unit of V
    }
  }
  static const long long cs[] = {2, 3, 5, 6, 10, 15};
  return r.from_int(cs[uniform(g, 0, 5)]);
}

}  // namespace fgfc
