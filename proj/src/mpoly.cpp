#include "fgfc/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fgfc {

MPoly MPoly::constant(std::size_t nvars, const Scalar& c) {
  MPoly p(nvars, c.domain());
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MPoly MPoly::constant(std::size_t nvars, Domain d, long long c) { return constant(nvars, Scalar(d, c)); }

MPoly MPoly::variable(std::size_t nvars, Domain d, std::size_t var, int power) {
  Exponent e(nvars, 0);
  e.at(var) = power;
  return monomial(nvars, Scalar(d, 1), std::move(e));
}

MPoly MPoly::monomial(std::size_t nvars, const Scalar& c, Exponent e) {
  MPoly p(nvars, c.domain());
  p.add_term(e, c);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && std::all_of(leading_exponent().begin(), leading_exponent().end(),
                                                              [](int x) { return x == 0; }));
}

bool MPoly::is_one() const { return is_constant() && !is_zero() && leading_coeff().is_one(); }

Scalar MPoly::constant_term() const {
  auto it = terms_.find(Exponent(nvars_, 0));
  return it == terms_.end() ? Scalar(domain_, 0) : it->second;
}

int MPoly::degree(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

bool MPoly::involves(std::size_t var) const { return degree(var) > 0; }

std::vector<std::size_t> MPoly::variables() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < nvars_; ++v) {
    if (involves(v)) out.push_back(v);
  }
  return out;
}

std::vector<MPoly> MPoly::coeffs_in(std::size_t var) const {
  std::vector<MPoly> out(static_cast<std::size_t>(std::max(degree(var), 0)) + 1, MPoly(nvars_, domain_));
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f[var] = 0;
    out[static_cast<std::size_t>(e[var])].add_term(f, c);
  }
  return out;
}

MPoly MPoly::from_coeffs(std::size_t var, const std::vector<MPoly>& coeffs, std::size_t nvars, Domain d) {
  MPoly out(nvars, d);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    for (const auto& [e, c] : coeffs[i].terms_) {
      Exponent f = e;
      f[var] += static_cast<int>(i);
      out.add_term(f, c);
    }
  }
  return out;
}

void MPoly::add_term(const Exponent& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (nvars_ == 0 && terms_.empty() && o.nvars_ != 0) {
    nvars_ = o.nvars_;
    domain_ = o.domain_;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out(std::max(a.nvars_, b.nvars_), a.domain_);
  Exponent e(out.nvars_, 0);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MPoly MPoly::scaled(const Scalar& c) const {
  MPoly p(nvars_, domain_);
  if (c.is_zero()) return p;
  for (const auto& [e, x] : terms_) p.add_term(e, x * c);
  return p;
}

MPoly MPoly::shifted(const Exponent& s) const {
  MPoly p(nvars_, domain_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += s[i];
    p.terms_.emplace(std::move(f), c);
  }
  return p;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly r = constant(nvars_, domain_, 1);
  MPoly b = *this;
  while (e > 0) {
    if (e & 1u) r = r * b;
    e >>= 1u;
    if (e > 0) b = b * b;
  }
  return r;
}

bool operator<(const MPoly& a, const MPoly& b) {
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (!(ia->second == ib->second)) return ia->second < ib->second;
  }
  return ia == a.terms_.end() && ib != b.terms_.end();
}

MPoly MPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_coeff().inverse());
}

std::optional<MPoly> MPoly::divide(const MPoly& b) const {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  MPoly q(nvars_, domain_);
  MPoly r = *this;
  const Exponent& lb = b.leading_exponent();
  Scalar inv = b.leading_coeff().inverse();
  Exponent diff(nvars_, 0);
  while (!r.is_zero()) {
    const Exponent& lr = r.leading_exponent();
    for (std::size_t i = 0; i < nvars_; ++i) {
      diff[i] = lr[i] - lb[i];
      if (diff[i] < 0) return std::nullopt;
    }
    MPoly t = monomial(nvars_, r.leading_coeff() * inv, diff);
    r -= t * b;
    q += t;
  }
  return q;
}

MPoly MPoly::prem(const MPoly& b, std::size_t var) const {
  int db = b.degree(var);
  if (db < 0) throw std::domain_error("pseudo-remainder by zero");
  std::vector<MPoly> bc = b.coeffs_in(var);
  const MPoly& lcb = bc.back();
  MPoly r = *this;
  int dr = r.degree(var);
  while (!r.is_zero() && dr >= db) {
    MPoly lcr = r.coeffs_in(var).back();
    r = lcb * r - (lcr * variable(nvars_, domain_, var, dr - db)) * b;
    dr = r.degree(var);
  }
  return r;
}

MPoly MPoly::derivative(std::size_t var) const {
  MPoly p(nvars_, domain_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    f[var] -= 1;
    p.add_term(f, c * Scalar(domain_, e[var]));
  }
  return p;
}

MPoly MPoly::substitute(std::size_t var, const MPoly& value) const {
  std::vector<MPoly> cs = coeffs_in(var);
  MPoly r(nvars_, domain_);
  for (std::size_t i = cs.size(); i-- > 0;) r = r * value + cs[i];
  return r;
}

MPoly MPoly::map_coeffs(Domain target) const {
  MPoly p(nvars_, target);
  for (const auto& [e, c] : terms_) p.add_term(e, c.convert(target));
  return p;
}

MPoly MPoly::remap(const std::vector<std::size_t>& map, std::size_t nvars) const {
  MPoly p(nvars, domain_);
  for (const auto& [e, c] : terms_) {
    Exponent f(nvars, 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) f.at(map.at(i)) += e[i];
    }
    p.add_term(f, c);
  }
  return p;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool negative = domain_.is_rational() && c.rational() < 0;
    Scalar mag = negative ? -c : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << mag.str();
    } else if (mag.is_one()) {
      os << mono;
    } else {
      os << mag.str() << "*" << mono;
    }
  }
  return os.str();
}

int compare_prefix(const Exponent& a, const Exponent& b, std::size_t begin, std::size_t end) {
  for (std::size_t i = begin; i < end; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

MPoly content(const MPoly& a, std::size_t var) {
  MPoly g(a.nvars(), a.domain());
  for (const MPoly& c : a.coeffs_in(var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

MPoly primitive_part(const MPoly& a, std::size_t var) {
  if (a.is_zero()) return a;
  return *a.divide(content(a, var));
}

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (!a.domain().is_field()) throw std::domain_error("polynomial gcd needs a field of coefficients");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  std::vector<std::size_t> va = a.variables(), vb = b.variables();
  if (va.empty() || vb.empty()) return MPoly::constant(a.nvars(), a.domain(), 1);
  std::size_t v = a.nvars();
  for (std::size_t x : va) v = std::min(v, x);
  for (std::size_t x : vb) v = std::min(v, x);
  int da = a.degree(v), db = b.degree(v);
  if (da == 0) return gcd(a, content(b, v)).monic();
  if (db == 0) return gcd(content(a, v), b).monic();
  MPoly ca = content(a, v), cb = content(b, v);
  MPoly g0 = gcd(ca, cb);
  MPoly r0 = *a.divide(ca), r1 = *b.divide(cb);
  if (r0.degree(v) < r1.degree(v)) std::swap(r0, r1);
  while (true) {
    MPoly r = r0.prem(r1, v);
    if (r.is_zero()) break;
    if (r.degree(v) == 0) {
      r1 = MPoly::constant(a.nvars(), a.domain(), 1);
      break;
    }
    r0 = std::move(r1);
    r1 = primitive_part(r, v);
  }
  return (g0 * primitive_part(r1, v)).monic();
}

}  // namespace fgfc
