#include "fgfc/engine.hpp"

#include "fgfc/factor.hpp"
#include "fgfc/galois.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace fgfc {

namespace {

TraceNode* add_child(TraceNode* parent, const std::string& kind) {
  if (parent == nullptr) return nullptr;
  parent->children.push_back(TraceNode{});
  parent->children.back().kind = kind;
  return &parent->children.back();
}

std::vector<std::string> render_all(const std::vector<PrimeRep>& ps) {
  std::vector<std::string> out;
  for (const PrimeRep& p : ps) out.push_back(p.str());
  return out;
}

std::vector<std::string> render_elements(const RingDescriptor& r, const std::vector<RingElement>& xs) {
  std::vector<std::string> out;
  for (const RingElement& x : xs) out.push_back(r.render(x));
  return out;
}

// Unit of B: a root unit times a product of inverted elements.
bool unit_in(const RingDescriptor& b, const RingElement& c) {
  if (b.is_unit(c)) return true;
  if (c.is_zero() || !c.num().domain().is_field()) return false;
  MPoly n = c.num();
  for (const RingElement& s : b.inverted()) {
    if (s.num().is_constant()) continue;
    while (!n.is_constant()) {
      auto q = n.divide(s.num());
      if (!q) break;
      n = *q;
    }
  }
  return n.is_constant() && b.is_unit(RingElement(n, c.den()));
}

// c^k g - q f with deg < deg f, where c = lc(f).
Poly pseudo_reduce(Poly g, const Poly& f) {
  const RingElement& c = f.lc();
  while (g.degree() >= f.degree()) {
    Poly t = Poly::monomial(f.var(), g.lc(), static_cast<std::size_t>(g.degree() - f.degree()));
    g = g.scaled(c) - t * f;
  }
  return g;
}

std::vector<std::size_t> plus_var(std::vector<std::size_t> v, std::size_t x) {
  v.push_back(x);
  return v;
}

// m(u := -b/a) * a^deg_u(m).
MPoly substitute_linear(const MPoly& m, std::size_t u, const MPoly& a, const MPoly& b) {
  int deg = m.degree(u);
  if (deg <= 0) return m;
  std::vector<MPoly> cs = m.coeffs_in(u);
  MPoly out(m.nvars(), m.domain());
  MPoly nb = -b;
  for (int k = 0; k <= deg; ++k) {
    if (cs[static_cast<std::size_t>(k)].is_zero()) continue;
    out += cs[static_cast<std::size_t>(k)] * nb.pow(static_cast<unsigned>(k)) * a.pow(static_cast<unsigned>(deg - k));
  }
  return out;
}

std::string node_label(const TraceNode& n) {
  std::string s = n.kind.empty() ? "call" : n.kind;
  if (!n.var.empty()) s += " in " + n.var;
  if (n.measure >= 0) s += " d=" + std::to_string(n.measure);
  return s;
}

}  // namespace

GenList branch_quotient(const GenList& i, std::size_t n) {
  GenList out = i;
  const Poly& f = i.gens.at(n);
  LeadingData ld = leading_data(f);
  out.gens[n] = f - Poly::monomial(f.var(), ld.lc, static_cast<std::size_t>(ld.degree));
  out.gens.push_back(Poly::constant(f.var(), ld.lc));
  return out;
}

std::vector<RingElement> residue_factors(const PrimeRep& p, const RingElement& f, std::size_t var) {
  MPoly h = p.reduce(f);
  if (h.degree(var) < 1) throw std::logic_error("polynomial degenerates modulo the prime");
  struct Rel {
    MPoly g;
    std::size_t u;
  };
  std::vector<Rel> nonlinear;
  for (std::size_t i = p.polys().size(); i-- > 0;) {
    const MPoly& g = p.polys()[i].num();
    const std::size_t u = p.poly_vars()[i];
    if (g.degree(u) != 1) {
      nonlinear.push_back({g, u});
      continue;
    }
    std::vector<MPoly> ab = g.coeffs_in(u);
    h = substitute_linear(h, u, ab[1], ab[0]);
    for (Rel& r : nonlinear) r.g = substitute_linear(r.g, u, ab[1], ab[0]);
  }
  std::vector<RingElement> out;
  if (nonlinear.empty()) {
    for (const auto& [g, m] : factor_multivariate(h)) {
      if (g.degree(var) >= 1) out.emplace_back(g);
    }
    return out;
  }
  const Domain d = h.domain();
  if (nonlinear.size() == 1 && !d.is_rational()) {
    const auto& [g, u] = nonlinear.front();
    bool shape = g.variables() == std::vector<std::size_t>{u};
    for (std::size_t v : h.variables()) shape = shape && (v == u || v == var);
    if (shape) {
      std::vector<MPoly> gc = g.monic().coeffs_in(u);
      std::vector<std::uint64_t> mod;
      for (const MPoly& c : gc) mod.push_back(c.constant_term().residue());
      GaloisField k(d.modulus, mod);
      auto to_elem = [&](const MPoly& c) {
        std::vector<std::uint64_t> cs;
        for (const MPoly& x : c.coeffs_in(u)) cs.push_back(x.constant_term().residue());
        return k.from_coeffs(cs);
      };
      GFPoly hh;
      for (const MPoly& c : h.coeffs_in(var)) hh.push_back(to_elem(c));
      gfpoly::trim(k, hh);
      const std::size_t nv = h.nvars();
      for (const auto& [fac, m] : factor_gf(k, hh)) {
        if (fac.size() < 2) continue;
        MPoly e(nv, d);
        for (std::size_t i = 0; i < fac.size(); ++i) {
          for (std::size_t j = 0; j < fac[i].size(); ++j) {
            if (fac[i][j] == 0) continue;
            Exponent ex(nv, 0);
            ex[u] = static_cast<int>(j);
            ex[var] = static_cast<int>(i);
            e.add_term(ex, Scalar(d, static_cast<long long>(fac[i][j])));
          }
        }
        out.emplace_back(e);
      }
      return out;
    }
  }
  throw CapabilityError("residue-field-factoring",
                        "no factorization oracle for the residue field of " + p.str());
}

std::vector<PrimeRep> min_primes(const RingDescriptor& b, const std::vector<RingElement>& j, TraceNode* trace) {
  if (b.is_zero_ring()) {
    if (trace != nullptr) trace->ring = b.str();
    return {};
  }
  const RingDescriptor b0 = b.without_inverted();
  std::vector<PrimeRep> found;
  if (b0.is_root()) {
    for (const BasePrime& bp : min_primes_base(b0, j)) found.emplace_back(b0.base(), b0.space(), bp, std::vector<std::size_t>{});
    if (trace != nullptr) {
      trace->ring = b0.str();
      trace->ideal = render_elements(b0, j);
      trace->primes = render_all(found);
    }
  } else {
    const std::size_t v = b0.poly_vars().back();
    GenList g{b0.without_last_variable(), v, {}};
    for (const RingElement& a : j) g.gens.push_back(Poly::from_element(v, b0.canonical(a)));
    found = min_primes_univ(g, trace);
  }
  std::vector<PrimeRep> out;
  for (const PrimeRep& q : found) {
    bool avoids = std::none_of(b.inverted().begin(), b.inverted().end(), [&](const RingElement& s) { return q.contains(s); });
    if (avoids) out.push_back(q);
  }
  return out;
}

std::vector<PrimeRep> monic_case(const RingDescriptor& b, const std::vector<RingElement>& j, const Poly& f,
                                 TraceNode* trace) {
  if (f.degree() < 1) throw MathError(MathError::Code::NotMonic, "monic case needs positive degree");
  if (!unit_in(b, f.lc())) throw MathError(MathError::Code::NotMonic, "leading coefficient is not a unit");
  if (trace != nullptr) {
    std::string q;
    for (const std::string& e : render_elements(b, j)) q += (q.empty() ? "" : ", ") + e;
    trace->ring = q.empty() ? b.str() : b.str() + " / (" + q + ")";
    trace->var = b.space().names().at(f.var());
    trace->ideal = {f.str(b.space().names())};
  }
  std::vector<PrimeRep> out;
  const RingElement fe = f.to_element();
  for (const PrimeRep& p : min_primes(b, j, add_child(trace, "base"))) {
    for (const RingElement& g : residue_factors(p, fe, f.var())) {
      PrimeRep q = p.with_ambient(b.poly_vars()).with_poly(f.var(), g);
      out.push_back(q);
      if (trace != nullptr) trace->factors.push_back(q.polys().back().str(b.space().names()));
    }
  }
  if (trace != nullptr) trace->primes = render_all(out);
  return out;
}

std::vector<PrimeRep> min_primes_univ(const GenList& i0, TraceNode* trace) {
  const GenList i = normalize(i0);
  const RingDescriptor& b = i.ring;
  const std::size_t v = i.var;
  const std::vector<std::size_t> ambient = plus_var(b.poly_vars(), v);
  int d = 0;
  for (const Poly& p : i.gens) d += p.degree();
  if (trace != nullptr) {
    trace->ring = b.str();
    trace->var = b.space().names().at(v);
    trace->level = b.poly_vars().size();
    trace->ideal = i.render();
    trace->measure = d;
  }
  try {
    std::vector<PrimeRep> result;
    if (d == 0) {
      std::vector<RingElement> consts;
      for (const Poly& p : i.gens) consts.push_back(p.coeff(0));
      for (const PrimeRep& q : min_primes(b, consts, add_child(trace, "d0"))) result.push_back(q.with_ambient(ambient));
      if (trace != nullptr) trace->primes = render_all(result);
      return result;
    }
    std::size_t n = 0;
    int best = -1;
    for (std::size_t k = 0; k < i.gens.size(); ++k) {
      int dk = i.gens[k].degree();
      if (dk >= 1 && (best < 0 || dk < best)) {
        best = dk;
        n = k;
      }
    }
    const RingElement c = i.gens[n].lc();
    if (trace != nullptr) trace->pivot = b.render(c);

    std::vector<PrimeRep> cands;
    if (!unit_in(b, c)) {
      cands = min_primes_univ(branch_quotient(i, n), add_child(trace, "quotient"));
    }

    const RingDescriptor bc = localize(b, c);
    if (!bc.is_zero_ring()) {
      std::vector<Poly> gens;
      std::size_t fn = 0;
      for (std::size_t k = 0; k < i.gens.size(); ++k) {
        Poly p = i.gens[k].in_ring(bc);
        if (k == n) fn = gens.size();
        if (!p.is_zero() || k == n) gens.push_back(std::move(p));
      }
      const Poly f = gens[fn];
      std::size_t other = gens.size();
      for (std::size_t k = 0; k < gens.size() && other == gens.size(); ++k) {
        if (k != fn && gens[k].degree() >= f.degree()) other = k;
      }
      TraceNode* loc = add_child(trace, "localize");
      std::vector<PrimeRep> from_b;
      if (other != gens.size()) {
        if (loc != nullptr) loc->split_case = "reduce";
        gens[other] = pseudo_reduce(gens[other], f);
        from_b = min_primes_univ(GenList{bc, v, gens}, loc);
      } else {
        std::vector<RingElement> consts;
        for (std::size_t k = 0; k < gens.size(); ++k) {
          if (k == fn) continue;
          if (gens[k].degree() > 0) throw std::logic_error("monic case with a generator of positive degree");
          consts.push_back(gens[k].coeff(0));
        }
        if (loc != nullptr) {
          loc->split_case = "monic";
          loc->ring = bc.str();
          loc->var = trace->var;
          loc->level = trace->level;
          loc->pivot = trace->pivot;
        }
        from_b = monic_case(bc, consts, f, add_child(loc, "monic"));
        if (loc != nullptr) loc->primes = render_all(from_b);
      }
      for (const PrimeRep& q : from_b) cands.push_back(contract_from_localization(q, c));
    }
    result = minimal_filter(cands, elements_of(i));
    if (trace != nullptr) trace->primes = render_all(result);
    return result;
  } catch (CapabilityError& e) {
    if (trace != nullptr) e.trace_path.insert(e.trace_path.begin(), node_label(*trace));
    throw;
  }
}

std::vector<PrimeRep> min_primes_multi(const RingDescriptor& root, const std::vector<RingElement>& gens, TraceNode* trace) {
  if (!root.is_root()) throw MathError(MathError::Code::Shape, "min_primes_multi expects a root ring");
  const Space& s = root.space();
  std::vector<std::size_t> all, used;
  for (std::size_t v = 0; v < s.nx(); ++v) {
    all.push_back(v);
    bool occurs = std::any_of(gens.begin(), gens.end(), [&](const RingElement& g) { return g.involves(v); });
    if (occurs) used.push_back(v);
  }
  RingDescriptor b = root;
  for (std::size_t v : used) b = b.with_variable(v);
  if (trace != nullptr) trace->kind = "root";
  std::vector<PrimeRep> out;
  for (const PrimeRep& q : min_primes(b, gens, trace)) out.push_back(q.with_ambient(all));
  return out;
}

TraceReport check_trace(const TraceNode& root, std::size_t nvars) {
  TraceReport rep;
  // depth: number of same-level call nodes on the path from the level root.
  std::function<void(const TraceNode&, const TraceNode*, int, std::size_t, std::size_t)> walk =
      [&](const TraceNode& n, const TraceNode* parent, int level_measure, std::size_t level_depth, std::size_t depth) {
        ++rep.nodes;
        rep.max_depth = std::max(rep.max_depth, depth);
        const bool is_call = n.measure >= 0;
        const bool same_level = parent != nullptr && parent->measure >= 0 && is_call && parent->var == n.var &&
                                (n.kind == "quotient" || n.kind == "localize");
        if (same_level) {
          ++level_depth;
          if (n.measure >= parent->measure) {
            rep.ok = false;
            rep.violations.push_back(n.kind + " node in " + n.var + ": measure " + std::to_string(n.measure) +
                                     " does not drop below " + std::to_string(parent->measure));
          }
        } else if (is_call) {
          level_measure = n.measure;
          level_depth = 0;
        }
        if (is_call && level_depth > static_cast<std::size_t>(level_measure) + nvars) {
          rep.ok = false;
          rep.violations.push_back("depth " + std::to_string(level_depth) + " in " + n.var + " exceeds " +
                                   std::to_string(level_measure) + " + " + std::to_string(nvars));
        }
        const TraceNode* next_parent = is_call ? &n : parent;
        for (const TraceNode& c : n.children) walk(c, next_parent, level_measure, level_depth, depth + 1);
      };
  walk(root, nullptr, root.measure, 0, 0);
  return rep;
}

}  // namespace fgfc
