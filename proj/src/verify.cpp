#include "fgfc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace fgfc {

std::vector<std::string> render_primes(std::vector<PrimeRep> primes) {
  sort_canonical(primes);
  std::vector<std::string> out;
  for (const PrimeRep& p : primes) out.push_back(p.str());
  return out;
}

std::vector<std::string> check_prime_set(const std::vector<RingElement>& ideal, const std::vector<PrimeRep>& primes) {
  std::vector<std::string> out;
  for (const PrimeRep& q : primes) {
    if (!ideal_in_prime(ideal, q)) out.push_back("prime " + q.str() + " misses the ideal");
  }
  for (std::size_t a = 0; a < primes.size(); ++a) {
    for (std::size_t b = 0; b < primes.size(); ++b) {
      if (a != b && prime_contains(primes[a], primes[b])) {
        out.push_back("prime " + primes[a].str() + " contains " + primes[b].str());
      }
    }
  }
  return out;
}

namespace {

std::vector<std::string> render_ideal(const RingDescriptor& r, const std::vector<RingElement>& gens) {
  std::vector<std::string> out;
  for (const RingElement& g : gens) out.push_back(r.render(g));
  return out;
}

void add_trace_check(TrialResult& t, TraceNode trace, std::size_t nvars) {
  TraceReport rep = check_trace(trace, nvars);
  for (const std::string& v : rep.violations) t.violations.push_back("trace: " + v);
  t.traces.push_back(std::move(trace));
}

std::vector<std::string> render_bases(std::vector<BasePrime> ps) {
  std::sort(ps.begin(), ps.end());
  std::vector<std::string> out;
  for (const BasePrime& p : ps) out.push_back(p.str());
  return out;
}

TrialResult run_trial(const Corpus& corpus, std::size_t i) {
  using Kind = CorpusSpec::Kind;
  TrialResult t;
  t.index = i;
  const auto start = std::chrono::steady_clock::now();
  const RingDescriptor r = corpus.ring();
  try {
    switch (corpus.spec().kind) {
      case Kind::FieldUnivariate:
      case Kind::Valuation:
      case Kind::Bivariate: {
        const std::vector<RingElement> gens = corpus.ideal(i);
        t.ideal = render_ideal(r, gens);
        TraceNode trace;
        const std::vector<PrimeRep> eng = min_primes_multi(r, gens, &trace);
        t.engine = render_primes(eng);
        add_trace_check(t, std::move(trace), r.space().nx());
        for (const std::string& v : check_prime_set(gens, eng)) t.violations.push_back(v);
        if (corpus.spec().kind == Kind::Bivariate) {
          t.note = bivariate_oracle_check(r, gens, eng);
          t.agree = t.note.empty();
          break;
        }
        GenList gl{r, 0, {}};
        for (const RingElement& g : gens) gl.gens.push_back(Poly::from_element(0, g));
        const std::vector<PrimeRep> orc =
            corpus.spec().kind == Kind::Valuation ? valuation_shape_oracle(gl) : gcd_factor_oracle(gl);
        t.oracle = render_primes(orc);
        t.agree = same_prime_sets(eng, orc);
        break;
      }
      case Kind::Presentation: {
        const PresentationMatrix m = corpus.presentation(i);
        for (const RingElement& e : m.entries) t.ideal.push_back(r.render(e));
        t.ideal.insert(t.ideal.begin(), std::to_string(m.rows) + "x" + std::to_string(m.cols));
        t.engine = render_bases(min_primes_base(r, fitting_F0(m)));
        t.oracle = render_bases(fitting_support_oracle(m));
        t.agree = t.engine == t.oracle;
        break;
      }
      case Kind::Localization: {
        const std::vector<RingElement> gens = corpus.ideal(i);
        const RingElement c = corpus.localizer(i);
        t.ideal = render_ideal(r, gens);
        t.ideal.push_back("invert " + r.render(c));
        TraceNode whole;
        const std::vector<PrimeRep> all = min_primes_multi(r, gens, &whole);
        add_trace_check(t, std::move(whole), r.space().nx());
        for (const std::string& v : check_prime_set(gens, all)) t.violations.push_back(v);
        std::vector<PrimeRep> avoiding;
        for (const PrimeRep& q : all) {
          if (!q.contains(c)) avoiding.push_back(q);
        }
        const RingDescriptor rc = localize(r, c);
        std::vector<PrimeRep> local;
        if (!rc.is_zero_ring()) {
          GenList gl{rc, 0, {}};
          for (const RingElement& g : gens) gl.gens.push_back(Poly::from_element(0, g).in_ring(rc));
          TraceNode trace;
          trace.kind = "root";
          for (const PrimeRep& q : min_primes_univ(gl, &trace)) local.push_back(q.with_ambient({0}));
          add_trace_check(t, std::move(trace), r.space().nx());
        }
        t.engine = render_primes(local);
        t.oracle = render_primes(avoiding);
        t.agree = same_prime_sets(local, avoiding);
        break;
      }
    }
  } catch (const OracleUnavailable& e) {
    t.skipped = true;
    t.note = e.what();
  } catch (const std::exception& e) {
    t.agree = false;
    t.note = std::string("error: ") + e.what();
  }
  if (!t.agree && !t.skipped && t.note.empty()) t.note = "prime sets differ";
  t.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return t;
}

const char* oracle_name(CorpusSpec::Kind k) {
  switch (k) {
    case CorpusSpec::Kind::FieldUnivariate:
      return "gcd_factor";
    case CorpusSpec::Kind::Valuation:
      return "valuation_shape";
    case CorpusSpec::Kind::Bivariate:
      return "bivariate_points";
    case CorpusSpec::Kind::Presentation:
      return "fitting_support";
    case CorpusSpec::Kind::Localization:
      return "localization_consistency";
  }
  return "";
}

}  // namespace

CompareReport corpus_compare(const CorpusSpec& spec, std::size_t trials, std::size_t jobs) {
  CompareReport rep;
  rep.spec = spec;
  rep.trials = trials;
  rep.oracle = oracle_name(spec.kind);
  if (spec.kind == CorpusSpec::Kind::Valuation) rep.justification = kValuationOracleJustification;
  const Corpus corpus(spec);
  rep.results.resize(trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < trials; i = next++) rep.results[i] = run_trial(corpus, i);
  };
  const std::size_t n = std::max<std::size_t>(1, std::min(jobs, trials));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t k = 0; k < n; ++k) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  for (const TrialResult& t : rep.results) {
    if (t.skipped) {
      ++rep.skipped;
    } else if (t.agree) {
      ++rep.agreed;
    } else {
      rep.disagreements.push_back(t.index);
    }
    rep.violations += t.violations.size();
  }
  return rep;
}

}  // namespace fgfc
