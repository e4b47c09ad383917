#include "fgfc/cli.hpp"

#include "fgfc/json_out.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <ostream>
#include <sstream>
#include <thread>

namespace fgfc {

using nlohmann::json;

namespace {

struct Verdict {
  std::string verdict;  // agree | disagree | unavailable
  std::string oracle;
  std::string detail;
};

Verdict verify_problem(const Problem& p, const std::vector<PrimeRep>& primes, const TraceNode& trace) {
  Verdict v;
  std::vector<std::string> problems = check_prime_set(p.gens, primes);
  for (const std::string& s : check_trace(trace, p.ring.space().nx()).violations) problems.push_back("trace: " + s);
  const BaseRing& b = p.ring.base();
  const std::size_t nx = p.ring.space().nx();
  try {
    if (nx == 1 && b.is_field()) {
      v.oracle = "gcd_factor";
      GenList gl{p.ring, 0, {}};
      for (const RingElement& g : p.gens) gl.gens.push_back(Poly::from_element(0, g));
      if (!same_prime_sets(primes, gcd_factor_oracle(gl))) problems.push_back("prime sets differ");
    } else if (nx == 1 && b.kind == BaseKind::ValuationDomain) {
      v.oracle = "valuation_shape";
      GenList gl{p.ring, 0, {}};
      for (const RingElement& g : p.gens) gl.gens.push_back(Poly::from_element(0, g));
      if (!same_prime_sets(primes, valuation_shape_oracle(gl))) problems.push_back("prime sets differ");
    } else if (nx == 2 && b.kind == BaseKind::PrimeField) {
      v.oracle = "bivariate_points";
      const std::string why = bivariate_oracle_check(p.ring, p.gens, primes);
      if (!why.empty()) problems.push_back(why);
    } else {
      throw OracleUnavailable("no oracle for this ring and variable count");
    }
  } catch (const OracleUnavailable& e) {
    v.verdict = problems.empty() ? "unavailable" : "disagree";
    v.detail = e.what();
    for (const std::string& s : problems) v.detail += "; " + s;
    return v;
  }
  v.verdict = problems.empty() ? "agree" : "disagree";
  for (const std::string& s : problems) v.detail += (v.detail.empty() ? "" : "; ") + s;
  return v;
}

json verdict_json(const Verdict& v) {
  json j{{"verdict", v.verdict}, {"oracle", v.oracle}};
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

struct Outcome {
  std::vector<PrimeRep> primes;
  TraceNode trace;
  Verdict verdict;
};

// drop_last: fault injection for exercising the disagreement path.
Outcome solve(const Problem& p, bool verify, bool drop_last = false) {
  Outcome o;
  o.primes = min_primes_multi(p.ring, p.gens, &o.trace);
  sort_canonical(o.primes);
  if (drop_last && !o.primes.empty()) o.primes.pop_back();
  if (verify) o.verdict = verify_problem(p, o.primes, o.trace);
  return o;
}

std::vector<std::string> rendered(const Problem& p) {
  std::vector<std::string> out;
  for (const RingElement& g : p.gens) out.push_back(p.ring.render(g));
  return out;
}

std::vector<std::string> split_vars(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

bool corpus_spec_for(const std::string& kind, CorpusSpec& s) {
  using K = CorpusSpec::Kind;
  if (kind == "field-fp") s = {K::FieldUnivariate, BaseRing::prime_field(5), 4, 6, 10, s.seed};
  else if (kind == "field-q") s = {K::FieldUnivariate, BaseRing::rational(), 4, 6, 10, s.seed};
  else if (kind == "valuation") s = {K::Valuation, BaseRing::valuation(2, Domain{}), 3, 3, 10, s.seed};
  else if (kind == "valuation3") s = {K::Valuation, BaseRing::valuation(3, Domain{}), 3, 3, 10, s.seed};
  else if (kind == "bivariate") s = {K::Bivariate, BaseRing::prime_field(5), 3, 2, 5, s.seed};
  else if (kind == "fitting-z") s = {K::Presentation, BaseRing::integers(), 4, 6, 10, s.seed};
  else if (kind == "fitting-fp") s = {K::Presentation, BaseRing::prime_field(5), 4, 6, 10, s.seed};
  else if (kind == "localization-z") s = {K::Localization, BaseRing::integers(), 3, 3, 10, s.seed};
  else if (kind == "localization-v") s = {K::Localization, BaseRing::valuation(2, Domain{}), 3, 3, 10, s.seed};
  else return false;
  return true;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal primes of finitely generated ideals over FGFC base rings", "fgfc"};
  std::string ring_text, ideal_text, vars_text, format = "text", corpus;
  bool trace = false, verify = false, drop_prime = false;
  std::size_t limit = 0, jobs = 1, trials = 50;
  std::uint64_t seed = 1;
  app.add_option("--ring", ring_text, "Q | Fp(p) | Z | Zmod(n) | Val(rank=r, base=Q|Fp(p))");
  app.add_option("--ideal", ideal_text, "generators separated by ';', or preset:opex(r,k) / preset:glued(r,k)");
  app.add_option("--vars", vars_text, "comma-separated polynomial variable names");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--trace", trace, "include the decomposition trace");
  app.add_flag("--verify", verify, "cross-check with the applicable oracle");
  app.add_option("--limit", limit, "presets: sweep the truncation over 1..N");
  app.add_option("--seed", seed, "corpus seed");
  app.add_option("--jobs", jobs, "parallel workers for sweeps and corpus runs")->check(CLI::Range(1, 256));
  app.add_option("--corpus", corpus,
                 "run a seeded engine/oracle comparison: field-fp field-q valuation valuation3 bivariate fitting-z "
                 "fitting-fp localization-z localization-v");
  app.add_option("--trials", trials, "corpus trials");
  app.add_flag("--inject-drop-prime", drop_prime)->group("");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kExitOk : kExitUsage;
  }
  const bool as_json = format == "json";
  auto fail = [&](int code, json error, const std::string& text) {
    if (as_json) {
      out << json{{"schema_version", kSchemaVersion}, {"error", std::move(error)}}.dump(2) << "\n";
    } else {
      err << text << "\n";
    }
    return code;
  };

  if (!corpus.empty()) {
    CorpusSpec spec;
    spec.seed = seed;
    if (!corpus_spec_for(corpus, spec)) return fail(kExitUsage, {{"kind", "usage"}, {"message", "unknown corpus " + corpus}}, "unknown corpus " + corpus);
    const CompareReport rep = corpus_compare(spec, trials, jobs);
    if (as_json) {
      out << report_to_json(rep).dump(2) << "\n";
    } else {
      print_report(out, rep);
    }
    return rep.disagreements.empty() && rep.violations == 0 ? kExitOk : kExitDisagree;
  }
  if (ideal_text.empty()) {
    return fail(kExitUsage, {{"kind", "usage"}, {"message", "--ideal is required"}}, "--ideal is required (see --help)");
  }

  try {
    Problem p = parse_problem(ring_text, ideal_text, split_vars(vars_text));
    if (limit > 0) {
      if (p.preset.empty()) {
        return fail(kExitUsage, {{"kind", "usage"}, {"message", "--limit needs a preset ideal"}}, "--limit needs a preset ideal");
      }
      // Each truncation k runs over V_max(rank,k) so the sweep never exhausts the rank.
      std::vector<Problem> steps;
      for (std::size_t k = 1; k <= limit; ++k) steps.push_back(make_preset(p.preset, std::max(p.preset_rank, k), k));
      std::vector<Outcome> outcomes(steps.size());
      std::vector<std::string> errors(steps.size());
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        for (std::size_t i = next++; i < steps.size(); i = next++) {
          try {
            outcomes[i] = solve(steps[i], verify);
          } catch (const std::exception& e) {
            errors[i] = e.what();
          }
        }
      };
      std::vector<std::thread> pool;
      for (std::size_t w = 1; w < std::min(jobs, steps.size()); ++w) pool.emplace_back(worker);
      worker();
      for (std::thread& t : pool) t.join();
      for (std::size_t i = 0; i < steps.size(); ++i) {
        if (!errors[i].empty()) {
          return fail(kExitCapability, {{"kind", "capability"}, {"reason", "sweep-step"}, {"message", errors[i]}}, errors[i]);
        }
      }
      bool disagree = false;
      json sweep = json::array(), counts = json::array();
      for (std::size_t i = 0; i < steps.size(); ++i) {
        const Outcome& o = outcomes[i];
        disagree = disagree || (verify && o.verdict.verdict == "disagree");
        counts.push_back(o.primes.size());
        json s{{"k", i + 1}, {"ring", steps[i].ring.str()}, {"count", o.primes.size()}, {"minimal_primes", primes_to_json(o.primes)}};
        if (verify) s["verified"] = verdict_json(o.verdict);
        sweep.push_back(std::move(s));
        if (!as_json) {
          out << "k=" << i + 1 << ": " << o.primes.size();
          if (verify) out << " (" << o.verdict.verdict << ")";
          out << "\n";
        }
      }
      if (as_json) {
        out << json{{"schema_version", kSchemaVersion}, {"preset", p.preset}, {"rank", p.preset_rank}, {"sweep", sweep}, {"counts", counts}}.dump(2) << "\n";
      } else {
        out << "counts:";
        for (const auto& c : counts) out << " " << c.get<std::size_t>();
        out << "\n";
      }
      return disagree ? kExitDisagree : kExitOk;
    }

    const Outcome o = solve(p, verify, drop_prime);
    if (as_json) {
      json j{{"schema_version", kSchemaVersion}, {"ring", p.ring.str()}, {"variables", p.vars}, {"ideal", rendered(p)},
             {"minimal_primes", primes_to_json(o.primes)}};
      if (trace) j["trace"] = trace_to_json(o.trace);
      if (verify) j["verified"] = verdict_json(o.verdict);
      out << j.dump(2) << "\n";
    } else {
      for (const PrimeRep& q : o.primes) out << q.str() << "\n";
      if (trace) {
        out << "trace:\n";
        print_trace(out, o.trace, 1);
      }
      if (verify) {
        out << "verified: " << o.verdict.verdict;
        if (!o.verdict.oracle.empty()) out << " (" << o.verdict.oracle << ")";
        if (!o.verdict.detail.empty()) out << ": " << o.verdict.detail;
        out << "\n";
      }
    }
    return verify && o.verdict.verdict == "disagree" ? kExitDisagree : kExitOk;
  } catch (const ParseError& e) {
    return fail(kExitParse,
                {{"kind", "parse"}, {"message", e.what()}, {"line", e.line()}, {"column", e.column()}, {"expected", e.expected()}},
                std::string("parse error: ") + e.what());
  } catch (const CapabilityError& e) {
    std::string text = std::string("capability error (") + e.reason() + "): " + e.what();
    for (const std::string& s : e.trace_path) text += "\n  at " + s;
    return fail(kExitCapability, {{"kind", "capability"}, {"reason", e.reason()}, {"message", e.what()}, {"trace_path", e.trace_path}}, text);
  } catch (const MathError& e) {
    return fail(kExitMath, {{"kind", "math"}, {"message", e.what()}}, std::string("error: ") + e.what());
  }
}

}  // namespace fgfc
