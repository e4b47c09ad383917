// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fail.
#include "helpers.hpp"

#include "fgfc/cli.hpp"
#include "fgfc/constructions.hpp"
#include "fgfc/engine.hpp"
#include "fgfc/verify.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace fgfc;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Running totals for the trace (5) and soundness (6) criteria.
struct Tally {
  std::size_t traces = 0, trace_bad = 0, outputs = 0, sound_bad = 0;
  std::vector<std::string> notes;

  void trace(const TraceNode& t, std::size_t nvars) {
    ++traces;
    const TraceReport r = check_trace(t, nvars);
    if (!r.ok) {
      ++trace_bad;
      notes.push_back("trace: " + (r.violations.empty() ? std::string("?") : r.violations[0]));
    }
  }
  void output(const std::vector<RingElement>& gens, const std::vector<PrimeRep>& ps) {
    ++outputs;
    const auto v = check_prime_set(gens, ps);
    if (!v.empty()) {
      ++sound_bad;
      notes.push_back(v[0]);
    }
  }
  void report(const CompareReport& r) {
    for (const TrialResult& t : r.results) {
      traces += t.traces.size();
      if (!t.skipped || !t.engine.empty()) ++outputs;
      for (const std::string& v : t.violations) {
        if (v.rfind("trace: ", 0) == 0) ++trace_bad;
        else ++sound_bad;
        notes.push_back(v);
      }
    }
  }
};

Tally tally;
int failures = 0;

void verdict(int n, const std::string& name, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << "criterion " << n << " (" << name << "): " << (ok ? "PASS" : "FAIL") << "  " << detail << std::endl;
}

std::string fmt_secs(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s << " s";
  return o.str();
}

std::vector<PrimeRep> solve(const RingDescriptor& r, const std::vector<RingElement>& gens) {
  TraceNode t;
  auto ps = min_primes_multi(r, gens, &t);
  tally.trace(t, r.space().nx());
  tally.output(gens, ps);
  return ps;
}

bool has_prime(const std::vector<PrimeRep>& ps, const PrimeRep& q) {
  for (const PrimeRep& p : ps) {
    if (prime_equal(p, q)) return true;
  }
  return false;
}

void criterion1() {
  const auto t0 = Clock::now();
  std::size_t agreed = 0, total = 0, skipped = 0;
  for (const BaseRing& b : {BaseRing::prime_field(5), BaseRing::rational()}) {
    const CompareReport r = corpus_compare({CorpusSpec::Kind::FieldUnivariate, b, 4, 6, 10, 20240601}, 200);
    tally.report(r);
    agreed += r.agreed;
    skipped += r.skipped;
    total += r.trials;
  }
  const double s = seconds_since(t0);
  verdict(1, "field-oracle equivalence", agreed == 400 && total == 400 && s < 60,
          std::to_string(agreed) + "/" + std::to_string(total) + " agree, " + std::to_string(skipped) + " skipped, " +
              fmt_secs(s) + " (limit 60 s)");
}

void criterion2() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  for (std::size_t n = 1; n <= 3; ++n) {
    RingDescriptor v(BaseRing::valuation(n, Domain{}), Space{{"x"}, n});
    for (std::size_t k = 1; k <= n; ++k) {
      const GenList f = op_family(v, k);
      const auto ps = solve(v, elements_of(f));
      std::vector<PrimeRep> expected;
      for (std::size_t i = 0; i < k; ++i) {
        expected.push_back(PrimeRep(v.base(), v.space(), BasePrime::chain_index(i), {0})
                               .with_poly(0, v.t(i + 1) * v.variable(0) - v.one()));
      }
      expected.push_back(PrimeRep(v.base(), v.space(), BasePrime::chain_index(k), {0}));
      const bool match = ps.size() == k + 1 && same_prime_sets(ps, expected);
      const bool oracle = same_prime_sets(ps, valuation_shape_oracle(f));
      if (!match || !oracle) {
        ok = false;
        detail += " [n=" + std::to_string(n) + " k=" + std::to_string(k) + (match ? "" : " shape") +
                  (oracle ? "" : " oracle") + "]";
      }
    }
  }
  const double s = seconds_since(t0);
  verdict(2, "truncated family fixtures", ok && s < 30,
          "6 fixtures, count k+1 and oracle match" + (ok ? std::string() : " failed:" + detail) + ", " + fmt_secs(s) +
              " (limit 30 s)");
}

}  // namespace

namespace {

void criterion3() {
  RingDescriptor v(BaseRing::valuation(3, Domain{}), Space{{"x", "y"}, 3});
  const RingElement y = v.variable(1);
  std::vector<std::size_t> counts;
  bool ok = true;
  std::string detail, ys;
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto ik = elements_of(op_family(v, k));
    const auto min_i = solve(v, ik);
    const auto ps = solve(v, glued_algebra(v, ik, 1));
    counts.push_back(ps.size());
    std::size_t found = 0;
    for (const PrimeRep& q : min_i) found += has_prime(ps, q.with_poly(1, y - v.one())) ? 1 : 0;
    std::size_t y_minus_one = 0;
    for (const PrimeRep& p : ps) y_minus_one += p.contains(y - v.one()) ? 1 : 0;
    if (found != min_i.size() || y_minus_one != min_i.size()) {
      ok = false;
      detail += " [k=" + std::to_string(k) + ": " + std::to_string(found) + "/" + std::to_string(min_i.size()) + "]";
    }
    const PrimeRep yprime = PrimeRep(v.base(), v.space(), BasePrime::chain_index(0), {0}).with_poly(1, y);
    ys += std::string(ys.empty() ? "" : ",") + (has_prime(ps, yprime) ? "yes" : "no");
  }
  bool increasing = true;
  for (std::size_t i = 1; i < counts.size(); ++i) increasing = increasing && counts[i] > counts[i - 1];
  std::string seq;
  for (std::size_t c : counts) seq += (seq.empty() ? "" : " ") + std::to_string(c);
  verdict(3, "glued-algebra growth", ok && increasing,
          "counts " + seq + (increasing ? " strictly increasing" : " NOT increasing") +
              ", one (Q; y - 1) prime per Q in Min(I_k)" + detail + "; (y)S minimal for k=1..3: " + ys +
              " (reported, not asserted)");
}

void criterion4() {
  std::size_t agreed = 0, total = 0;
  std::string parts;
  for (const BaseRing& b : {BaseRing::integers(), BaseRing::prime_field(5)}) {
    const CompareReport r = corpus_compare({CorpusSpec::Kind::Presentation, b, 4, 6, 10, 20240604}, 100);
    tally.report(r);
    agreed += r.agreed;
    total += r.trials;
    parts += " " + b.str() + " " + std::to_string(r.agreed) + "/" + std::to_string(r.trials);
  }
  verdict(4, "Fitting-ideal reduction", agreed == total && total == 200,
          std::to_string(agreed) + "/" + std::to_string(total) + " agree:" + parts);
}

void criterion7() {
  std::size_t agreed = 0, total = 0;
  std::string parts;
  for (const BaseRing& b : {BaseRing::integers(), BaseRing::valuation(2, Domain{})}) {
    const CompareReport r = corpus_compare({CorpusSpec::Kind::Localization, b, 3, 3, 10, 20240607}, 100);
    tally.report(r);
    agreed += r.agreed;
    total += r.trials;
    parts += " " + b.str() + " " + std::to_string(r.agreed) + "/" + std::to_string(r.trials);
  }
  verdict(7, "localization consistency", agreed == total && total == 200,
          std::to_string(agreed) + "/" + std::to_string(total) + " agree:" + parts);
}

void criterion8() {
  const auto t0 = Clock::now();
  using S = std::vector<std::string>;
  RingDescriptor q(BaseRing::rational(), Space{{"x", "y"}, 0});
  const RingElement x = q.variable(0), y = q.variable(1);
  RingDescriptor z(BaseRing::integers(), Space{{"x", "y", "z"}, 0});
  std::size_t fixed = 0;
  fixed += render_primes(solve(q, {x * y})) == S{"(0; x)", "(0; y)"};
  fixed += render_primes(solve(q, {x * x + y * y, x})) == S{"(0; x, y)"};
  fixed += render_primes(solve(z, {z.from_int(6)})) == S{"(2)", "(3)"};
  const CompareReport r = corpus_compare({CorpusSpec::Kind::Bivariate, BaseRing::prime_field(5), 3, 2, 5, 20240608}, 25);
  tally.report(r);
  const double s = seconds_since(t0);
  verdict(8, "multivariate smoke suite", fixed == 3 && r.agreed == 25 && s < 120,
          std::to_string(fixed) + "/3 examples, " + std::to_string(r.agreed) + "/25 bivariate F_5 agree (" +
              std::to_string(r.skipped) + " skipped), " + fmt_secs(s) + " (limit 120 s)");
}

}  // namespace

namespace {

std::string run_cli_capture(std::vector<std::string> args, int& rc) {
  args.insert(args.begin(), "fgfc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  rc = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) return "<missing " + path + ">";
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void criterion9() {
  // Goldens: every preset instance, text and JSON.
  std::vector<std::pair<std::string, std::vector<std::string>>> cases;
  for (int n = 1; n <= 3; ++n) {
    for (int k = 1; k <= n; ++k) {
      cases.push_back({"opex_" + std::to_string(n) + "_" + std::to_string(k),
                       {"--ideal", "preset:opex(" + std::to_string(n) + "," + std::to_string(k) + ")"}});
    }
  }
  for (int k = 1; k <= 3; ++k) cases.push_back({"glued_3_" + std::to_string(k), {"--ideal", "preset:glued(3," + std::to_string(k) + ")"}});
  cases.push_back({"opex_sweep_4", {"--ideal", "preset:opex(1,1)", "--limit", "4"}});
  cases.push_back({"glued_sweep_3", {"--ideal", "preset:glued(3,1)", "--limit", "3"}});
  std::size_t golden_ok = 0, golden_total = 0;
  std::string bad;
  for (const auto& [name, args] : cases) {
    for (const char* ext : {"txt", "json"}) {
      auto a = args;
      if (std::string(ext) == "json") {
        a.push_back("--format");
        a.push_back("json");
      }
      int rc = 0;
      const std::string got = run_cli_capture(a, rc);
      ++golden_total;
      if (rc == 0 && got == slurp(std::string(FGFC_GOLDEN_DIR) + "/" + name + "." + ext)) ++golden_ok;
      else bad += " " + name + "." + ext;
    }
  }

  // Parser round trip: render, parse back, compare element and rendering.
  std::mt19937_64 g(20240609);
  std::size_t rt_ok = 0, rt_total = 0;
  for (const char* rt : {"Q", "Fp(7)", "Z", "Zmod(12)", "Val(rank=2, base=Q)"}) {
    const Problem p = parse_problem(rt, "x");
    for (int i = 0; i < 100; ++i) {
      const RingElement a = rt[0] == 'V' ? test::random_valuation_element(p.ring, g) : test::random_poly(p.ring, g);
      const std::string s = p.ring.render(a);
      ++rt_total;
      try {
        const auto back = parse_ideal(p.ring, s);
        if (back.size() == 1 && back[0] == a && p.ring.render(back[0]) == s) ++rt_ok;
        else bad += " roundtrip[" + s + "]";
      } catch (const std::exception& e) {
        bad += " roundtrip[" + s + ": " + e.what() + "]";
      }
    }
  }

  // Exit statuses.
  const std::vector<std::pair<std::vector<std::string>, int>> table{
      {{"--ring", "Z", "--ideal", "6"}, kExitOk},
      {{"--ring", "Z", "--ideal", "1"}, kExitOk},
      {{"--ideal", "preset:opex(2,2)", "--verify"}, kExitOk},
      {{"--bogus"}, kExitUsage},
      {{"--ring", "Z"}, kExitUsage},
      {{"--ring", "Fp(4)", "--ideal", "x"}, kExitParse},
      {{"--ring", "Z", "--ideal", "2*x +"}, kExitParse},
      {{"--ring", "Z", "--ideal", "x/2"}, kExitParse},
      {{"--ring", "Q", "--ideal", "x^2 + 1; y^2 - 2", "--vars", "x,y"}, kExitCapability},
      {{"--ring", "Q", "--ideal", "x^2 - 1", "--verify", "--inject-drop-prime"}, kExitDisagree},
  };
  std::size_t exit_ok = 0;
  for (const auto& [args, want] : table) {
    int rc = -1;
    run_cli_capture(args, rc);
    if (rc == want) ++exit_ok;
    else bad += " exit[" + args.back() + " -> " + std::to_string(rc) + "]";
  }
  verdict(9, "CLI contract",
          golden_ok == golden_total && rt_ok == 500 && rt_total == 500 && exit_ok == table.size(),
          "goldens " + std::to_string(golden_ok) + "/" + std::to_string(golden_total) + ", round trip " +
              std::to_string(rt_ok) + "/" + std::to_string(rt_total) + ", exit table " + std::to_string(exit_ok) + "/" +
              std::to_string(table.size()) + (bad.empty() ? "" : ";" + bad.substr(0, 400)));
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion7();
  criterion8();
  verdict(5, "termination and measure monotonicity", tally.traces > 0 && tally.trace_bad == 0,
          std::to_string(tally.traces - tally.trace_bad) + "/" + std::to_string(tally.traces) + " traces clean");
  verdict(6, "soundness and minimality", tally.outputs > 0 && tally.sound_bad == 0,
          std::to_string(tally.sound_bad) + " violations over " + std::to_string(tally.outputs) + " outputs");
  criterion9();
  for (std::size_t i = 0; i < tally.notes.size() && i < 10; ++i) std::cout << "  note: " << tally.notes[i] << "\n";
  std::cout << "total " << fmt_secs(seconds_since(t0)) << ", " << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
