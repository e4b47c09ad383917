#include "fgfc/json_out.hpp"

#include <ostream>

namespace fgfc {

using nlohmann::json;

json trace_to_json(const TraceNode& n) {
  json j{{"kind", n.kind}, {"ring", n.ring}, {"ideal", n.ideal}, {"primes", n.primes}};
  if (!n.var.empty()) {
    j["var"] = n.var;
    j["level"] = n.level;
  }
  if (n.measure >= 0) j["measure"] = n.measure;
  if (!n.pivot.empty()) j["pivot"] = n.pivot;
  if (!n.split_case.empty()) j["case"] = n.split_case;
  if (!n.factors.empty()) j["factors"] = n.factors;
  json kids = json::array();
  for (const TraceNode& c : n.children) kids.push_back(trace_to_json(c));
  j["children"] = std::move(kids);
  return j;
}

json primes_to_json(std::vector<PrimeRep> primes) {
  sort_canonical(primes);
  json out = json::array();
  for (const PrimeRep& p : primes) out.push_back({{"base", p.base_label()}, {"polys", p.poly_strings()}, {"text", p.str()}});
  return out;
}

json report_to_json(const CompareReport& r) {
  json results = json::array();
  for (const TrialResult& t : r.results) {
    json j{{"index", t.index}, {"ideal", t.ideal}, {"engine", t.engine}, {"oracle", t.oracle},
           {"status", t.skipped ? "skipped" : t.agree ? "agree" : "disagree"}, {"violations", t.violations}};
    if (!t.note.empty()) j["note"] = t.note;
    if (!t.agree && !t.skipped) {
      json tr = json::array();
      for (const TraceNode& n : t.traces) tr.push_back(trace_to_json(n));
      j["traces"] = std::move(tr);
    }
    results.push_back(std::move(j));
  }
  json out{{"schema_version", kSchemaVersion}, {"oracle", r.oracle},   {"trials", r.trials},
           {"agreed", r.agreed},              {"skipped", r.skipped}, {"violations", r.violations},
           {"disagreements", r.disagreements}, {"seed", r.spec.seed},  {"results", std::move(results)}};
  if (!r.justification.empty()) out["justification"] = r.justification;
  return out;
}

void print_trace(std::ostream& out, const TraceNode& n, int indent) {
  out << std::string(static_cast<std::size_t>(indent) * 2, ' ') << n.kind;
  if (!n.split_case.empty()) out << "/" << n.split_case;
  if (!n.var.empty()) out << " [" << n.var << "]";
  if (n.measure >= 0) out << " d=" << n.measure;
  if (!n.pivot.empty()) out << " pivot " << n.pivot;
  out << " over " << n.ring << " : (";
  for (std::size_t i = 0; i < n.ideal.size(); ++i) out << (i ? ", " : "") << n.ideal[i];
  out << ") ->";
  for (const std::string& p : n.primes) out << " " << p;
  out << "\n";
  for (const TraceNode& c : n.children) print_trace(out, c, indent + 1);
}

void print_report(std::ostream& out, const CompareReport& r) {
  out << "oracle " << r.oracle << ": " << r.agreed << "/" << r.trials << " agree, " << r.skipped << " skipped, "
      << r.disagreements.size() << " disagree, " << r.violations << " invariant violations\n";
  if (!r.justification.empty()) out << "justification: " << r.justification << "\n";
  for (std::size_t i : r.disagreements) {
    const TrialResult& t = r.results[i];
    out << "trial " << i << ":";
    for (const std::string& g : t.ideal) out << " [" << g << "]";
    out << "\n  engine:";
    for (const std::string& p : t.engine) out << " " << p;
    out << "\n  oracle:";
    for (const std::string& p : t.oracle) out << " " << p;
    out << "\n  " << t.note << "\n";
    for (const TraceNode& n : t.traces) print_trace(out, n, 1);
  }
}

}  // namespace fgfc
