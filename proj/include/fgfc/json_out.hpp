#pragma once

#include "fgfc/verify.hpp"

#include <json.hpp>

#include <iosfwd>

namespace fgfc {

inline constexpr const char* kSchemaVersion = "1.0";

nlohmann::json trace_to_json(const TraceNode& n);
nlohmann::json primes_to_json(std::vector<PrimeRep> primes);
nlohmann::json report_to_json(const CompareReport& r);

/// Indented tree, one node per line.
void print_trace(std::ostream& out, const TraceNode& n, int indent = 0);
void print_report(std::ostream& out, const CompareReport& r);

}  // namespace fgfc
