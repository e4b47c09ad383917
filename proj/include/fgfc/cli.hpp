#pragma once

// Text front end: ring and ideal grammar, presets, output and exit codes.

#include "fgfc/ring.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace fgfc {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitCapability = 3,
  kExitDisagree = 4,
  kExitMath = 5,
};

/// `Q | Fp(p) | Z | Zmod(n) | Val(rank=r, base=Q|Fp(p))`.
BaseRing parse_ring(const std::string& text);

struct Problem {
  RingDescriptor ring;
  std::vector<std::string> vars;
  std::vector<RingElement> gens;
  std::string preset;  // "", "opex" or "glued"
  std::size_t preset_rank = 0;
  std::size_t preset_k = 0;
};

/// Variables default to those used in the ideal (x, or x1..xm), else x.
/// An empty ring text is allowed for presets (Val(rank=r, base=Q)).
Problem parse_problem(const std::string& ring_text, const std::string& ideal_text,
                      const std::vector<std::string>& vars = {});

/// Semicolon-separated generators over an existing ring.
std::vector<RingElement> parse_ideal(const RingDescriptor& ring, const std::string& text);

/// Build the preset ideal with truncation k over V_rank (base Q unless given).
Problem make_preset(const std::string& name, std::size_t rank, std::size_t k, const BaseRing* base = nullptr);

/// Whole command line; returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fgfc
