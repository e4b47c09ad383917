#pragma once

// Engine-versus-oracle comparison over seeded corpora.

#include "fgfc/engine.hpp"
#include "fgfc/oracle.hpp"

#include <string>
#include <vector>

namespace fgfc {

struct TrialResult {
  std::size_t index = 0;
  std::vector<std::string> ideal;
  bool skipped = false;  // oracle unavailable
  std::string note;      // skip reason or disagreement detail
  bool agree = false;
  std::vector<std::string> engine;
  std::vector<std::string> oracle;
  std::vector<TraceNode> traces;
  std::vector<std::string> violations;  // trace and soundness checks
  double millis = 0;
};

struct CompareReport {
  CorpusSpec spec;
  std::size_t trials = 0;
  std::size_t agreed = 0;
  std::size_t skipped = 0;
  std::size_t violations = 0;
  std::string oracle;         // which oracle ran
  std::string justification;  // theory note for shape-restricted oracles
  std::vector<TrialResult> results;  // sorted by index
  std::vector<std::size_t> disagreements;
};

/// Soundness (every prime contains the ideal) and minimality (pairwise
/// incomparable). Returns one message per violation.
std::vector<std::string> check_prime_set(const std::vector<RingElement>& ideal, const std::vector<PrimeRep>& primes);

/// Runs `trials` seeded instances; `jobs` > 1 spreads trials over threads.
CompareReport corpus_compare(const CorpusSpec& spec, std::size_t trials, std::size_t jobs = 1);

std::vector<std::string> render_primes(std::vector<PrimeRep> primes);

}  // namespace fgfc
