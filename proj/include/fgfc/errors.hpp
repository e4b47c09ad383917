#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fgfc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation needs an oracle (factorization, membership, equality) that
/// is not available for the ring or residue field at hand. `reason` is a
/// short machine-readable tag.
class CapabilityError : public Error {
 public:
  CapabilityError(std::string reason, const std::string& what)
      : Error(what), reason_(std::move(reason)) {}
  const std::string& reason() const { return reason_; }

  /// Path of trace labels from the root call to the failing node.
  std::vector<std::string> trace_path;

 private:
  std::string reason_;
};

/// Precondition violations of algebraic operations.
class MathError : public Error {
 public:
  enum class Code {
    ZeroPolynomial,
    NotMonic,
    NotMember,
    DegenerateLocalization,
    NoPrimeContains,
    ZeroElement,
    RankExhausted,
    Shape,
    NotPrime,
    ZeroRing,
  };
  MathError(Code code, const std::string& what) : Error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column, std::vector<std::string> expected)
      : Error(what), line_(line), column_(column), expected_(std::move(expected)) {}
  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

}  // namespace fgfc
