#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace branchkit {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotAPartition : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a query falls outside the region where a branching formula is
/// known to hold. Carries the pair identifier and the failing inequality.
class StableRangeViolation : public std::runtime_error {
 public:
  StableRangeViolation(std::string rule, std::string inequality)
      : std::runtime_error(rule + ": " + inequality),
        rule_(std::move(rule)),
        inequality_(std::move(inequality)) {}

  const std::string& rule() const noexcept { return rule_; }
  const std::string& inequality() const noexcept { return inequality_; }

 private:
  std::string rule_;
  std::string inequality_;
};

class InvalidLabel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

class NotDominant : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotACharacter : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OutOfSafeRegime : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownPair : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Multiplicities are exact non-negative counts. Arithmetic on them goes
/// through the checked helpers below; wraparound is reported, never silent.
using Multiplicity = std::uint64_t;

inline Multiplicity checked_add(Multiplicity a, Multiplicity b) {
  Multiplicity r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("multiplicity overflow in addition");
  return r;
}

inline Multiplicity checked_mul(Multiplicity a, Multiplicity b) {
  Multiplicity r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("multiplicity overflow in multiplication");
  return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

}  // namespace branchkit
