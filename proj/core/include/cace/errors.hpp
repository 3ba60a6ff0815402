#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cace {

/// Base class for all domain errors. `name()` is the stable identifier that
/// the CLI prints and scripts match on; what() prepends it to the detail text.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& detail)
      : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define CACE_DEFINE_ERROR(NAME)                                             \
  class NAME : public Error {                                               \
   public:                                                                  \
    explicit NAME(const std::string& detail) : Error(#NAME, detail) {}      \
  }

// Code model
CACE_DEFINE_ERROR(DegenerateCodeword);   // fewer than omega distinct elements
CACE_DEFINE_ERROR(DuplicateCodeword);    // two generators expand to one subset
CACE_DEFINE_ERROR(GeneratorOutOfRange);  // x outside [1, n-1]
CACE_DEFINE_ERROR(MixedModulus);         // codewords disagree on the modulus
CACE_DEFINE_ERROR(InvalidCode);          // verification failed where validity is required
CACE_DEFINE_ERROR(MalformedDocument);    // unparseable or non-canonical document

// Construction guards
CACE_DEFINE_ERROR(CollapsedDelta);  // codeword with |delta| < 2(omega-1)
CACE_DEFINE_ERROR(GcdGuardViolated);
CACE_DEFINE_ERROR(MismatchedWeight);
CACE_DEFINE_ERROR(NotADivisor);
CACE_DEFINE_ERROR(NoImprovement);
CACE_DEFINE_ERROR(OrderingViolation);
CACE_DEFINE_ERROR(RangeViolation);
CACE_DEFINE_ERROR(WeightTooLarge);
CACE_DEFINE_ERROR(CongruenceViolated);
CACE_DEFINE_ERROR(ConditionViolated);
CACE_DEFINE_ERROR(DivisorViolation);

// Number theory preconditions
CACE_DEFINE_ERROR(NotPrime);
CACE_DEFINE_ERROR(NotPrimitiveRoot);

#undef CACE_DEFINE_ERROR

/// Search ran out of time. Carries the best lower bound found so far and the
/// witness generators realizing it.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& detail, std::uint64_t best_size,
                 std::vector<std::uint64_t> best_generators)
      : Error("BudgetExceeded", detail),
        best_size_(best_size),
        best_generators_(std::move(best_generators)) {}

  std::uint64_t best_size() const noexcept { return best_size_; }
  const std::vector<std::uint64_t>& best_generators() const noexcept {
    return best_generators_;
  }

 private:
  std::uint64_t best_size_;
  std::vector<std::uint64_t> best_generators_;
};

}  // namespace cace
