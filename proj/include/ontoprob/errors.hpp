#pragma once

#include <stdexcept>
#include <string>

namespace ontoprob {

// Conditioning event has zero weight: the conditional is not defined.
class ConditioningOnNull : public std::domain_error {
 public:
  explicit ConditioningOnNull(const std::string& what) : std::domain_error(what) {}
};

// Relative probability has an empty reference class (no weight on outcomes
// where every mentioned proposition is observable).
class UndefinedRelativeProbability : public std::domain_error {
 public:
  explicit UndefinedRelativeProbability(const std::string& what) : std::domain_error(what) {}
};

// An event mentions a proposition index outside the joint's range.
class UnknownProposition : public std::domain_error {
 public:
  explicit UnknownProposition(const std::string& what) : std::domain_error(what) {}
};

// An empirical estimate was requested from a sample with no usable trials.
class InsufficientData : public std::runtime_error {
 public:
  explicit InsufficientData(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ontoprob
