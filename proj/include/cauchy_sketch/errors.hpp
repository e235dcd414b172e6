#pragma once

#include <stdexcept>
#include <string>

namespace cauchy_sketch {

/// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two operands whose dimensions must agree do not.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A bound was requested outside the scale regime where it is proven.
class RegimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Planner parameters violate the embedding hypotheses (c >= 3, N^-c <= eps <= 1/4).
class InfeasibleParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical procedure exhausted its iteration or panel budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or unreadable input/output.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
void require_finite(double x, const char* what);
}  // namespace detail

}  // namespace cauchy_sketch
