#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace toriclab {

enum class ErrorCode {
    not_a_prime_power,
    unsupported_field,
    inverse_of_zero,
    order_not_divisor,
    empty_input,
    negative_argument,
    not_unimodular,
    budget_exceeded,
    polytope_outside_box,
    field_too_small,
    parse_error,
    hypothesis_violated,
    dimension_mismatch,
    non_square,
    invalid_staircase,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised when a search would exceed its configured work limit. `required`
/// is the amount of work the request needs, in the unit of the budget.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t budget)
        : Error(ErrorCode::budget_exceeded,
                what + " (required " + std::to_string(required) + ", budget " +
                    std::to_string(budget) + ")"),
          required_(required),
          budget_(budget) {}

    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

}  // namespace toriclab
