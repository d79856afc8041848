#include "toriclab/error.hpp"

namespace toriclab {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::not_a_prime_power: return "not-a-prime-power";
        case ErrorCode::unsupported_field: return "unsupported-field";
        case ErrorCode::inverse_of_zero: return "inverse-of-zero";
        case ErrorCode::order_not_divisor: return "order-not-divisor";
        case ErrorCode::empty_input: return "empty-input";
        case ErrorCode::negative_argument: return "negative-argument";
        case ErrorCode::not_unimodular: return "not-unimodular";
        case ErrorCode::budget_exceeded: return "budget-exceeded";
        case ErrorCode::polytope_outside_box: return "polytope-outside-box";
        case ErrorCode::field_too_small: return "field-too-small";
        case ErrorCode::parse_error: return "parse-error";
        case ErrorCode::hypothesis_violated: return "hypothesis-violated";
        case ErrorCode::dimension_mismatch: return "dimension-mismatch";
        case ErrorCode::non_square: return "non-square";
        case ErrorCode::invalid_staircase: return "invalid-staircase";
    }
    return "unknown";
}

}  // namespace toriclab
