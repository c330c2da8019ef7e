#pragma once

#include <stdexcept>

namespace sievebound {

// Argument outside the range where an explicit sieve-function form is valid.
struct RangeUnavailable : std::domain_error {
    using std::domain_error::domain_error;
};

// The crossover quadratic has no root in [0, 1/2).
struct NoRootInRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integration limits violate the integrand's domain.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// No admissible beta0 satisfies both the domain and the b0/k > 1/(r+1)
// constraint.
struct Infeasible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Modulus has a square factor; densities are only defined on squarefree d.
struct NotSquarefree : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A Mertens-product factor is <= 0: the polynomial has a fixed prime divisor.
struct ConditionFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Prime enumeration interval wider than the supported segment budget.
struct RangeTooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Factoring budget exhausted; caller may retry with a wider budget.
struct Unfactored : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Weighted-sum parameters violate 0 < alpha < beta < 1/k or eta > 0.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Value exceeds the 128-bit working range.
struct ValueTooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Polynomial text does not match the accepted grammar.
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace sievebound
