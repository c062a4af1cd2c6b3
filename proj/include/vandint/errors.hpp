#ifndef VANDINT_ERRORS_HPP
#define VANDINT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vandint {

/// Input that fails a precondition: bad ranges, unparsable text, repeated points.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Function evaluated at or across its pole.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A request above the configured symbolic size cap.
class SymbolicLimitExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Cubature grid larger than the evaluation budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace vandint

#endif
