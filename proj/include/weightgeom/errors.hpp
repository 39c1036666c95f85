#ifndef WEIGHTGEOM_ERRORS_HPP
#define WEIGHTGEOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wg {

// Bad input: wrong family/rank, index out of range, non-dominant weight...
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computation we decline to run (too expensive, or not meaningful for the
// given geometry). The CLI maps this to exit code 3.
class ComputationRefused : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two independent computations disagree, or a structural invariant broke.
// The CLI maps this to exit code 1.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// No incidence rule is known for the requested pair of types.
class NoRuleError : public ComputationRefused {
public:
    using ComputationRefused::ComputationRefused;
};

// decompose() hit a negative multiplicity.
class NotACharacter : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace wg

#endif
