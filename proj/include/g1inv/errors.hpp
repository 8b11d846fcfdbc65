#pragma once

#include <stdexcept>
#include <string>

namespace g1inv {

/// Malformed or out-of-contract input (wrong degree, bad coefficients,
/// a point that is not on the curve, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The model has vanishing discriminant where a smooth model is required.
class SingularModel : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An identity that must hold exactly has failed. Always a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace g1inv
