#pragma once

#include <stdexcept>
#include <string>

namespace specsing {

// Bad user input or a parameter outside the supported domain.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Gamma-function pole or a map evaluated at a singular point.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A series or quadrature did not reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace specsing
