#pragma once

#include <stdexcept>
#include <string>

namespace geomgate {

// Bad input: the caller asked for something outside the model's domain.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SingularityError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class UnsupportedConventionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DegenerateGateError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ParameterRangeError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// The inputs were fine but the integration went wrong; usually fixed by a smaller step.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PathDivergenceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace geomgate
