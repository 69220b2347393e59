#pragma once

#include <stdexcept>
#include <string>

namespace aqb {

// Base class for everything thrown by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands live on different bases / incompatible dimensions.
class dimension_error : public error {
public:
    explicit dimension_error(const std::string& msg) : error(msg) {}
};

// A numeric integrity check failed (non-Hermitian input, complex expectation,
// negative variance beyond tolerance, eigensolver residual, norm drift, ...).
class numeric_error : public error {
public:
    explicit numeric_error(const std::string& msg) : error(msg) {}
};

// A mathematical property the library promises was violated by the data
// (chain inequality, projector gap bound, ...). CLI maps this to exit code 3.
class property_violation : public error {
public:
    explicit property_violation(const std::string& msg) : error(msg) {}
};

// Malformed textual input (edge lists, schedule specs, JSON configs).
class parse_error : public error {
public:
    explicit parse_error(const std::string& msg) : error(msg) {}
};

// Invalid argument values (out-of-range parameters, size-cap violations).
class invalid_argument : public error {
public:
    explicit invalid_argument(const std::string& msg) : error(msg) {}
};

} // namespace aqb
