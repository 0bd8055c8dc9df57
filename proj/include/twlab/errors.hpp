#pragma once

#include <stdexcept>
#include <string>

namespace tw {

// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad call arguments (wrong sizes, invalid enum values, malformed ranges).
class invalid_argument_error : public error {
public:
    using error::error;
};

// Evaluation requested outside a function's supported domain.
class domain_error : public error {
public:
    using error::error;
};

// Root bracketing failed (no sign change on the given interval).
class bracket_error : public error {
public:
    using error::error;
};

// ODE step size underflowed; carries the last abscissa reached.
class divergence_error : public error {
public:
    divergence_error(const std::string& msg, double last_t)
        : error(msg), last_abscissa(last_t) {}
    double last_abscissa;
};

// Iterative solver failed to converge.
class convergence_error : public error {
public:
    using error::error;
};

// Discretization too coarse for the requested evaluation.
class resolution_error : public error {
public:
    using error::error;
};

// Malformed input data (files, serialized sample sets).
class data_error : public error {
public:
    using error::error;
};

}  // namespace tw
