// Error taxonomy shared by every module of the decoherence-rate library.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace dipdec {

// Invalid or inconsistent scenario input (config files, CLI arguments,
// channel requirements).  Maps to process exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A closed-form approximation was requested outside its validity regime.
// Maps to process exit code 3.
class RegimeError : public std::runtime_error {
public:
    explicit RegimeError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical evaluation failed (non-convergent quadrature, non-finite
// integrand).  Maps to process exit code 4.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Dimension-vector mismatch in unit-checked arithmetic.  A programming
// error, not an input error, hence logic_error.
class DimensionError : public std::logic_error {
public:
    explicit DimensionError(const std::string& what) : std::logic_error(what) {}
};

// Operation undefined for the given variant (e.g. pointwise density of a
// delta distribution).
class UnsupportedOperationError : public std::logic_error {
public:
    explicit UnsupportedOperationError(const std::string& what)
        : std::logic_error(what) {}
};

}  // namespace dipdec
