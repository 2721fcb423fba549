#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grouptest {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A model parameter violates its admissible range.
class ParameterError : public Error {
public:
    using Error::Error;
};

// Calibration impossible: p = q = 0 with positive prevalence.
class DegenerateModel : public ParameterError {
public:
    using ParameterError::ParameterError;
};

// Calibration yields alpha > 1; prevalence too high for this network.
class AlphaOutOfRange : public ParameterError {
public:
    using ParameterError::ParameterError;
};

// Requested closed-form distribution outside its exact divisibility regime.
class DivisibilityError : public Error {
public:
    using Error::Error;
};

// Group-size search range is empty.
class EmptyRange : public Error {
public:
    using Error::Error;
};

// Malformed input row; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_ = 0;
};

// Input stream held no usable rows.
class EmptyInput : public Error {
public:
    using Error::Error;
};

// Partition has no pairs of the requested kind (e.g. single community).
class DegeneratePartition : public Error {
public:
    using Error::Error;
};

}  // namespace grouptest
