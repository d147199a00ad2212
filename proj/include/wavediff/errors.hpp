#pragma once

#include <stdexcept>
#include <string>

namespace wavediff {

// Invalid caller input: dimension mismatches, malformed values, bad configs.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A spec was passed to radial_profile() while carrying nonzero plane parts.
class NotRadialError : public InputError {
public:
    explicit NotRadialError(const std::string& what) : InputError(what) {}
};

// Operation asked for outside its supported class, e.g. closed forms for
// mixed one-dimensional superpositions, or rendering in d >= 3.
class UnsupportedError : public std::runtime_error {
public:
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

// A numeric budget was exhausted or a quadrature / series failed to converge.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wavediff
