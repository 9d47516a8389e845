#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace liebasis {

// All coefficients in this library are exact integers.  Pairing values and
// basis-change coefficients stay tiny at desk scale, but nothing in the
// interfaces bounds them, so we use arbitrary precision throughout.
using Int = boost::multiprecision::cpp_int;

// Malformed user-supplied data: unknown letters, words outside the requested
// basis set, unbalanced tree syntax, invalid graph files.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Syntax errors while reading trees, graphs or fixture files.
class ParseError : public InputError {
public:
    explicit ParseError(const std::string& what) : InputError(what) {}
};

}  // namespace liebasis
