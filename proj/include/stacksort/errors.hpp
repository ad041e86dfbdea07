#pragma once

#include <stdexcept>

namespace stacksort {

// Thrown when an exhaustive operation exceeds its documented size guard
// (maps to CLI exit code 3).
class ResourceGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown when a 128-bit count would overflow (also CLI exit code 3).
class CountOverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

} // namespace stacksort
