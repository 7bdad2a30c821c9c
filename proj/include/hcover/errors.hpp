#pragma once

#include <stdexcept>

namespace hcover {

// Malformed input: bad indices, loops, negative weights, syntax errors.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A computation would exceed a configured resource cap.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Solver breakdown: iteration cap hit, certified bound violated.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hcover
