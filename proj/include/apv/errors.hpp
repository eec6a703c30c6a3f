#pragma once

#include <stdexcept>
#include <string>

namespace apv {

// Raised for malformed or inconsistent input data (files, configs, rasters).
// The CLI maps it to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a computation cannot proceed on otherwise valid input.
// The CLI maps it to exit code 3.
class ComputationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace apv
