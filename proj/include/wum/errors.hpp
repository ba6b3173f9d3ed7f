#pragma once

#include <stdexcept>
#include <string>

namespace wum {

// Raised when input data or derived state makes the requested operation
// impossible (malformed files, degenerate datasets, exhausted budgets).
// Distinct from std::invalid_argument, which flags caller mistakes such as
// out-of-range parameters.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wum
