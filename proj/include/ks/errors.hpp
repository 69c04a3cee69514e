#pragma once

#include <stdexcept>
#include <string>

namespace ks {

/// Raised for malformed configs and invalid scenario descriptions.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a running simulation hits a numerical failure
/// (instability, non-finite values, mass drift beyond tolerance).
struct run_abort : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ks
