#pragma once

#include <stdexcept>
#include <string>

namespace qspace {

/// Library-level error for violated preconditions and malformed input.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qspace
