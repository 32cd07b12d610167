#pragma once

#include <stdexcept>
#include <string>

namespace wagon {

/// Malformed arguments or input data (bad vertex ids, unreadable files, ...).
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The request is well-formed but exceeds a documented size limit of an
/// exact procedure; the message names the limit.
struct capability_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace wagon
