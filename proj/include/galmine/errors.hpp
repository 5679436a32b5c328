#pragma once

#include <stdexcept>
#include <string>

namespace galmine {

// Base for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user input: unknown identifiers, malformed files, shape mismatches.
struct InputError : Error {
    using Error::Error;
};

// Bad configuration: partial grouping maps, invalid thresholds.
struct ConfigError : Error {
    using Error::Error;
};

// An enumeration guard tripped (concept count past the limit).
struct ResourceLimitError : Error {
    using Error::Error;
};

// Broken internal invariant (e.g. duplicate concepts fed to build_order).
struct InternalError : Error {
    using Error::Error;
};

}  // namespace galmine
