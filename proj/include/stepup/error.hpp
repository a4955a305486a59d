#pragma once

#include <stdexcept>
#include <string>

namespace stepup {

// Base class for every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed files, bad flags, out-of-range arguments: anything the caller
// can fix by changing its input. The CLI maps these to exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

} // namespace stepup
