#pragma once

#include <stdexcept>

namespace sandpiles {

// Base type for everything this library throws on bad input. Messages name
// the violated rule; the CLI maps any Error to exit code 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SelfLoopError : Error { using Error::Error; };
struct OutOfRangeError : Error { using Error::Error; };
struct TooSmallError : Error { using Error::Error; };
struct NotSquareError : Error { using Error::Error; };
struct DisconnectedError : Error { using Error::Error; };
struct TooLargeError : Error { using Error::Error; };
struct InvalidSpecError : Error { using Error::Error; };
struct EmptyArgsError : Error { using Error::Error; };
struct ArityMismatchError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace sandpiles
