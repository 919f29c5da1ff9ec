#pragma once

#include <stdexcept>
#include <string>

namespace unary {

// Root of every error raised by the library. Each subclass names one
// precondition or format failure so callers can react selectively.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidBitstring : public Error { using Error::Error; };
class MalformedCodeword : public Error { using Error::Error; };
class NotACodeword : public Error { using Error::Error; };
class RangeError : public Error { using Error::Error; };
class OutOfRange : public Error { using Error::Error; };
class LengthMismatch : public Error { using Error::Error; };
class InvalidDistribution : public Error { using Error::Error; };
class Infeasible : public Error { using Error::Error; };
class EmptyTrainingSet : public Error { using Error::Error; };

}  // namespace unary
