/*
  errors.hpp — exception types shared by all modules.

  Every error condition raised by the library is a named subclass of
  kac::Error so callers can either catch the base or a specific condition.
*/
#pragma once

#include <stdexcept>
#include <string>

namespace kac {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidInput final : Error { using Error::Error; };
struct DivisionByZero final : Error { using Error::Error; };
struct NotAPolynomial final : Error { using Error::Error; };
struct NonIntegerCoefficients final : Error { using Error::Error; };
struct NonPolynomialCoefficient final : Error { using Error::Error; };
struct NotAPartition final : Error { using Error::Error; };
struct SizeMismatch final : Error { using Error::Error; };
struct TooLarge final : Error { using Error::Error; };
struct Disconnected final : Error { using Error::Error; };
struct ZeroVector final : Error { using Error::Error; };
struct InternalNonTermination final : Error { using Error::Error; };
struct HypothesisViolated final : Error { using Error::Error; };
struct RankDeficient final : Error { using Error::Error; };
struct NotEchelon final : Error { using Error::Error; };
struct BadPrime final : Error { using Error::Error; };

}  // namespace kac
