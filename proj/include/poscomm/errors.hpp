#pragma once

#include <stdexcept>

namespace poscomm {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};
struct NotSquare : Error {
  using Error::Error;
};
struct NotDisjoint : Error {
  using Error::Error;
};
struct NotPositive : Error {
  using Error::Error;
};
struct ZeroVector : Error {
  using Error::Error;
};
struct NotInAlgebra : Error {
  using Error::Error;
};
struct NotUnitized : Error {
  using Error::Error;
};
struct InsufficientWeights : Error {
  using Error::Error;
};
struct TooLarge : Error {
  using Error::Error;
};
struct InvalidConfig : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace poscomm
