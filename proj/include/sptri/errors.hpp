#pragma once

#include <stdexcept>
#include <string>

namespace sptri
{

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Odd, nonpositive or otherwise unusable ambient dimension.
class InvalidDimension : public Error
{
public:
  using Error::Error;
};

/// Index outside the range of the indexed object.
class IndexError : public Error
{
public:
  using Error::Error;
};

/// Matrix or vector shape incompatible with the operation.
class ShapeError : public Error
{
public:
  using Error::Error;
};

/// Argument outside the mathematical domain of the operation.
class DomainError : public Error
{
public:
  using Error::Error;
};

class SingularMatrix : public Error
{
public:
  using Error::Error;
};

/// The chosen prime divides a denominator; retry with another prime.
class PrimeCollision : public Error
{
public:
  using Error::Error;
};

/// Malformed serialized input.
class ParseError : public Error
{
public:
  using Error::Error;
};

} // namespace sptri
