#pragma once

#include <stdexcept>
#include <string>

namespace qframe {

class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error
{
  public:
    using Error::Error;
};

class DivisionByZero : public Error
{
  public:
    using Error::Error;
};

class NotHermitian : public Error
{
  public:
    using Error::Error;
};

class NotPositive : public Error
{
  public:
    using Error::Error;
};

class NotOrthonormal : public Error
{
  public:
    using Error::Error;
};

class RankDeficient : public Error
{
  public:
    using Error::Error;
};

class NumericalFailure : public Error
{
  public:
    using Error::Error;
};

/// Raised when a right-hand side lies outside the range of the operator.
class InconsistentSystem : public Error
{
  public:
    InconsistentSystem(const std::string &what, double residual)
        : Error(what), residual_(residual)
    {
    }

    double residual() const noexcept { return residual_; }

  private:
    double residual_;
};

/// q is not a representation of the given vector w.r.t. the frame.
class NotARepresentation : public Error
{
  public:
    using Error::Error;
};

class ParseError : public Error
{
  public:
    using Error::Error;
};

} // namespace qframe
