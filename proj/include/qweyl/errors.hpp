#pragma once

#include <stdexcept>
#include <string>

namespace qweyl {

/// Base class of every domain error raised by the library.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public AlgebraError {
 public:
  DivisionByZero() : AlgebraError("division by zero in Q(q)") {}
};

class NonInvertibleNegativePower : public AlgebraError {
 public:
  explicit NonInvertibleNegativePower(const std::string& gen)
      : AlgebraError("negative power of non-invertible generator " + gen) {}
};

class FuelExhausted : public AlgebraError {
 public:
  FuelExhausted() : AlgebraError("rewriting fuel exhausted (non-terminating rule table?)") {}
};

class UnderivableInverseRule : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class InvalidPresentation : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class NotQCommuting : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class BothParamsZero : public AlgebraError {
 public:
  BothParamsZero() : AlgebraError("alpha and beta cannot both be zero") {}
};

class BetaZero : public AlgebraError {
 public:
  BetaZero() : AlgebraError("beta must be nonzero for the localization at e4") {}
};

class NotADerivation : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class ObstructedShape : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Raised by innerization when the recovered derivation is not inner in B.
class NotInner : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

}  // namespace qweyl
