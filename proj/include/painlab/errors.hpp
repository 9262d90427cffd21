#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace painlab {

using cplx = std::complex<double>;

// Two families: bad input (caller can fix the request) and numerical
// failure (the request was valid but the computation could not finish).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public InputError {
 public:
  using InputError::InputError;
};

class SingularSpectralParam : public InputError {
 public:
  SingularSpectralParam() : InputError("spectral parameter lambda = 0 with c != 0") {}
};

class DegenerateLambda : public InputError {
 public:
  DegenerateLambda() : InputError("pole lattice degenerates at lambda = 0") {}
};

class TooFewSamples : public InputError {
 public:
  TooFewSamples(std::size_t have, std::size_t need)
      : InputError("need at least " + std::to_string(need) + " samples, got " +
                   std::to_string(have)) {}
};

class GridMismatch : public InputError {
 public:
  using InputError::InputError;
};

class EmptyGrid : public InputError {
 public:
  EmptyGrid() : InputError("empty radial grid") {}
};

class UnknownSchema : public InputError {
 public:
  using InputError::InputError;
};

class BlowUp : public NumericalError {
 public:
  explicit BlowUp(cplx z_at)
      : NumericalError("movable pole hit near z = (" + std::to_string(z_at.real()) + ", " +
                       std::to_string(z_at.imag()) + ")"),
        z_at_(z_at) {}
  cplx z_at() const { return z_at_; }

 private:
  cplx z_at_;
};

class NearPole : public NumericalError {
 public:
  explicit NearPole(cplx z)
      : NumericalError("closed form evaluated within pole guard at z = (" +
                       std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")"),
        z_(z) {}
  cplx z() const { return z_; }

 private:
  cplx z_;
};

class SingularStep : public NumericalError {
 public:
  SingularStep() : NumericalError("tridiagonal solve hit a zero pivot") {}
};

class NoBoundState : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class GridTooCoarse : public NumericalError {
 public:
  GridTooCoarse(double shift)
      : NumericalError("doubling the grid shifted the energy by " + std::to_string(shift)),
        shift_(shift) {}
  double shift() const { return shift_; }

 private:
  double shift_;
};

}  // namespace painlab
