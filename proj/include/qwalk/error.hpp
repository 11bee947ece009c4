#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A walk state or coin state that violates normalization or support rules.
class InvalidState : public Error {
public:
  using Error::Error;
};

/// Momentum at which the two-step operator's eigenvectors are ill-conditioned.
class DegenerateMomentum : public Error {
public:
  explicit DegenerateMomentum(double k);
  double momentum() const noexcept { return k_; }

private:
  double k_;
};

/// Coin angles for which the spectral decomposition is undefined at every
/// momentum (or at non-isolated momenta).
class DegenerateParameters : public Error {
public:
  using Error::Error;
};

class ConvergenceError : public Error {
public:
  using Error::Error;
};

class NonPhysicalDensity : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace qwalk
