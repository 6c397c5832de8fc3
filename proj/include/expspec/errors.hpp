#pragma once

#include <stdexcept>
#include <string>

namespace expspec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidResolution : public Error {
 public:
  using Error::Error;
};

/// |pc(x)| fell below the projection threshold. Never expected on S^4.
class DegenerateProjection : public Error {
 public:
  using Error::Error;
};

class DegenerateNormalization : public Error {
 public:
  using Error::Error;
};

class NearPole : public Error {
 public:
  using Error::Error;
};

class CurvesTooClose : public Error {
 public:
  using Error::Error;
};

class UnsupportedN : public Error {
 public:
  using Error::Error;
};

/// Invalid run configuration (bad flag value, unknown element, unwritable output).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Raised by certificate assembly; carries the name of the first bound that failed.
class CertificateFailure : public Error {
 public:
  explicit CertificateFailure(std::string evidence)
      : Error("certificate evidence failed: " + evidence), evidence_(std::move(evidence)) {}

  const std::string& evidence() const noexcept { return evidence_; }

 private:
  std::string evidence_;
};

}  // namespace expspec
