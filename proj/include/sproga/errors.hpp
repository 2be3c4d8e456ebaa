#pragma once

#include <stdexcept>
#include <string>

namespace sproga {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes or lengths of the arguments do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A tuning parameter lies outside its admissible range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A real-valued argument lies outside the domain of the function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input data could not be parsed (bad CSV, ragged rows, non-numeric cells).
class DataError : public Error {
 public:
  using Error::Error;
};

class NumericalDivergence : public Error {
 public:
  explicit NumericalDivergence(int iteration)
      : Error("non-finite iterate at iteration " + std::to_string(iteration)),
        iteration_(iteration) {}

  int iteration() const noexcept { return iteration_; }

 private:
  int iteration_;
};

}  // namespace sproga
