#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace rpm {

/// Base of every error raised by the solver.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument at an API boundary (n_max = 0, D < 1, bad config field...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A Hankel determinant or Padé system needs a coefficient the table lacks.
class InsufficientCoefficients : public Error {
 public:
  InsufficientCoefficients(int missing_index, int available)
      : Error("coefficient table too short: needs f_" + std::to_string(missing_index) +
              ", has f_0..f_" + std::to_string(available - 1)),
        missing_index_(missing_index) {}
  int missing_index() const { return missing_index_; }

 private:
  int missing_index_;
};

/// Root refinement failed to converge or to certify a bracket.
class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, std::string last_lo, std::string last_hi)
      : Error(what + " (last bracket [" + last_lo + ", " + last_hi + "])"),
        last_lo_(std::move(last_lo)),
        last_hi_(std::move(last_hi)) {}
  const std::string& last_lo() const { return last_lo_; }
  const std::string& last_hi() const { return last_hi_; }

 private:
  std::string last_lo_;
  std::string last_hi_;
};

/// The Padé denominator system is singular at the requested eps.
class SingularSystem : public Error {
 public:
  using Error::Error;
};

/// Airy argument outside the certified series range.
class RangeExceeded : public Error {
 public:
  using Error::Error;
};

/// Oracle cannot supply the requested eigenvalue.
class OracleRange : public Error {
 public:
  using Error::Error;
};

/// The Airy form of the box quantization degenerates at zero field; use
/// the closed form (n+1)^2 pi^2 instead.
class DegenerateField : public Error {
 public:
  using Error::Error;
};

/// convergence_report on a sequence without an oracle label.
class UnlabeledSequence : public Error {
 public:
  using Error::Error;
};

}  // namespace rpm
