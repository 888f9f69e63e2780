#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace latt {

enum class ErrorCode {
  NotSymmetric,
  NotPositiveDefinite,
  Overflow,
  Singular,
  NotDistinguished,
  NotInHassett,
  NotSupportedInH,
  RankOutOfRange,
  MissingDiscriminants,
  NotRepresentable,
  OnlyTrivial,
  NotDivisibleBy5,
  NotApplicable,
  ValueMismatch,
  NotFound,
  InternalContradiction,
  InvalidInput,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Cholesky pivot failure; `pivot` is 1-based.
class NotPositiveDefiniteError : public Error {
 public:
  explicit NotPositiveDefiniteError(int pivot)
      : Error(ErrorCode::NotPositiveDefinite,
              "matrix is not positive-definite (pivot " +
                  std::to_string(pivot) + ")"),
        pivot_(pivot) {}
  int pivot() const { return pivot_; }

 private:
  int pivot_;
};

/// Lift failure: `witness` is a vector with form value `value`, which has a
/// residue excluded from the Hassett set.
class NotSupportedInHError : public Error {
 public:
  NotSupportedInHError(std::vector<std::int64_t> witness, std::int64_t value)
      : Error(ErrorCode::NotSupportedInH,
              "form takes value " + std::to_string(value) +
                  " outside the Hassett set"),
        witness_(std::move(witness)),
        value_(value) {}
  const std::vector<std::int64_t>& witness() const { return witness_; }
  std::int64_t value() const { return value_; }

 private:
  std::vector<std::int64_t> witness_;
  std::int64_t value_;
};

/// Certificate failure: every d in H up to the bound with no witness.
class MissingDiscriminantsError : public Error {
 public:
  explicit MissingDiscriminantsError(std::vector<std::int64_t> missing)
      : Error(ErrorCode::MissingDiscriminants,
              std::to_string(missing.size()) +
                  " Hassett discriminant(s) not primitively represented"),
        missing_(std::move(missing)) {}
  const std::vector<std::int64_t>& missing() const { return missing_; }

 private:
  std::vector<std::int64_t> missing_;
};

}  // namespace latt
