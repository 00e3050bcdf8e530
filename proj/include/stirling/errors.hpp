#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace stirling {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A word failed Stirling validation. Reports the first violation found in a
/// left-to-right scan.
class ValidationError : public Error {
 public:
  enum class Kind {
    zero_entry,          // a preference of 0
    odd_length,          // length is not 2n
    wrong_multiset,      // some value missing, repeated more than twice, or > n
    stirling_violation,  // value `inner` < `outer` sits between the copies of `outer`
  };

  ValidationError(Kind kind, std::uint32_t outer, std::uint32_t inner, std::string what)
      : Error(std::move(what)), kind_(kind), outer_(outer), inner_(inner) {}

  Kind kind() const noexcept { return kind_; }
  /// Offending value (for stirling_violation: the value whose copies enclose the violation).
  std::uint32_t value() const noexcept { return outer_; }
  /// For stirling_violation: the smaller value found between the two copies.
  std::uint32_t inner() const noexcept { return inner_; }

 private:
  Kind kind_;
  std::uint32_t outer_;
  std::uint32_t inner_;
};

/// Parking did not succeed. `car()` is the 1-based index of the first car that failed.
class ParkFailure : public Error {
 public:
  enum class Kind { no_free_spot, preference_out_of_range };

  ParkFailure(Kind kind, std::size_t car, std::string what)
      : Error(std::move(what)), kind_(kind), car_(car) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t car() const noexcept { return car_; }

 private:
  Kind kind_;
  std::size_t car_;
};

class RankOutOfRange : public Error {
 public:
  using Error::Error;
};

class InvalidFilter : public Error {
 public:
  using Error::Error;
};

/// A requested scan exceeds the configured exhaustive-enumeration ceiling.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Exact integer arithmetic would have wrapped.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A construction's precondition does not hold.
class ConstructionError : public Error {
 public:
  enum class Kind {
    invalid_code,
    unbalanced,
    not_extremely_lucky_composition,
    no_valid_placement,
    not_admissible_pair,
    odd_order,
    order_out_of_range,
  };

  ConstructionError(Kind kind, std::string what) : Error(std::move(what)), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace stirling
