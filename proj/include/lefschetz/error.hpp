#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lefschetz {

enum class Errc {
  EmptyFunction,
  NotStandardGraded,
  NegativeEntry,
  InvalidIndex,
  InvalidOrder,
  NotSorted,
  EvenLength,
  NonPositiveDegree,
  NonIntegerTheta,
  PairBound,
  WouldEmptySequence,
  RegorEmpty,
  TrivialLink,
  NegativeValue,
  NotArtinian,
  DuplicateGenerator,
  InvalidGenerator,
  InvalidConfig,
};

std::string_view errc_name(Errc code) noexcept;

/// Raised for every rejected input. `what()` starts with the error name so
/// that a one-line diagnostic can be printed verbatim.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail, std::optional<int> index = std::nullopt);

  Errc code() const noexcept { return code_; }
  /// Offending position, when the error is tied to one (e.g. PairBound(i)).
  std::optional<int> index() const noexcept { return index_; }

 private:
  Errc code_;
  std::optional<int> index_;
};

}  // namespace lefschetz
