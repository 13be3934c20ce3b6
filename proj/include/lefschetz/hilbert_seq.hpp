#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace lefschetz {

using Value = std::int64_t;

/// C(n, k) with C(n, k) = 0 whenever n < k, n < 0 or k < 0.
Value binomial(Value n, Value k);

/// Hilbert function of an Artinian standard graded algebra, dense from degree
/// 0. Degrees outside the stored range read as 0.
///
/// Invariants: H(0) = 1, all entries >= 0, last stored entry > 0. The
/// constructor trims trailing zeros before checking.
class HilbertFunction {
 public:
  explicit HilbertFunction(std::vector<Value> values);

  Value operator()(int degree) const noexcept {
    return degree < 0 || degree >= size() ? 0 : values_[static_cast<std::size_t>(degree)];
  }
  std::span<const Value> values() const noexcept { return values_; }
  int size() const noexcept { return static_cast<int>(values_.size()); }
  int last_degree() const noexcept { return size() - 1; }
  Value total() const noexcept;

  friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;
  friend auto operator<=>(const HilbertFunction&, const HilbertFunction&) = default;

 private:
  std::vector<Value> values_;
};

/// First or second difference of a Hilbert function (entries may be negative).
class DifferenceSequence {
 public:
  DifferenceSequence(std::vector<Value> values, int order);

  Value operator()(int degree) const noexcept {
    return degree < 0 || degree >= size() ? 0 : values_[static_cast<std::size_t>(degree)];
  }
  std::span<const Value> values() const noexcept { return values_; }
  int size() const noexcept { return static_cast<int>(values_.size()); }
  int order() const noexcept { return order_; }

  friend bool operator==(const DifferenceSequence&, const DifferenceSequence&) = default;

 private:
  std::vector<Value> values_;
  int order_;
};

struct WlsVerdict {
  bool is_unimodal = false;
  std::optional<int> unimodality_index;
  bool o_sequence_ok = false;
  std::optional<int> first_violation_degree;
  bool is_wls = false;

  friend bool operator==(const WlsVerdict&, const WlsVerdict&) = default;
};

struct Unimodality {
  bool unimodal = false;
  std::optional<int> peak;  // the smallest u (it is unique when it exists)
};

struct OSequenceCheck {
  bool ok = false;
  std::optional<int> first_violation_degree;
};

/// Order 1: h(i) - h(i-1) over [0, last+1]. Order 2 applies it twice.
DifferenceSequence difference(const HilbertFunction& h, int order = 1);
/// One more difference of `d`, trimmed to the range carrying nonzero entries.
DifferenceSequence difference(const DifferenceSequence& d);

/// Pointwise max(d(i), 0); keeps the stored range and order of `d`.
DifferenceSequence positive_part(const DifferenceSequence& d);

/// Last support degree plus 3.
int theta(const HilbertFunction& h);
/// Largest degree where the first difference is strictly positive.
int lambda(const HilbertFunction& h);

/// Strict increase on [0, u), weak decrease from u onward.
Unimodality is_unimodal(std::span<const Value> seq);
inline Unimodality is_unimodal(const HilbertFunction& h) { return is_unimodal(h.values()); }

/// Macaulay's growth bound v^<i>. Throws InvalidIndex when i < 1.
Value macaulay_bound(Value v, int i);

/// s(0) = 1 and s(i+1) <= s(i)^<i> for i >= 1. Throws NegativeEntry on
/// negative input.
OSequenceCheck is_o_sequence(std::span<const Value> seq);
inline OSequenceCheck is_o_sequence(const DifferenceSequence& d) { return is_o_sequence(d.values()); }

WlsVerdict is_wls(const HilbertFunction& h);

}  // namespace lefschetz
