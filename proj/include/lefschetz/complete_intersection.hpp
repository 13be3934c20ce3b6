#pragma once

#include <array>
#include <compare>
#include <span>

#include "lefschetz/hilbert_seq.hpp"

namespace lefschetz {

/// Generator degrees 1 <= a1 <= a2 <= a3 of a codimension-3 complete
/// intersection.
class CiTriple {
 public:
  /// Throws NonPositiveDegree / NotSorted; input is never reordered.
  CiTriple(int a1, int a2, int a3);
  static CiTriple from(std::span<const int> degrees);

  int a1() const noexcept { return degrees_[0]; }
  int a2() const noexcept { return degrees_[1]; }
  int a3() const noexcept { return degrees_[2]; }
  int operator[](std::size_t i) const noexcept { return degrees_[i]; }
  const std::array<int, 3>& degrees() const noexcept { return degrees_; }
  int theta() const noexcept { return degrees_[0] + degrees_[1] + degrees_[2]; }

  /// Componentwise order, the one used for "alpha >= mci(delta)".
  bool dominates(const CiTriple& other) const noexcept;

  friend bool operator==(const CiTriple&, const CiTriple&) = default;
  /// Lexicographic; only used for canonical sorting.
  friend auto operator<=>(const CiTriple&, const CiTriple&) = default;

 private:
  std::array<int, 3> degrees_;
};

/// Coefficients of the product of (1 + t + ... + t^(a_j - 1)), j = 1..3.
HilbertFunction ci_hf(const CiTriple& alpha);

/// First difference of the CI Hilbert function at degree i, evaluated from
/// the closed piecewise-linear form. Adjacent pieces are checked to agree at
/// every shared endpoint; a disagreement throws std::logic_error.
Value ci_delta_piecewise(const CiTriple& alpha, int i);

struct CiLambdaStats {
  int lambda;
  Value delta_at_lambda;
};

/// Closed forms for lambda_Z and the first difference at lambda_Z.
CiLambdaStats ci_lambda_stats(const CiTriple& alpha);

}  // namespace lefschetz
