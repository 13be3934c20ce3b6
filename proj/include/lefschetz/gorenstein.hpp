#pragma once

#include <span>
#include <vector>

#include "lefschetz/complete_intersection.hpp"
#include "lefschetz/hilbert_seq.hpp"

namespace lefschetz {

/// Generator degrees (d_1, ..., d_{2m+1}) of a codimension-3 Gorenstein ideal
/// satisfying the Gaeta conditions. Only constructible through
/// validate_gaeta, so every instance is valid.
class DegreeSequence {
 public:
  std::span<const int> degrees() const noexcept { return degrees_; }
  int m() const noexcept { return static_cast<int>(degrees_.size() - 1) / 2; }
  int theta() const noexcept { return theta_; }
  int size() const noexcept { return static_cast<int>(degrees_.size()); }
  /// 1-based access, matching the usual d_i indexing.
  int d(int i) const noexcept { return degrees_[static_cast<std::size_t>(i - 1)]; }

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
  friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  friend DegreeSequence validate_gaeta(std::span<const int> degrees);
  DegreeSequence(std::vector<int> degrees, int theta) : degrees_(std::move(degrees)), theta_(theta) {}

  std::vector<int> degrees_;
  int theta_;
};

struct MciData {
  std::vector<int> b_set;  // 1-based indices in [3, m+1]
  std::vector<int> c_set;  // 1-based indices in [4, m+2]
  CiTriple mci;
  bool reduced;  // no two distinct positions sum to theta
};

/// Checks: odd length >= 3, positive nondecreasing entries, sum divisible by
/// m, and theta > d_i + d_{2m+3-i} for 2 <= i <= m+1.
DegreeSequence validate_gaeta(std::span<const int> degrees);
inline DegreeSequence validate_gaeta(std::initializer_list<int> degrees) {
  return validate_gaeta(std::span<const int>(degrees.begin(), degrees.size()));
}

/// Hilbert function read off the self-dual minimal free resolution.
HilbertFunction gorenstein_hf(const DegreeSequence& delta);

MciData mci_data(const DegreeSequence& delta);

/// Strips ghost pairs (d_h + d_k = theta, h < k), lexicographically smallest
/// index pair first, until none is left.
DegreeSequence reduce(const DegreeSequence& delta);

/// alpha >= mci(delta) componentwise.
bool regor_nonempty(const CiTriple& alpha, const DegreeSequence& delta);

}  // namespace lefschetz
