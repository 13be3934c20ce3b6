#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "lefschetz/hilbert_seq.hpp"

namespace lefschetz {

using Exponent = std::array<int, 3>;

/// Generators of a monomial ideal in k[x1, x2, x3]. Must contain a pure power
/// of every variable; duplicates and the unit monomial are rejected.
class MonomialIdealSpec {
 public:
  explicit MonomialIdealSpec(std::vector<Exponent> generators);

  /// Parses "3:0:0,0:3:0,0:0:3,1:1:1".
  static MonomialIdealSpec parse(std::string_view text);

  const std::vector<Exponent>& generators() const noexcept { return generators_; }
  /// Smallest pure-power exponent for each variable.
  const Exponent& pure_powers() const noexcept { return pure_powers_; }

 private:
  std::vector<Exponent> generators_;
  Exponent pure_powers_{};
};

/// Counts standard monomials degree by degree.
HilbertFunction monomial_hf(const MonomialIdealSpec& spec);

}  // namespace lefschetz
