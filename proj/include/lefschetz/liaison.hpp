#pragma once

#include <array>

#include "lefschetz/complete_intersection.hpp"
#include "lefschetz/gorenstein.hpp"
#include "lefschetz/hilbert_seq.hpp"

namespace lefschetz {

/// A complete intersection Z inside a Gorenstein G together with the Hilbert
/// function of the residual Q = Z : G.
struct LinkedPair {
  CiTriple alpha;
  DegreeSequence delta;
  HilbertFunction h_z;
  HilbertFunction h_g;
  HilbertFunction h_q;
  int theta_z;
  int theta_g;
  int tau;
  int e1;  // theta_z - theta_g
};

struct AciDegrees {
  std::array<int, 4> e;  // nondecreasing
  bool normalized;       // B empty, delta reduced, e1 <= a1
};

/// H_Q(i) = H_Z(theta_Z - 3 - i) - H_G(theta_Z - 3 - i).
///
/// Throws RegorEmpty when alpha is not above mci(delta), TrivialLink when
/// theta_Z <= theta_G. NegativeValue signals an inconsistent pair (H_G
/// exceeding H_Z somewhere) and must not happen for admissible input.
LinkedPair link_hf(const CiTriple& alpha, const DegreeSequence& delta);

/// Least n >= 0 with dH_G(n) > dH_Z(n).
int tau(const CiTriple& alpha, const DegreeSequence& delta);

AciDegrees aci_degrees(const CiTriple& alpha, const DegreeSequence& delta);

}  // namespace lefschetz
