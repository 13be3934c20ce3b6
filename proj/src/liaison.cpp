#include "lefschetz/liaison.hpp"

#include <algorithm>
#include <string>

#include "lefschetz/error.hpp"

namespace lefschetz {

namespace {

void require_admissible(const CiTriple& alpha, const DegreeSequence& delta) {
  if (!regor_nonempty(alpha, delta))
    throw Error(Errc::RegorEmpty, "CI degrees are not above mci(delta)");
  if (alpha.theta() <= delta.theta())
    throw Error(Errc::TrivialLink, "theta_Z = " + std::to_string(alpha.theta()) +
                                       " must exceed theta_G = " + std::to_string(delta.theta()));
}

int first_excess(const HilbertFunction& h_z, const HilbertFunction& h_g, int theta_z) {
  const auto dz = difference(h_z, 1);
  const auto dg = difference(h_g, 1);
  for (int n = 0; n <= theta_z - 2; ++n)
    if (dg(n) > dz(n)) return n;
  // dH_Z(theta_Z - 2) = -1 < 0 = dH_G(theta_Z - 2), so the loop always returns.
  throw std::logic_error("tau not found below theta_Z - 1");
}

}  // namespace

LinkedPair link_hf(const CiTriple& alpha, const DegreeSequence& delta) {
  require_admissible(alpha, delta);
  auto h_z = ci_hf(alpha);
  auto h_g = gorenstein_hf(delta);
  const int theta_z = alpha.theta();
  const int socle = theta_z - 3;

  std::vector<Value> q(static_cast<std::size_t>(socle + 1), 0);
  for (int i = 0; i <= socle; ++i) {
    const Value v = h_z(socle - i) - h_g(socle - i);
    if (v < 0)
      throw Error(Errc::NegativeValue,
                  "H_G exceeds H_Z at degree " + std::to_string(socle - i), socle - i);
    q[static_cast<std::size_t>(i)] = v;
  }
  HilbertFunction h_q(std::move(q));
  const int t = first_excess(h_z, h_g, theta_z);
  return {alpha,         delta, std::move(h_z), std::move(h_g), std::move(h_q),
          theta_z,       delta.theta(),         t,              theta_z - delta.theta()};
}

int tau(const CiTriple& alpha, const DegreeSequence& delta) {
  require_admissible(alpha, delta);
  return first_excess(ci_hf(alpha), gorenstein_hf(delta), alpha.theta());
}

AciDegrees aci_degrees(const CiTriple& alpha, const DegreeSequence& delta) {
  require_admissible(alpha, delta);
  const int e1 = alpha.theta() - delta.theta();
  std::array<int, 4> e{e1, alpha.a1(), alpha.a2(), alpha.a3()};
  std::sort(e.begin(), e.end());
  const auto data = mci_data(delta);
  const bool normalized = data.b_set.empty() && data.reduced && e1 <= alpha.a1();
  return {e, normalized};
}

}  // namespace lefschetz
