#include "lefschetz/gorenstein.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lefschetz/error.hpp"

namespace lefschetz {

DegreeSequence validate_gaeta(std::span<const int> degrees) {
  const int n = static_cast<int>(degrees.size());
  if (n < 3 || n % 2 == 0)
    throw Error(Errc::EvenLength, "need an odd number (>= 3) of degrees, got " + std::to_string(n));
  for (int i = 0; i < n; ++i)
    if (degrees[i] < 1) throw Error(Errc::NonPositiveDegree, "degrees must be positive", i + 1);
  for (int i = 1; i < n; ++i)
    if (degrees[i - 1] > degrees[i])
      throw Error(Errc::NotSorted, "degrees must be nondecreasing", i + 1);

  const int m = (n - 1) / 2;
  const int sum = std::accumulate(degrees.begin(), degrees.end(), 0);
  if (sum % m != 0)
    throw Error(Errc::NonIntegerTheta,
                "sum " + std::to_string(sum) + " not divisible by m = " + std::to_string(m));
  const int theta = sum / m;

  std::vector<int> d(degrees.begin(), degrees.end());
  const auto at = [&](int i) { return d[static_cast<std::size_t>(i - 1)]; };
  for (int i = 2; i <= m + 1; ++i) {
    const int j = 2 * m + 3 - i;
    if (theta <= at(i) + at(j))
      throw Error(Errc::PairBound,
                  "theta = " + std::to_string(theta) + " <= d_" + std::to_string(i) + " + d_" +
                      std::to_string(j) + " = " + std::to_string(at(i) + at(j)),
                  i);
  }
  return DegreeSequence(std::move(d), theta);
}

HilbertFunction gorenstein_hf(const DegreeSequence& delta) {
  const int theta = delta.theta();
  const auto c2 = [](Value n) { return binomial(n, 2); };
  std::vector<Value> hf(static_cast<std::size_t>(std::max(theta - 2, 1)), 0);
  for (int t = 0; t <= theta - 3; ++t) {
    Value h = c2(t + 2) - c2(t - theta + 2);
    for (int d : delta.degrees()) h += c2(t - (theta - d) + 2) - c2(t - d + 2);
    hf[static_cast<std::size_t>(t)] = h;
  }
  return HilbertFunction(std::move(hf));
}

namespace {

bool has_ghost_pair(const DegreeSequence& delta) {
  for (int h = 1; h <= delta.size(); ++h)
    for (int k = h + 1; k <= delta.size(); ++k)
      if (delta.d(h) + delta.d(k) == delta.theta()) return true;
  return false;
}

}  // namespace

MciData mci_data(const DegreeSequence& delta) {
  const int m = delta.m();
  const int theta = delta.theta();
  std::vector<int> b_set;
  std::vector<int> c_set;
  for (int i = 3; i <= m + 1; ++i)
    if (theta <= delta.d(i) + delta.d(2 * m + 4 - i)) b_set.push_back(i);
  for (int i = 4; i <= m + 2; ++i)
    if (theta <= delta.d(i) + delta.d(2 * m + 5 - i)) c_set.push_back(i);

  const auto triple = [&](int i, int j, int k) {
    return CiTriple(delta.d(i), delta.d(j), delta.d(k));
  };
  CiTriple mci = triple(1, 2, 3);
  if (!b_set.empty())
    mci = triple(1, b_set.back(), 2 * m + 4 - b_set.front());
  else if (!c_set.empty())
    mci = triple(1, 2, c_set.back());
  return {std::move(b_set), std::move(c_set), mci, !has_ghost_pair(delta)};
}

DegreeSequence reduce(const DegreeSequence& delta) {
  DegreeSequence current = delta;
  for (;;) {
    const int n = current.size();
    bool removed = false;
    for (int h = 1; h <= n && !removed; ++h) {
      for (int k = h + 1; k <= n && !removed; ++k) {
        if (current.d(h) + current.d(k) != current.theta()) continue;
        if (n - 2 < 3)
          throw Error(Errc::WouldEmptySequence, "ghost pair removal would leave fewer than 3 degrees");
        std::vector<int> rest;
        for (int i = 1; i <= n; ++i)
          if (i != h && i != k) rest.push_back(current.d(i));
        current = validate_gaeta(rest);
        removed = true;
      }
    }
    if (!removed) return current;
  }
}

bool regor_nonempty(const CiTriple& alpha, const DegreeSequence& delta) {
  return alpha.dominates(mci_data(delta).mci);
}

}  // namespace lefschetz
