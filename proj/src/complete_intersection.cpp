#include "lefschetz/complete_intersection.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lefschetz/error.hpp"

namespace lefschetz {

CiTriple::CiTriple(int a1, int a2, int a3) : degrees_{a1, a2, a3} {
  for (int i = 0; i < 3; ++i)
    if (degrees_[i] < 1)
      throw Error(Errc::NonPositiveDegree, "CI degrees must be positive", i + 1);
  if (a1 > a2 || a2 > a3) throw Error(Errc::NotSorted, "CI degrees must be nondecreasing");
}

CiTriple CiTriple::from(std::span<const int> degrees) {
  if (degrees.size() != 3)
    throw Error(Errc::InvalidIndex, "a CI triple needs exactly 3 degrees, got " +
                                        std::to_string(degrees.size()));
  return CiTriple(degrees[0], degrees[1], degrees[2]);
}

bool CiTriple::dominates(const CiTriple& other) const noexcept {
  return degrees_[0] >= other.degrees_[0] && degrees_[1] >= other.degrees_[1] &&
         degrees_[2] >= other.degrees_[2];
}

HilbertFunction ci_hf(const CiTriple& alpha) {
  std::vector<Value> poly{1};
  for (int a : alpha.degrees()) {
    std::vector<Value> next(poly.size() + static_cast<std::size_t>(a) - 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i)
      for (int j = 0; j < a; ++j) next[i + static_cast<std::size_t>(j)] += poly[i];
    poly = std::move(next);
  }
  return HilbertFunction(std::move(poly));
}

namespace {

struct Piece {
  int lo;
  int hi;
  std::function<Value(Value)> f;
};

std::vector<Piece> delta_pieces(Value d1, Value d2, Value d3) {
  const auto lo = [](Value v) { return static_cast<int>(v); };
  std::vector<Piece> pieces;
  pieces.push_back({0, lo(d1 - 1), [](Value i) { return i + 1; }});
  pieces.push_back({lo(d1 - 1), lo(d2 - 1), [=](Value) { return d1; }});
  if (d3 <= d1 + d2 - 1) {
    pieces.push_back({lo(d2 - 1), lo(d3 - 1), [=](Value i) { return -i + d1 + d2 - 1; }});
    pieces.push_back(
        {lo(d3 - 1), lo(d1 + d2 - 1), [=](Value i) { return -2 * i + d1 + d2 + d3 - 2; }});
    pieces.push_back({lo(d1 + d2 - 1), lo(d1 + d3 - 1), [=](Value i) { return -i + d3 - 1; }});
  }
  if (d1 + d2 <= d3) {
    pieces.push_back({lo(d2 - 1), lo(d1 + d2 - 1), [=](Value i) { return -i + d1 + d2 - 1; }});
    pieces.push_back({lo(d1 + d2 - 1), lo(d3 - 1), [](Value) { return Value{0}; }});
    pieces.push_back({lo(d3 - 1), lo(d1 + d3 - 1), [=](Value i) { return -i + d3 - 1; }});
  }
  pieces.push_back({lo(d1 + d3 - 1), lo(d2 + d3 - 1), [=](Value) { return -d1; }});
  pieces.push_back(
      {lo(d2 + d3 - 1), lo(d1 + d2 + d3 - 1), [=](Value i) { return i - d1 - d2 - d3 + 1; }});
  return pieces;
}

}  // namespace

Value ci_delta_piecewise(const CiTriple& alpha, int i) {
  if (i < 0 || i >= alpha.theta() - 1) return 0;
  std::optional<Value> result;
  for (const auto& piece : delta_pieces(alpha.a1(), alpha.a2(), alpha.a3())) {
    if (i < piece.lo || i > piece.hi) continue;
    const Value v = piece.f(i);
    if (result && *result != v)
      throw std::logic_error("piecewise CI difference branches disagree at degree " +
                             std::to_string(i));
    result = v;
  }
  if (!result)
    throw std::logic_error("no piecewise CI branch covers degree " + std::to_string(i));
  return *result;
}

CiLambdaStats ci_lambda_stats(const CiTriple& alpha) {
  const int a1 = alpha.a1(), a2 = alpha.a2(), a3 = alpha.a3();
  const int theta_z = alpha.theta();
  std::optional<int> lam;
  if (a3 <= a1 + a2) lam = (theta_z - 3) / 2;
  if (a3 >= a1 + a2 - 1) {
    const int other = a1 + a2 - 2;
    if (lam && *lam != other)
      throw std::logic_error("lambda closed forms disagree on their overlap");
    lam = other;
  }
  Value at_lambda = 1;
  if (a3 <= a1 + a2 - 2) at_lambda = theta_z % 2 == 0 ? 2 : 1;
  return {*lam, at_lambda};
}

}  // namespace lefschetz
