#include "doctest.h"

#include <functional>
#include <random>
#include <vector>

#include "lefschetz/error.hpp"
#include "lefschetz/hilbert_seq.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace lefschetz;
using V = std::vector<Value>;

namespace {

V values(const DifferenceSequence& d) { return {d.values().begin(), d.values().end()}; }
HilbertFunction hf(V v) { return HilbertFunction(std::move(v)); }

}  // namespace

TEST_CASE("HilbertFunction enforces its invariants") {
  CHECK(hf({1, 3, 3, 1, 0, 0}).size() == 4);
  CHECK(error_code([] { hf({0, 0}); }) == Errc::EmptyFunction);
  CHECK(error_code([] { hf({}); }) == Errc::EmptyFunction);
  CHECK(error_code([] { hf({2, 1}); }) == Errc::NotStandardGraded);
  CHECK(error_code([] { hf({1, -1, 2}); }) == Errc::NegativeEntry);
  const auto h = hf({1, 3, 3, 1});
  CHECK(h(-1) == 0);
  CHECK(h(4) == 0);
  CHECK(h(2) == 3);
}

TEST_CASE("difference") {
  CHECK(values(difference(hf({1, 3, 3, 1}), 1)) == V{1, 2, 0, -2, -1});
  CHECK(values(difference(hf({1}), 1)) == V{1, -1});
  // second difference of (1,3,4,3,1): first difference is 1,2,1,-1,-2,-1
  const auto d2 = difference(hf({1, 3, 4, 3, 1}), 2);
  CHECK(d2.order() == 2);
  CHECK(values(d2) == V{1, 1, -1, -2, -1, 1, 1});
  CHECK(error_code([] { difference(hf({1, 2, 1}), 3); }) == Errc::InvalidOrder);
}

TEST_CASE("positive_part") {
  const DifferenceSequence d({1, 2, 0, -2, -1}, 1);
  CHECK(values(positive_part(d)) == V{1, 2, 0, 0, 0});
  const DifferenceSequence nonneg({1, 2, 3}, 1);
  CHECK(positive_part(nonneg) == nonneg);
  CHECK(values(positive_part(DifferenceSequence({-1, -1}, 1))) == V{0, 0});
}

TEST_CASE("theta and lambda") {
  CHECK(theta(hf({1})) == 3);
  CHECK(theta(hf({1, 3, 3, 1})) == 6);
  CHECK(theta(hf({1, 3, 6, 6, 3})) == 7);
  CHECK(lambda(hf({1, 3, 3, 1})) == 1);
  CHECK(lambda(hf({1})) == 0);
  CHECK(lambda(hf({1, 3, 4, 3, 1})) == 2);
}

TEST_CASE("is_unimodal follows the strict-then-weak definition") {
  auto r = is_unimodal(hf({1, 3, 6, 6, 3}));
  CHECK(r.unimodal);
  CHECK(r.peak == 2);
  CHECK_FALSE(is_unimodal(hf({1, 2, 1, 2})).unimodal);
  CHECK_FALSE(is_unimodal(hf({1, 2, 1, 2})).peak.has_value());
  CHECK_FALSE(is_unimodal(hf({1, 1, 2})).unimodal);
  CHECK(is_unimodal(hf({1})).peak == 0);
  CHECK(is_unimodal(hf({1, 1, 1})).peak == 0);
}

TEST_CASE("is_unimodal agrees with the definition on every short sequence") {
  // all sequences with H(0) = 1, length <= 6, entries <= 4
  std::vector<Value> h{1};
  std::function<void()> rec = [&] {
    int peak_oracle = -1;
    const bool expected = oracle::unimodal_by_definition(h, &peak_oracle);
    const auto got = is_unimodal(std::span<const Value>(h));
    REQUIRE(got.unimodal == expected);
    if (expected) REQUIRE(*got.peak == peak_oracle);
    if (h.size() == 6) return;
    for (Value v = 0; v <= 4; ++v) {
      h.push_back(v);
      rec();
      h.pop_back();
    }
  };
  rec();
}

TEST_CASE("macaulay_bound") {
  CHECK(macaulay_bound(1, 5) == 1);
  CHECK(macaulay_bound(3, 1) == 6);
  CHECK(macaulay_bound(4, 2) == 5);
  CHECK(macaulay_bound(0, 3) == 0);
  CHECK(error_code([] { macaulay_bound(2, 0); }) == Errc::InvalidIndex);
}

TEST_CASE("macaulay_bound matches the exhaustive representation search") {
  for (int i = 1; i <= 8; ++i) {
    for (Value v = 1; v <= 120; ++v) {
      int reps = 0;
      const Value expected = oracle::macaulay_by_search(v, i, &reps);
      REQUIRE(reps == 1);  // the representation is unique
      REQUIRE(macaulay_bound(v, i) == expected);
    }
  }
}

TEST_CASE("macaulay_bound properties") {
  for (int i = 1; i <= 10; ++i) {
    Value prev = 0;
    for (Value v = 1; v <= 200; ++v) {
      const Value b = macaulay_bound(v, i);
      CHECK(b >= v);
      CHECK(b >= prev);
      prev = b;
    }
  }
}

TEST_CASE("is_o_sequence") {
  auto r = is_o_sequence(std::vector<Value>{1, 3, 6, 10, 15});
  CHECK(r.ok);
  CHECK_FALSE(r.first_violation_degree.has_value());
  r = is_o_sequence(std::vector<Value>{1, 2, 4});
  CHECK_FALSE(r.ok);
  CHECK(r.first_violation_degree == 2);
  r = is_o_sequence(std::vector<Value>{1, 0, 1});
  CHECK_FALSE(r.ok);
  CHECK(r.first_violation_degree == 2);
  r = is_o_sequence(std::vector<Value>{2, 1});
  CHECK(r.first_violation_degree == 0);
  // degree-1 growth is unconstrained
  CHECK(is_o_sequence(std::vector<Value>{1, 40}).ok);
  CHECK(error_code([] { is_o_sequence(DifferenceSequence({1, -1}, 1)); }) == Errc::NegativeEntry);
}

TEST_CASE("is_o_sequence is prefix-closed") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> step(0, 5);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Value> s{1};
    const int len = 2 + trial % 7;
    for (int i = 1; i < len; ++i) s.push_back(step(rng));
    if (!is_o_sequence(s).ok) continue;
    for (std::size_t k = 1; k <= s.size(); ++k)
      CHECK(is_o_sequence(std::span<const Value>(s.data(), k)).ok);
  }
}

TEST_CASE("is_wls") {
  auto v = is_wls(hf({1, 3, 6, 6, 3}));
  CHECK(v.is_wls);
  CHECK(v.is_unimodal);
  CHECK(v.unimodality_index == 2);
  CHECK(v.o_sequence_ok);

  v = is_wls(hf({1, 2, 4}));
  CHECK_FALSE(v.is_wls);
  CHECK(v.is_unimodal);
  CHECK_FALSE(v.o_sequence_ok);
  CHECK(v.first_violation_degree == 2);

  v = is_wls(hf({1, 3, 2, 3}));
  CHECK_FALSE(v.is_wls);
  CHECK_FALSE(v.is_unimodal);
  CHECK_FALSE(v.unimodality_index.has_value());
}

TEST_CASE("sequence invariants on random Hilbert functions") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> val(0, 9);
  for (int trial = 0; trial < 300; ++trial) {
    V raw{1};
    for (int i = 0; i < 1 + trial % 8; ++i) raw.push_back(val(rng));
    raw.push_back(1 + val(rng));
    const auto h = hf(raw);
    const auto d = difference(h, 1);
    CHECK(d.size() == h.size() + 1);
    CHECK(positive_part(d)(0) == 1);
    Value sum = 0;
    for (Value x : d.values()) sum += x;
    CHECK(sum == 0);

    const auto verdict = is_wls(h);
    CHECK(verdict == is_wls(h));
    CHECK(verdict.is_wls == (verdict.is_unimodal && verdict.o_sequence_ok));
    CHECK(verdict.unimodality_index.has_value() == verdict.is_unimodal);
    CHECK(verdict.first_violation_degree.has_value() == !verdict.o_sequence_ok);
    if (verdict.is_unimodal) {
      const int u = *verdict.unimodality_index;
      const Value top = *std::max_element(raw.begin(), raw.end());
      CHECK(h(u) == top);
      for (int i = 0; i < u; ++i) CHECK(h(i) < h(i + 1));
    }
  }
}
