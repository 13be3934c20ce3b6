#include "doctest.h"

#include <sstream>

#include "lefschetz/error.hpp"
#include "lefschetz/report.hpp"
#include "lefschetz/verifier.hpp"
#include "test_util.hpp"

using namespace lefschetz;

TEST_CASE("check_pair worked examples") {
  auto v = check_pair(CiTriple(2, 2, 3), validate_gaeta({2, 2, 2}));
  CHECK(v.passed());
  CHECK(v.tau == 4);
  CHECK(v.claim_ok);
  CHECK(v.normalized);
  CHECK(v.wls.is_wls);
  for (const auto& [name, r] : v.checks) {
    CAPTURE(name);
    CHECK(r.ok);
  }

  v = check_pair(CiTriple(3, 3, 4), validate_gaeta({3, 3, 4, 4, 4}));
  CHECK(v.passed());
  CHECK(v.tau == 6);
  CHECK(v.claim_ok);
  // B = C = empty and alpha = mci: the steep second-difference check applies
  CHECK(v.checks.count(check::kSecondDiffSteep) == 1);
  CHECK(v.checks.count(check::kMciDomination) == 1);
  CHECK(v.checks.count(check::kSecondDiffDescending) == 0);

  CHECK(error_code([] { check_pair(CiTriple(2, 2, 2), validate_gaeta({2, 2, 2, 3, 3})); }) ==
        Errc::RegorEmpty);
  CHECK(error_code([] { check_pair(CiTriple(2, 2, 2), validate_gaeta({2, 2, 2})); }) ==
        Errc::TrivialLink);
}

TEST_CASE("check_pair marks normalization-only checks as informational") {
  // e1 = 12 - 6 = 6 > a1: not normalized
  const auto v = check_pair(CiTriple(4, 4, 4), validate_gaeta({2, 2, 2}));
  CHECK_FALSE(v.normalized);
  CHECK_FALSE(v.checks.at(check::kTauClaim).required);
  CHECK(v.checks.at(check::kWls).required);
}

TEST_CASE("PairVerdict failure bookkeeping") {
  auto v = check_pair(CiTriple(2, 2, 3), validate_gaeta({2, 2, 2}));
  v.checks[check::kThetaLambdaGap].ok = false;
  CHECK_FALSE(v.passed());
  CHECK(v.failed_checks() == std::vector<std::string>{check::kThetaLambdaGap});
  v.checks[check::kThetaLambdaGap].required = false;
  CHECK(v.passed());
}

TEST_CASE("enumerate_deltas") {
  const auto d = enumerate_deltas(2, 1);
  // all Gaeta-valid triples with entries <= 2
  CHECK(d.size() == 4);
  CHECK(d.front() == validate_gaeta({1, 1, 1}));
  CHECK(d.back() == validate_gaeta({2, 2, 2}));
  CHECK(enumerate_deltas(6, 2).size() >= enumerate_deltas(5, 2).size());
  CHECK(enumerate_deltas(6, 3).size() >= enumerate_deltas(6, 2).size());
}

TEST_CASE("sweep small configurations") {
  SweepConfig c{2, 1, 1, true};
  auto r = sweep(c, 1, true);
  CHECK(r.failures.empty());
  CHECK(r.pairs_checked >= 1);
  bool saw_112 = false;
  for (const auto& v : r.verdicts) saw_112 |= v.delta == validate_gaeta({1, 1, 2});
  CHECK(saw_112);

  r = sweep(SweepConfig{1, 1, 0, true}, 2);
  CHECK(r.pairs_checked == 0);
  CHECK(r.deltas_enumerated == 1);
  CHECK(r.failures.empty());

  CHECK(error_code([] { sweep(SweepConfig{0, 1, 1, true}); }) == Errc::InvalidConfig);
  CHECK(error_code([] { sweep(SweepConfig{3, 0, 1, true}); }) == Errc::InvalidConfig);
  CHECK(error_code([] { sweep(SweepConfig{3, 1, -1, true}); }) == Errc::InvalidConfig);
}

TEST_CASE("sweep is independent of the worker count") {
  const SweepConfig c{6, 2, 2, true};
  const auto a = sweep(c, 1, true);
  const auto b = sweep(c, 3, true);
  CHECK(a.pairs_checked == b.pairs_checked);
  CHECK(a.deltas_enumerated == b.deltas_enumerated);
  CHECK(a.distinct_hq == b.distinct_hq);
  CHECK(a.failures == b.failures);
  CHECK(a.verdicts == b.verdicts);
}

TEST_CASE("deltas_enumerated is monotone in the bounds") {
  std::int64_t prev = 0;
  for (int d = 1; d <= 6; ++d) {
    const auto n = sweep(SweepConfig{d, 2, 0, true}, 1).deltas_enumerated;
    CHECK(n >= prev);
    prev = n;
  }
  CHECK(sweep(SweepConfig{6, 3, 0, true}, 1).deltas_enumerated >=
        sweep(SweepConfig{6, 2, 0, true}, 1).deltas_enumerated);
}

TEST_CASE("recorded verdicts replay identically") {
  const auto r = sweep(SweepConfig{5, 2, 2, true}, 2, true);
  REQUIRE(!r.verdicts.empty());
  for (const auto& v : r.verdicts) REQUIRE(check_pair(v.alpha, v.delta) == v);
}

TEST_CASE("report serialization") {
  const auto r = sweep(SweepConfig{3, 1, 1, true}, 1, true);
  const auto j = to_json(r);
  CHECK(j.at("config").at("d_max") == 3);
  CHECK(j.at("failures").is_array());
  CHECK(j.at("pairs_checked") == r.pairs_checked);
  const auto text = j.dump();
  CHECK(nlohmann::json::parse(text).dump() == text);

  std::ostringstream csv;
  write_csv(csv, r.verdicts);
  const auto s = csv.str();
  CHECK(s.rfind("delta,alpha,hq,tau,claim_ok,wls,failed_checks\n", 0) == 0);
  CHECK(static_cast<std::int64_t>(std::count(s.begin(), s.end(), '\n')) == r.pairs_checked + 1);

  const auto pj = to_json(check_pair(CiTriple(2, 2, 3), validate_gaeta({2, 2, 2})));
  CHECK(pj.at("hq") == nlohmann::json::array({1, 2, 1}));
  CHECK(pj.at("tau") == 4);
  CHECK(pj.at("failed_checks").empty());
}

TEST_CASE("sweep config from JSON") {
  auto c = sweep_config_from_json({{"d_max", 5}, {"enforce_normalization", false}});
  CHECK(c.d_max == 5);
  CHECK(c.m_max == 3);
  CHECK_FALSE(c.enforce_normalization);
  CHECK(error_code([] { sweep_config_from_json({{"dmax", 5}}); }) == Errc::InvalidConfig);
  CHECK(error_code([] { sweep_config_from_json({{"d_max", "x"}}); }) == Errc::InvalidConfig);
  CHECK(error_code([] { sweep_config_from_json({{"d_max", 0}}); }) == Errc::InvalidConfig);
}
