#include "lefschetz/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <numeric>
#include <set>
#include <thread>
#include <tuple>

#include "lefschetz/error.hpp"
#include "lefschetz/liaison.hpp"

namespace lefschetz {

void SweepConfig::validate() const {
  if (d_max < 1) throw Error(Errc::InvalidConfig, "d_max must be >= 1");
  if (m_max < 1) throw Error(Errc::InvalidConfig, "m_max must be >= 1");
  if (alpha_offset < 0) throw Error(Errc::InvalidConfig, "alpha offset must be >= 0");
}

bool PairVerdict::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const auto& kv) { return kv.second.ok || !kv.second.required; });
}

std::vector<std::string> PairVerdict::failed_checks() const {
  std::vector<std::string> names;
  for (const auto& [name, result] : checks)
    if (!result.ok && result.required) names.push_back(name);
  return names;
}

namespace {

/// First degree in [lo, hi] where `holds` is false.
template <class Pred>
CheckResult over_range(int lo, int hi, Pred holds) {
  for (int i = lo; i <= hi; ++i)
    if (!holds(i)) return {false, true, i};
  return {};
}

CheckResult gorenstein_shape(const DifferenceSequence& dg, int theta_g, int lambda_g) {
  const auto in = [](int i, int lo, int hi) { return lo <= i && i <= hi; };
  for (int i = -1; i <= theta_g; ++i) {
    if ((dg(i) > 0) != in(i, 0, lambda_g)) return {false, true, i};
    if ((dg(i) < 0) != in(i, theta_g - 2 - lambda_g, theta_g - 2)) return {false, true, i};
  }
  if (theta_g < 2 * lambda_g + 3) return {false, true, std::nullopt};
  if (theta_g >= 2 * lambda_g + 4)
    return over_range(lambda_g + 1, theta_g - 3 - lambda_g, [&](int i) { return dg(i) == 0; });
  return {};
}

}  // namespace

PairVerdict check_pair(const CiTriple& alpha, const DegreeSequence& delta) {
  const auto aci = aci_degrees(alpha, delta);  // rejects inadmissible pairs
  const auto data = mci_data(delta);
  const bool strict = aci.normalized;
  const bool at_mci = alpha == data.mci;

  const auto h_z = ci_hf(alpha);
  const auto h_g = gorenstein_hf(delta);
  const auto dz = difference(h_z, 1);
  const auto dg = difference(h_g, 1);
  const auto d2g = difference(h_g, 2);
  const int theta_z = alpha.theta();
  const int theta_g = delta.theta();
  const int lambda_z = lambda(h_z);
  const int lambda_g = lambda(h_g);

  PairVerdict v{alpha, delta, std::nullopt, {}, 0, false, strict, {}};
  auto& checks = v.checks;

  checks[check::kHzDominatesHg] =
      over_range(0, theta_z - 3, [&](int j) { return h_z(j) >= h_g(j); });

  v.tau = tau(alpha, delta);
  if (checks[check::kHzDominatesHg].ok) {
    v.h_q = link_hf(alpha, delta).h_q;
    v.wls = is_wls(*v.h_q);
  }
  checks[check::kWls] = {v.wls.is_wls, true, v.wls.first_violation_degree};

  v.claim_ok = v.tau > theta_g - delta.d(2) - 1;
  checks[check::kTauClaim] = {v.claim_ok, strict, std::nullopt};

  checks[check::kLowDegreeDomination] =
      over_range(0, theta_z - 3 - lambda_z, [&](int n) { return dz(n) >= dg(n); });
  checks[check::kThetaLambdaGap] = {theta_z - theta_g >= lambda_z - lambda_g, true, std::nullopt};
  checks[check::kTauLowerBounds] = {
      v.tau > theta_z - 3 - lambda_z && v.tau > theta_g - 3 - lambda_g, true, std::nullopt};

  if (at_mci && data.b_set.empty()) {
    if (data.c_set.empty()) {
      auto r = over_range(delta.d(3), theta_g - delta.d(3) - 1, [&](int i) { return d2g(i) <= -2; });
      r.required = strict;
      checks[check::kSecondDiffSteep] = r;
    } else {
      const int d_gamma = delta.d(data.c_set.back());
      auto r = over_range(delta.d(2), d_gamma - 1, [&](int i) { return d2g(i) <= -1; });
      r.required = strict;
      checks[check::kSecondDiffDescending] = r;
    }
  }
  if (at_mci) {
    auto r = over_range(0, theta_g - delta.d(2) - 1, [&](int i) { return dg(i) <= dz(i); });
    r.required = strict;
    checks[check::kMciDomination] = r;
  }

  checks[check::kGorensteinShape] = gorenstein_shape(dg, theta_g, lambda_g);
  return v;
}

std::vector<DegreeSequence> enumerate_deltas(int d_max, int m_max) {
  std::vector<DegreeSequence> out;
  for (int m = 1; m <= m_max; ++m) {
    const int n = 2 * m + 1;
    std::vector<int> seq(static_cast<std::size_t>(n), 1);
    for (;;) {
      if (std::accumulate(seq.begin(), seq.end(), 0) % m == 0) {
        try {
          out.push_back(validate_gaeta(seq));
        } catch (const Error&) {
        }
      }
      // next nondecreasing sequence in lexicographic order
      int pos = n - 1;
      while (pos >= 0 && seq[static_cast<std::size_t>(pos)] == d_max) --pos;
      if (pos < 0) break;
      const int next = seq[static_cast<std::size_t>(pos)] + 1;
      std::fill(seq.begin() + pos, seq.end(), next);
    }
  }
  return out;
}

namespace {

struct Partial {
  std::int64_t pairs_checked = 0;
  std::vector<PairVerdict> failures;
  std::vector<PairVerdict> verdicts;
  std::set<std::vector<Value>> hq;
};

bool canonical_less(const PairVerdict& a, const PairVerdict& b) {
  return std::tie(a.delta, a.alpha) < std::tie(b.delta, b.alpha);
}

void relax_to_informational(PairVerdict& v) {
  for (const char* name : {check::kTauClaim, check::kSecondDiffSteep, check::kSecondDiffDescending,
                           check::kMciDomination}) {
    if (auto it = v.checks.find(name); it != v.checks.end()) it->second.required = false;
  }
}

void sweep_delta(const SweepConfig& config, const DegreeSequence& delta, bool keep, Partial& out) {
  const auto mci = mci_data(delta).mci;
  const int k = config.alpha_offset;
  for (int a1 = mci.a1(); a1 <= mci.a1() + k; ++a1) {
    for (int a2 = std::max(a1, mci.a2()); a2 <= mci.a2() + k; ++a2) {
      for (int a3 = std::max(a2, mci.a3()); a3 <= mci.a3() + k; ++a3) {
        const int theta_z = a1 + a2 + a3;
        if (theta_z <= delta.theta()) continue;
        if (config.enforce_normalization && theta_z - delta.theta() > a1) continue;
        auto v = check_pair(CiTriple(a1, a2, a3), delta);
        if (!config.enforce_normalization) relax_to_informational(v);
        ++out.pairs_checked;
        if (v.h_q) out.hq.emplace(v.h_q->values().begin(), v.h_q->values().end());
        if (!v.passed()) out.failures.push_back(v);
        if (keep) out.verdicts.push_back(std::move(v));
      }
    }
  }
}

}  // namespace

SweepReport sweep(const SweepConfig& config, unsigned workers, bool keep_verdicts) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();

  std::vector<DegreeSequence> deltas;
  for (auto& delta : enumerate_deltas(config.d_max, config.m_max)) {
    if (config.enforce_normalization) {
      const auto data = mci_data(delta);
      if (!data.reduced || !data.b_set.empty()) continue;
    }
    deltas.push_back(std::move(delta));
  }

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(deltas.size(), 1)));
  std::vector<Partial> partials(workers);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < deltas.size(); i += workers)
            sweep_delta(config, deltas[i], keep_verdicts, partials[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  SweepReport report;
  report.config = config;
  report.deltas_enumerated = static_cast<std::int64_t>(deltas.size());
  std::set<std::vector<Value>> hq;
  for (auto& p : partials) {
    report.pairs_checked += p.pairs_checked;
    std::move(p.failures.begin(), p.failures.end(), std::back_inserter(report.failures));
    std::move(p.verdicts.begin(), p.verdicts.end(), std::back_inserter(report.verdicts));
    hq.merge(p.hq);
  }
  std::sort(report.failures.begin(), report.failures.end(), canonical_less);
  std::sort(report.verdicts.begin(), report.verdicts.end(), canonical_less);
  report.distinct_hq = static_cast<std::int64_t>(hq.size());
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace lefschetz
