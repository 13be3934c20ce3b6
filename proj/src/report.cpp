#include "lefschetz/report.hpp"

#include <ostream>
#include <sstream>

#include "lefschetz/error.hpp"

namespace lefschetz {

using nlohmann::json;

namespace {

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class Range>
std::string comma_list(const Range& values) {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : values) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  return os.str();
}

}  // namespace

json to_json(const WlsVerdict& verdict) {
  return {{"is_unimodal", verdict.is_unimodal},
          {"unimodality_index", optional_json(verdict.unimodality_index)},
          {"o_sequence_ok", verdict.o_sequence_ok},
          {"first_violation_degree", optional_json(verdict.first_violation_degree)},
          {"is_wls", verdict.is_wls}};
}

json to_json(const MciData& data) {
  return {{"b_set", data.b_set},
          {"c_set", data.c_set},
          {"mci", data.mci.degrees()},
          {"reduced", data.reduced}};
}

json to_json(const PairVerdict& verdict) {
  json checks = json::object();
  for (const auto& [name, r] : verdict.checks)
    checks[name] = {{"ok", r.ok}, {"required", r.required}, {"degree", optional_json(r.degree)}};
  json hq = verdict.h_q ? json(verdict.h_q->values()) : json(nullptr);
  return {{"alpha", verdict.alpha.degrees()},
          {"delta", verdict.delta.degrees()},
          {"hq", std::move(hq)},
          {"wls", to_json(verdict.wls)},
          {"tau", verdict.tau},
          {"claim_ok", verdict.claim_ok},
          {"normalized", verdict.normalized},
          {"checks", std::move(checks)},
          {"failed_checks", verdict.failed_checks()}};
}

json to_json(const SweepConfig& config) {
  return {{"d_max", config.d_max},
          {"m_max", config.m_max},
          {"alpha_offset", config.alpha_offset},
          {"enforce_normalization", config.enforce_normalization}};
}

json to_json(const SweepReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures) failures.push_back(to_json(f));
  return {{"config", to_json(report.config)},
          {"deltas_enumerated", report.deltas_enumerated},
          {"pairs_checked", report.pairs_checked},
          {"failures", std::move(failures)},
          {"distinct_hq", report.distinct_hq},
          {"elapsed_ms", report.elapsed_ms}};
}

SweepConfig sweep_config_from_json(const json& j) {
  if (!j.is_object()) throw Error(Errc::InvalidConfig, "sweep config must be a JSON object");
  SweepConfig config;
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "d_max")
        config.d_max = value.get<int>();
      else if (key == "m_max")
        config.m_max = value.get<int>();
      else if (key == "alpha_offset")
        config.alpha_offset = value.get<int>();
      else if (key == "enforce_normalization")
        config.enforce_normalization = value.get<bool>();
      else
        throw Error(Errc::InvalidConfig, "unknown key '" + key + "'");
    } catch (const json::exception& e) {
      throw Error(Errc::InvalidConfig, "bad value for '" + key + "': " + e.what());
    }
  }
  config.validate();
  return config;
}

void write_csv(std::ostream& os, const std::vector<PairVerdict>& verdicts) {
  os << "delta,alpha,hq,tau,claim_ok,wls,failed_checks\n";
  for (const auto& v : verdicts) {
    std::string hq = v.h_q ? comma_list(v.h_q->values()) : std::string{};
    std::string failed;
    for (const auto& name : v.failed_checks()) failed += (failed.empty() ? "" : ";") + name;
    os << '"' << comma_list(v.delta.degrees()) << "\",\"" << comma_list(v.alpha.degrees())
       << "\",\"" << hq << "\"," << v.tau << ',' << (v.claim_ok ? "true" : "false") << ','
       << (v.wls.is_wls ? "true" : "false") << ',' << failed << '\n';
  }
}

}  // namespace lefschetz
