#pragma once

#include <iosfwd>

#include "json.hpp"

#include "lefschetz/gorenstein.hpp"
#include "lefschetz/hilbert_seq.hpp"
#include "lefschetz/verifier.hpp"

namespace lefschetz {

// JSON encodings. Keys come out sorted (nlohmann's default object type), so
// re-serializing a document is byte-stable.
nlohmann::json to_json(const WlsVerdict& verdict);
nlohmann::json to_json(const MciData& data);
nlohmann::json to_json(const PairVerdict& verdict);
nlohmann::json to_json(const SweepConfig& config);
nlohmann::json to_json(const SweepReport& report);

/// Missing keys keep their defaults; unknown keys are rejected.
SweepConfig sweep_config_from_json(const nlohmann::json& j);

/// One row per verdict: delta,alpha,hq,tau,claim_ok,wls,failed_checks.
/// Sequence-valued fields are quoted comma lists; failed checks are joined
/// with ';'.
void write_csv(std::ostream& os, const std::vector<PairVerdict>& verdicts);

}  // namespace lefschetz
