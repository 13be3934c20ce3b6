#include "lefschetz/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "lefschetz/complete_intersection.hpp"
#include "lefschetz/error.hpp"
#include "lefschetz/gorenstein.hpp"
#include "lefschetz/hilbert_seq.hpp"
#include "lefschetz/liaison.hpp"
#include "lefschetz/monomial_oracle.hpp"
#include "lefschetz/report.hpp"
#include "lefschetz/verifier.hpp"

namespace lefschetz::cli {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_degrees(const std::string& text) {
  std::vector<int> out;
  for (long long v : parse_int_list(text)) {
    if (v > 1'000'000) throw UsageError("degree " + std::to_string(v) + " is too large");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

unsigned sweep_workers() {
  const char* env = std::getenv("LEFSCHETZ_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  const std::string text(env);
  unsigned value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0)
    throw UsageError("LEFSCHETZ_THREADS must be a positive integer, got '" + text + "'");
  return value;
}

json ci_json(const CiTriple& alpha) {
  const auto hf = ci_hf(alpha);
  const auto stats = ci_lambda_stats(alpha);
  return {{"hf", hf.values()},
          {"delta", difference(hf, 1).values()},
          {"theta", theta(hf)},
          {"lambda", stats.lambda},
          {"delta_at_lambda", stats.delta_at_lambda}};
}

json gor_json(const DegreeSequence& delta) {
  const auto hf = gorenstein_hf(delta);
  json j = to_json(mci_data(delta));
  j["theta"] = delta.theta();
  j["hf"] = hf.values();
  j["lambda"] = lambda(hf);
  return j;
}

}  // namespace

std::vector<long long> parse_int_list(const std::string& text) {
  if (text.empty()) throw UsageError("empty integer list");
  std::vector<long long> out;
  std::size_t pos = 0;
  for (;;) {
    const auto comma = text.find(',', pos);
    const auto token = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw UsageError("'" + token + "' is not an integer");
    if (v < 0)
      throw Error(Errc::NegativeEntry, "negative entry " + token, static_cast<int>(out.size()));
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert functions of codimension-3 Artinian algebras and Weak Lefschetz checks",
               "lefschetz"};
  app.require_subcommand(1);

  std::string degrees, ci_degrees, gor_degrees, sequence, gens, out_file, csv_file, config_file;
  bool expect_wls = false;
  bool no_normalization = false;
  SweepConfig config;

  auto* ci = app.add_subcommand("ci", "complete intersection Hilbert function");
  ci->add_option("--degrees", degrees, "a1,a2,a3")->required();
  auto* gor = app.add_subcommand("gor", "Gorenstein Hilbert function from a degree sequence");
  gor->add_option("--degrees", degrees, "d1,...,d_{2m+1}")->required();
  auto* mci = app.add_subcommand("mci", "B/C index sets and the minimal CI triple");
  mci->add_option("--degrees", degrees, "d1,...,d_{2m+1}")->required();
  auto* red = app.add_subcommand("reduce", "strip ghost pairs from a degree sequence");
  red->add_option("--degrees", degrees, "d1,...,d_{2m+1}")->required();
  auto* link = app.add_subcommand("link", "residual Hilbert function of Z : G");
  link->add_option("--ci", ci_degrees, "a1,a2,a3")->required();
  link->add_option("--gor", gor_degrees, "d1,...,d_{2m+1}")->required();
  link->add_flag("--expect-wls", expect_wls, "exit 1 unless H_Q is a Weak Lefschetz sequence");
  auto* chk = app.add_subcommand("check", "Weak Lefschetz sequence verdict");
  chk->add_option("--sequence", sequence, "h0,h1,...")->required();
  chk->add_flag("--expect-wls", expect_wls, "exit 1 unless the verdict is true");
  auto* mono = app.add_subcommand("monomial-hf", "Hilbert function of a monomial quotient");
  mono->add_option("--gens", gens, "g:g:g,...")->required();
  mono->add_flag("--expect-wls", expect_wls, "exit 1 unless the verdict is true");
  auto* sw = app.add_subcommand("sweep", "exhaustive verification over bounded parameters");
  sw->add_option("--config", config_file, "JSON file with sweep settings (flags override)");
  auto* d_max_opt = sw->add_option("--d-max", config.d_max, "largest Gorenstein degree");
  auto* m_max_opt = sw->add_option("--m-max", config.m_max, "largest m (length 2m+1)");
  auto* offset_opt = sw->add_option("--offset", config.alpha_offset, "CI box above mci(delta)");
  sw->add_flag("--no-normalization", no_normalization, "sweep all admissible pairs");
  sw->add_option("--out", out_file, "write the JSON report here instead of stdout");
  sw->add_option("--csv", csv_file, "write one CSV row per checked pair");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    msg = msg.substr(0, msg.find('\n'));
    err << "error: " << msg << '\n';
    return kExitInvalidInput;
  }

  try {
    if (ci->parsed()) {
      emit(out, ci_json(CiTriple::from(parse_degrees(degrees))));
    } else if (gor->parsed()) {
      emit(out, gor_json(validate_gaeta(parse_degrees(degrees))));
    } else if (mci->parsed()) {
      auto data = to_json(mci_data(validate_gaeta(parse_degrees(degrees))));
      data.erase("reduced");
      emit(out, data);
    } else if (red->parsed()) {
      const auto delta = validate_gaeta(parse_degrees(degrees));
      const auto reduced = reduce(delta);
      emit(out, {{"reduced_degrees", reduced.degrees()},
                 {"hf_preserved", gorenstein_hf(reduced) == gorenstein_hf(delta)}});
    } else if (link->parsed()) {
      const auto alpha = CiTriple::from(parse_degrees(ci_degrees));
      const auto delta = validate_gaeta(parse_degrees(gor_degrees));
      const auto pair = link_hf(alpha, delta);
      const auto aci = aci_degrees(alpha, delta);
      const auto verdict = is_wls(pair.h_q);
      emit(out, {{"hq", pair.h_q.values()},
                 {"tau", pair.tau},
                 {"e_degrees", aci.e},
                 {"normalized", aci.normalized},
                 {"wls", to_json(verdict)}});
      if (expect_wls && !verdict.is_wls) return kExitVerificationFailed;
    } else if (chk->parsed()) {
      const auto values = parse_int_list(sequence);
      const auto verdict = is_wls(HilbertFunction(std::vector<Value>(values.begin(), values.end())));
      emit(out, to_json(verdict));
      if (expect_wls && !verdict.is_wls) return kExitVerificationFailed;
    } else if (mono->parsed()) {
      const auto hf = monomial_hf(MonomialIdealSpec::parse(gens));
      const auto verdict = is_wls(hf);
      emit(out, {{"hf", hf.values()}, {"wls", to_json(verdict)}});
      if (expect_wls && !verdict.is_wls) return kExitVerificationFailed;
    } else if (sw->parsed()) {
      SweepConfig effective;
      if (!config_file.empty()) {
        std::ifstream in(config_file);
        if (!in) throw UsageError("cannot open config file '" + config_file + "'");
        json j;
        try {
          in >> j;
        } catch (const json::parse_error&) {
          throw Error(Errc::InvalidConfig, "config file is not valid JSON");
        }
        effective = sweep_config_from_json(j);
      }
      if (d_max_opt->count() > 0) effective.d_max = config.d_max;
      if (m_max_opt->count() > 0) effective.m_max = config.m_max;
      if (offset_opt->count() > 0) effective.alpha_offset = config.alpha_offset;
      if (no_normalization) effective.enforce_normalization = false;
      effective.validate();

      const auto report = sweep(effective, sweep_workers(), !csv_file.empty());
      if (out_file.empty()) {
        emit(out, to_json(report));
      } else {
        std::ofstream f(out_file);
        if (!f) throw UsageError("cannot write '" + out_file + "'");
        emit(f, to_json(report));
      }
      if (!csv_file.empty()) {
        std::ofstream f(csv_file);
        if (!f) throw UsageError("cannot write '" + csv_file + "'");
        write_csv(f, report.verdicts);
      }
      if (!report.failures.empty()) return kExitVerificationFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  return kExitOk;
}

}  // namespace lefschetz::cli
