#include "lefschetz/error.hpp"

namespace lefschetz {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyFunction: return "EmptyFunction";
    case Errc::NotStandardGraded: return "NotStandardGraded";
    case Errc::NegativeEntry: return "NegativeEntry";
    case Errc::InvalidIndex: return "InvalidIndex";
    case Errc::InvalidOrder: return "InvalidOrder";
    case Errc::NotSorted: return "NotSorted";
    case Errc::EvenLength: return "EvenLength";
    case Errc::NonPositiveDegree: return "NonPositiveDegree";
    case Errc::NonIntegerTheta: return "NonIntegerTheta";
    case Errc::PairBound: return "PairBound";
    case Errc::WouldEmptySequence: return "WouldEmptySequence";
    case Errc::RegorEmpty: return "RegorEmpty";
    case Errc::TrivialLink: return "TrivialLink";
    case Errc::NegativeValue: return "NegativeValue";
    case Errc::NotArtinian: return "NotArtinian";
    case Errc::DuplicateGenerator: return "DuplicateGenerator";
    case Errc::InvalidGenerator: return "InvalidGenerator";
    case Errc::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

namespace {

std::string format_message(Errc code, const std::string& detail, std::optional<int> index) {
  std::string msg(errc_name(code));
  if (index) msg += "(" + std::to_string(*index) + ")";
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}

}  // namespace

Error::Error(Errc code, const std::string& detail, std::optional<int> index)
    : std::runtime_error(format_message(code, detail, index)), code_(code), index_(index) {}

}  // namespace lefschetz
