#include "lefschetz/hilbert_seq.hpp"

#include <algorithm>
#include <numeric>

#include "lefschetz/error.hpp"

namespace lefschetz {

Value binomial(Value n, Value k) {
  if (k < 0 || n < 0 || n < k) return 0;
  k = std::min(k, n - k);
  Value result = 1;
  for (Value j = 1; j <= k; ++j) result = result * (n - k + j) / j;
  return result;
}

HilbertFunction::HilbertFunction(std::vector<Value> values) : values_(std::move(values)) {
  while (!values_.empty() && values_.back() == 0) values_.pop_back();
  if (values_.empty()) throw Error(Errc::EmptyFunction, "Hilbert function is identically zero");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0)
      throw Error(Errc::NegativeEntry, "negative value at degree " + std::to_string(i),
                  static_cast<int>(i));
  }
  if (values_.front() != 1)
    throw Error(Errc::NotStandardGraded, "H(0) must be 1, got " + std::to_string(values_.front()));
}

Value HilbertFunction::total() const noexcept {
  return std::accumulate(values_.begin(), values_.end(), Value{0});
}

DifferenceSequence::DifferenceSequence(std::vector<Value> values, int order)
    : values_(std::move(values)), order_(order) {
  if (order_ < 1) throw Error(Errc::InvalidOrder, "difference order must be positive");
}

namespace {

std::vector<Value> raw_difference(std::span<const Value> in) {
  std::vector<Value> out(in.size() + 1);
  Value prev = 0;
  for (std::size_t i = 0; i < in.size(); ++i) {
    out[i] = in[i] - prev;
    prev = in[i];
  }
  out[in.size()] = -prev;
  return out;
}

}  // namespace

DifferenceSequence difference(const HilbertFunction& h, int order) {
  if (order != 1 && order != 2)
    throw Error(Errc::InvalidOrder, "order must be 1 or 2, got " + std::to_string(order));
  DifferenceSequence first(raw_difference(h.values()), 1);
  return order == 1 ? first : difference(first);
}

DifferenceSequence difference(const DifferenceSequence& d) {
  auto out = raw_difference(d.values());
  while (!out.empty() && out.back() == 0) out.pop_back();
  return DifferenceSequence(std::move(out), d.order() + 1);
}

DifferenceSequence positive_part(const DifferenceSequence& d) {
  std::vector<Value> out(d.values().begin(), d.values().end());
  for (auto& v : out) v = std::max<Value>(v, 0);
  return DifferenceSequence(std::move(out), d.order());
}

int theta(const HilbertFunction& h) { return h.last_degree() + 3; }

int lambda(const HilbertFunction& h) {
  const auto d = difference(h, 1);
  for (int i = d.size() - 1; i >= 0; --i)
    if (d(i) > 0) return i;
  // Unreachable for a valid Hilbert function: d(0) = H(0) = 1.
  throw Error(Errc::EmptyFunction, "no positive first difference");
}

Unimodality is_unimodal(std::span<const Value> seq) {
  const int n = static_cast<int>(seq.size());
  int u = 0;
  while (u + 1 < n && seq[u] < seq[u + 1]) ++u;
  for (int i = u; i + 1 < n; ++i)
    if (seq[i] < seq[i + 1]) return {false, std::nullopt};
  // the implicit zeros past the range must not be a rise
  if (n > 0 && seq[n - 1] < 0) return {false, std::nullopt};
  return {true, u};
}

Value macaulay_bound(Value v, int i) {
  if (i < 1) throw Error(Errc::InvalidIndex, "Macaulay index must be >= 1", i);
  if (v < 0) throw Error(Errc::NegativeEntry, "Macaulay bound of a negative value");
  Value bound = 0;
  for (Value k = i; v > 0 && k >= 1; --k) {
    Value m = k;
    while (binomial(m + 1, k) <= v) ++m;
    bound += binomial(m + 1, k + 1);
    v -= binomial(m, k);
  }
  return bound;
}

OSequenceCheck is_o_sequence(std::span<const Value> seq) {
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (seq[i] < 0)
      throw Error(Errc::NegativeEntry, "O-sequence test on negative entry", static_cast<int>(i));
  if (seq.empty() || seq[0] != 1) return {false, 0};
  for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
    if (seq[i + 1] > macaulay_bound(seq[i], static_cast<int>(i)))
      return {false, static_cast<int>(i + 1)};
  }
  return {true, std::nullopt};
}

WlsVerdict is_wls(const HilbertFunction& h) {
  WlsVerdict verdict;
  const auto uni = is_unimodal(h);
  verdict.is_unimodal = uni.unimodal;
  verdict.unimodality_index = uni.peak;
  const auto oseq = is_o_sequence(positive_part(difference(h, 1)));
  verdict.o_sequence_ok = oseq.ok;
  verdict.first_violation_degree = oseq.first_violation_degree;
  verdict.is_wls = verdict.is_unimodal && verdict.o_sequence_ok;
  return verdict;
}

}  // namespace lefschetz
