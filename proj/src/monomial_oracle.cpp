#include "lefschetz/monomial_oracle.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <string>

#include "lefschetz/error.hpp"

namespace lefschetz {

MonomialIdealSpec::MonomialIdealSpec(std::vector<Exponent> generators)
    : generators_(std::move(generators)) {
  constexpr int none = std::numeric_limits<int>::max();
  pure_powers_ = {none, none, none};
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    const auto& e = generators_[g];
    if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; }))
      throw Error(Errc::InvalidGenerator, "negative exponent", static_cast<int>(g));
    if (e == Exponent{0, 0, 0})
      throw Error(Errc::InvalidGenerator, "the unit monomial is not allowed", static_cast<int>(g));
    if (std::find(generators_.begin(), generators_.begin() + static_cast<std::ptrdiff_t>(g), e) !=
        generators_.begin() + static_cast<std::ptrdiff_t>(g))
      throw Error(Errc::DuplicateGenerator, "repeated generator", static_cast<int>(g));
    const auto nonzero = std::count_if(e.begin(), e.end(), [](int x) { return x > 0; });
    if (nonzero == 1) {
      for (int v = 0; v < 3; ++v)
        if (e[v] > 0) pure_powers_[v] = std::min(pure_powers_[v], e[v]);
    }
  }
  for (int v = 0; v < 3; ++v)
    if (pure_powers_[v] == none)
      throw Error(Errc::NotArtinian, "no pure power of x" + std::to_string(v + 1), v + 1);
}

MonomialIdealSpec MonomialIdealSpec::parse(std::string_view text) {
  std::vector<Exponent> gens;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto token = text.substr(0, comma);
    Exponent e{};
    auto rest = token;
    for (int v = 0; v < 3; ++v) {
      const auto colon = rest.find(':');
      if ((v < 2) == (colon == std::string_view::npos))
        throw Error(Errc::InvalidGenerator, "expected a:b:c, got '" + std::string(token) + "'");
      const auto field = rest.substr(0, colon);
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), e[v]);
      if (ec != std::errc{} || ptr != field.data() + field.size())
        throw Error(Errc::InvalidGenerator, "bad exponent in '" + std::string(token) + "'");
      rest = colon == std::string_view::npos ? std::string_view{} : rest.substr(colon + 1);
    }
    gens.push_back(e);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
  }
  return MonomialIdealSpec(std::move(gens));
}

HilbertFunction monomial_hf(const MonomialIdealSpec& spec) {
  const auto& p = spec.pure_powers();
  const int top = p[0] + p[1] + p[2];
  std::vector<Value> hf(static_cast<std::size_t>(top + 1), 0);
  for (int t = 0; t <= top; ++t) {
    for (int u1 = 0; u1 <= t; ++u1) {
      for (int u2 = 0; u1 + u2 <= t; ++u2) {
        const Exponent u{u1, u2, t - u1 - u2};
        const bool in_ideal = std::any_of(
            spec.generators().begin(), spec.generators().end(), [&](const Exponent& g) {
              return g[0] <= u[0] && g[1] <= u[1] && g[2] <= u[2];
            });
        if (!in_ideal) ++hf[static_cast<std::size_t>(t)];
      }
    }
  }
  return HilbertFunction(std::move(hf));
}

}  // namespace lefschetz
