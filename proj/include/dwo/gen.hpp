#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dwo/error.hpp"
#include "dwo/relations.hpp"

namespace dwo::gen {

/// SplitMix64. Each draw adds 0x9E3779B97F4A7C15 to the state and mixes:
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound): high word of next() * bound.
  std::uint64_t below(std::uint64_t bound) noexcept {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  /// Top bit of next().
  bool coin() noexcept { return (next() >> 63) != 0; }

 private:
  std::uint64_t state_;
};

enum class Model { dichotomous, weak_order, complete_relation, reflexive_relation };

inline constexpr Model kAllModels[] = {Model::dichotomous, Model::weak_order,
                                       Model::complete_relation, Model::reflexive_relation};

inline std::string_view to_string(Model m) {
  switch (m) {
    case Model::dichotomous: return "dichotomous";
    case Model::weak_order: return "weak_order";
    case Model::complete_relation: return "complete_relation";
    case Model::reflexive_relation: return "reflexive_relation";
  }
  return "?";
}

inline std::optional<Model> parse_model(std::string_view s) {
  for (auto m : kAllModels)
    if (to_string(m) == s) return m;
  return std::nullopt;
}

/// Names a0, a1, ... for generated universes.
inline Universe generated_universe(std::size_t m) {
  std::vector<std::string> names;
  names.reserve(m);
  for (std::size_t i = 0; i < m; ++i) names.push_back("a" + std::to_string(i));
  return make_universe(std::move(names));
}

namespace detail {

// Coin per alternative: heads goes to the bottom class.
inline BinaryRelation dichotomous_voter(const Universe& u, SplitMix64& rng) {
  std::vector<std::size_t> top, bottom;
  for (std::size_t i = 0; i < u->size(); ++i) (rng.coin() ? bottom : top).push_back(i);
  std::vector<std::vector<std::size_t>> tiers;
  if (!top.empty()) tiers.push_back(std::move(top));
  if (!bottom.empty()) tiers.push_back(std::move(bottom));
  return relation_from_tiers(u, tiers);
}

// Fisher-Yates ranking (i from m-1 down to 1, swap with below(i+1)), then a
// coin per adjacent gap: heads starts a new tier.
inline BinaryRelation weak_order_voter(const Universe& u, SplitMix64& rng) {
  const std::size_t m = u->size();
  std::vector<std::size_t> perm(m);
  for (std::size_t i = 0; i < m; ++i) perm[i] = i;
  for (std::size_t i = m - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
  std::vector<std::vector<std::size_t>> tiers{{perm[0]}};
  for (std::size_t i = 1; i < m; ++i) {
    if (rng.coin()) tiers.emplace_back();
    tiers.back().push_back(perm[i]);
  }
  return relation_from_tiers(u, tiers);
}

// Per unordered pair a < b (row-major): below(3) = 0 a over b, 1 b over a, 2 tie.
inline BinaryRelation complete_voter(const Universe& u, SplitMix64& rng) {
  BinaryRelation r(u);
  for (std::size_t a = 0; a < u->size(); ++a) {
    for (std::size_t b = a + 1; b < u->size(); ++b) {
      const auto k = rng.below(3);
      if (k != 1) r.add(a, b);
      if (k != 0) r.add(b, a);
    }
  }
  return r;
}

// Per ordered pair a != b (row-major): coin heads adds (a,b).
inline BinaryRelation reflexive_voter(const Universe& u, SplitMix64& rng) {
  BinaryRelation r(u);
  for (std::size_t a = 0; a < u->size(); ++a)
    for (std::size_t b = 0; b < u->size(); ++b)
      if (a != b && rng.coin()) r.add(a, b);
  return r;
}

}  // namespace detail

/// Deterministic in (m, n, model, seed); voters are drawn in order from one stream.
inline Profile gen_profile(std::size_t m, std::size_t n, Model model, std::uint64_t seed) {
  if (m == 0 || n == 0) throw ValidationError("generator needs m >= 1 and n >= 1");
  auto u = generated_universe(m);
  SplitMix64 rng(seed);
  std::vector<BinaryRelation> voters;
  voters.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    switch (model) {
      case Model::dichotomous: voters.push_back(detail::dichotomous_voter(u, rng)); break;
      case Model::weak_order: voters.push_back(detail::weak_order_voter(u, rng)); break;
      case Model::complete_relation: voters.push_back(detail::complete_voter(u, rng)); break;
      case Model::reflexive_relation: voters.push_back(detail::reflexive_voter(u, rng)); break;
    }
  }
  return Profile(std::move(u), std::move(voters));
}

}  // namespace dwo::gen
