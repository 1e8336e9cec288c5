#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dwo/error.hpp"
#include "dwo/reduction.hpp"
#include "dwo/relations.hpp"

// Exhaustive ground truth over all 2^m ordered bipartitions.
//
// Assignment masks read alternative 0 as the most significant of m bits,
// 0 = top and 1 = bottom. Enumeration runs over increasing masks, so for
// m = 2 the order is (ab | -), (a | b), (b | a), (- | ab).

namespace dwo::oracle {

inline constexpr std::size_t kDefaultCap = 16;

inline DichotomousOrder order_from_mask(const Universe& universe, std::uint64_t mask) {
  const std::size_t m = universe->size();
  std::vector<bool> in_top(m);
  for (std::size_t i = 0; i < m; ++i) in_top[i] = ((mask >> (m - 1 - i)) & 1U) == 0;
  return DichotomousOrder(universe, std::move(in_top));
}

namespace detail {

inline void check_cap(const Profile& p, std::size_t cap) {
  if (p.alternatives() > cap)
    throw CapExceeded("oracle enumerates 2^m orders and is capped at m = " + std::to_string(cap) +
                      " (got m = " + std::to_string(p.alternatives()) + "); use the cut solver");
}

}  // namespace detail

struct ScoredOrder {
  DichotomousOrder order;
  Count score;
};

inline std::vector<ScoredOrder> enumerate_scores(const Profile& p, std::size_t cap = kDefaultCap) {
  detail::check_cap(p, cap);
  const std::uint64_t count = std::uint64_t{1} << p.alternatives();
  std::vector<ScoredOrder> out;
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    auto o = order_from_mask(p.universe(), mask);
    const Count s = score(p, o);
    out.push_back({std::move(o), s});
  }
  return out;
}

/// Minimum-score order, lowest mask on ties. Valid for incomplete profiles too.
/// With `nonempty`, orders with an empty class are skipped (needs m >= 2).
inline SolveResult brute_force(const Profile& p, std::size_t cap = kDefaultCap,
                               bool nonempty = false) {
  detail::check_cap(p, cap);
  const std::size_t m = p.alternatives();
  if (nonempty && m < 2) throw ValidationError("both classes nonempty needs at least two alternatives");
  const std::uint64_t all_bottom = (std::uint64_t{1} << m) - 1;
  std::uint64_t best_mask = 0;
  Count best = -1;
  for (std::uint64_t mask = 0; mask <= all_bottom; ++mask) {
    if (nonempty && (mask == 0 || mask == all_bottom)) continue;
    const Count s = score(p, order_from_mask(p.universe(), mask));
    if (best < 0 || s < best) {
      best = s;
      best_mask = mask;
    }
  }
  return {order_from_mask(p.universe(), best_mask), best, best, std::nullopt};
}

}  // namespace dwo::oracle
