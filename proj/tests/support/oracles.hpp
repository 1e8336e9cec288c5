#pragma once

// Test-only reference computations. They deliberately avoid the library's
// fast paths (bit packing, pair statistics, flow) so they can check them.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "dwo/mincut.hpp"
#include "dwo/relations.hpp"

namespace dwo::testing {

/// Disagreement count by visiting every ordered pair.
inline Count pairwise_distance(const BinaryRelation& r, const BinaryRelation& s) {
  Count c = 0;
  for (std::size_t a = 0; a < r.size(); ++a)
    for (std::size_t b = 0; b < r.size(); ++b) c += r.contains(a, b) != s.contains(a, b);
  return c;
}

/// Whether (a,b) belongs to the relation induced by a top/bottom assignment.
inline bool induced_contains(const std::vector<bool>& in_top, std::size_t a, std::size_t b) {
  return a == b || in_top[a] == in_top[b] || in_top[a];
}

inline Count pairwise_score(const Profile& p, const std::vector<bool>& in_top) {
  Count c = 0;
  for (const auto& r : p.voters())
    for (std::size_t a = 0; a < r.size(); ++a)
      for (std::size_t b = 0; b < r.size(); ++b) c += r.contains(a, b) != induced_contains(in_top, a, b);
  return c;
}

/// Minimum score over all top/bottom assignments; optionally both classes nonempty.
inline Count exhaustive_optimum(const Profile& p, bool nonempty = false) {
  const std::size_t m = p.alternatives();
  Count best = std::numeric_limits<Count>::max();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<bool> in_top(m);
    std::size_t tops = 0;
    for (std::size_t i = 0; i < m; ++i) tops += in_top[i] = (mask >> i) & 1U;
    if (nonempty && (tops == 0 || tops == m)) continue;
    best = std::min(best, pairwise_score(p, in_top));
  }
  return best;
}

/// Minimum cut value by enumerating every s-t partition.
template <std::signed_integral Cap>
Cap enumerate_min_cut(const FlowNetwork<Cap>& net) {
  std::vector<std::size_t> free;
  for (std::size_t v = 0; v < net.node_count(); ++v)
    if (v != net.source() && v != net.sink()) free.push_back(v);
  Cap best = std::numeric_limits<Cap>::max();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    std::vector<bool> side(net.node_count(), false);
    side[net.source()] = true;
    for (std::size_t i = 0; i < free.size(); ++i) side[free[i]] = (mask >> i) & 1U;
    Cap c = 0;
    for (const auto& a : net.arcs())
      if (side[a.from] && !side[a.to]) c += a.capacity;
    best = std::min(best, c);
  }
  return best;
}

/// Random network on `nodes` nodes, source 0, sink nodes-1.
inline FlowNetwork<std::int64_t> random_network(std::mt19937_64& rng, std::size_t nodes,
                                                std::size_t arcs, std::int64_t max_cap) {
  FlowNetwork<std::int64_t> net(nodes, 0, nodes - 1);
  std::uniform_int_distribution<std::size_t> node(0, nodes - 1);
  std::uniform_int_distribution<std::int64_t> cap(0, max_cap);
  for (std::size_t i = 0; i < arcs; ++i) {
    std::size_t u = node(rng), v = node(rng);
    if (u == v) continue;
    net.add_arc(u, v, cap(rng));
  }
  return net;
}

}  // namespace dwo::testing
