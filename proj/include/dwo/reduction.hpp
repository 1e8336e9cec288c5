#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dwo/error.hpp"
#include "dwo/mincut.hpp"
#include "dwo/relations.hpp"

// Optimal dichotomous weak order for a complete profile via one minimum s-t cut.
//
// Literal network: nodes s, t, one node per alternative and one node v(a,b) per
// ordered pair. For every ordered pair (a,b):
//   s -> v(a,b) with N(a,b),  v(a,b) -> t with N(b,a),  a <-> v(a,b) with L,
// and for every unordered pair {a,b} one tie arc each way with E(a,b).
// The source side is the top class. With v(a,b) glued to a, a cut charges
// 2N(b,a) + E(a,b) when a is above b and N(a,b) + N(b,a) when they share a
// class, which is exactly the disagreement count of the order.
//
// Contracted network: each v(a,b) merged into a, giving s -> a with
// sum_b N(a,b), a -> t with sum_b N(b,a) and a -> b with E(a,b).

namespace dwo {

enum class Variant { literal, contracted };

inline std::string_view to_string(Variant v) {
  return v == Variant::literal ? "literal" : "contracted";
}

inline std::optional<Variant> parse_variant(std::string_view s) {
  if (s == "literal") return Variant::literal;
  if (s == "contracted") return Variant::contracted;
  return std::nullopt;
}

inline constexpr std::size_t kNoNode = std::numeric_limits<std::size_t>::max();

struct NetworkLayout {
  Variant variant;
  std::size_t source;
  std::size_t sink;
  std::vector<std::size_t> node_of_alternative;
  SquareMatrix<std::size_t> node_of_pair;  // literal only; kNoNode on the diagonal
  std::optional<Count> big_l;              // literal only
  std::size_t node_count;
};

struct PairCost {
  std::size_t first;   // the preferred alternative for strict pairs
  std::size_t second;
  bool tied;
  Count cost;
};

struct SolveResult {
  DichotomousOrder order;
  Count disagreements;
  Count cut_capacity;
  std::optional<std::vector<PairCost>> per_pair;
};

namespace detail {

inline Count checked_add(Count x, Count y) {
  if (x > std::numeric_limits<Count>::max() - y)
    throw CapacityOverflow("weight sum exceeds the arithmetic width");
  return x + y;
}

inline void require_complete(const PairStats& st) {
  if (auto bad = st.incomplete_pair())
    throw IncompleteRelationError(std::nullopt, bad->first, bad->second,
                                  "statistics contain incomparable pairs; the cut reduction "
                                  "needs complete relations");
}

}  // namespace detail

/// Throws IncompleteRelationError naming the first voter and pair left incomparable.
inline void require_complete(const Profile& p) {
  for (std::size_t v = 0; v < p.size(); ++v) {
    if (auto bad = incomparable_pair(p[v])) {
      const auto& u = *p.universe();
      throw IncompleteRelationError(
          v, bad->first, bad->second,
          "voter " + std::to_string(v + 1) + " leaves (" + u.name(bad->first) + ", " +
              u.name(bad->second) + ") incomparable; use the exhaustive oracle for such profiles");
    }
  }
}

/// One more than the total weight of all non-L arcs of the literal network,
/// so any cut crossing an L-arc is dearer than every L-free cut.
inline Count choose_big_l(const PairStats& st) {
  const std::size_t m = st.alternatives();
  Count sum = 1;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      // v(a,b) and v(b,a) each carry N(a,b) and N(b,a) once; two tie arcs.
      const Count n_pair = detail::checked_add(st.n_strict(a, b), st.n_strict(b, a));
      sum = detail::checked_add(sum, n_pair);
      sum = detail::checked_add(sum, n_pair);
      sum = detail::checked_add(sum, st.e_tied(a, b));
      sum = detail::checked_add(sum, st.e_tied(b, a));
    }
  }
  return sum;
}

inline std::pair<FlowNetwork<Count>, NetworkLayout> build_literal_network(const PairStats& st) {
  detail::require_complete(st);
  const std::size_t m = st.alternatives();
  const Count big_l = choose_big_l(st);

  NetworkLayout layout{Variant::literal, 0, 1, {}, SquareMatrix<std::size_t>(m, kNoNode), big_l,
                       2 + m + m * (m - 1)};
  std::size_t next = 2;
  for (std::size_t a = 0; a < m; ++a) layout.node_of_alternative.push_back(next++);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (a != b) layout.node_of_pair(a, b) = next++;

  FlowNetwork<Count> net(layout.node_count, layout.source, layout.sink);
  net.reserve(5 * m * (m - 1));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) continue;
      const std::size_t v = layout.node_of_pair(a, b);
      const std::size_t x = layout.node_of_alternative[a];
      net.add_arc(layout.source, v, st.n_strict(a, b));
      net.add_arc(v, layout.sink, st.n_strict(b, a));
      net.add_arc(x, v, big_l);
      net.add_arc(v, x, big_l);
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      const std::size_t x = layout.node_of_alternative[a];
      const std::size_t y = layout.node_of_alternative[b];
      net.add_arc(x, y, st.e_tied(b, a));
      net.add_arc(y, x, st.e_tied(a, b));
    }
  }
  return {std::move(net), std::move(layout)};
}

inline std::pair<FlowNetwork<Count>, NetworkLayout> build_contracted_network(const PairStats& st) {
  detail::require_complete(st);
  const std::size_t m = st.alternatives();
  NetworkLayout layout{Variant::contracted, 0, 1, {}, SquareMatrix<std::size_t>(), std::nullopt,
                       2 + m};
  for (std::size_t a = 0; a < m; ++a) layout.node_of_alternative.push_back(2 + a);

  FlowNetwork<Count> net(layout.node_count, layout.source, layout.sink);
  net.reserve(2 * m + m * (m - 1));
  for (std::size_t a = 0; a < m; ++a) {
    Count out = 0, in = 0;
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) continue;
      out = detail::checked_add(out, st.n_strict(a, b));
      in = detail::checked_add(in, st.n_strict(b, a));
    }
    net.add_arc(layout.source, layout.node_of_alternative[a], out);
    net.add_arc(layout.node_of_alternative[a], layout.sink, in);
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (a != b)
        net.add_arc(layout.node_of_alternative[a], layout.node_of_alternative[b], st.e_tied(a, b));
  return {std::move(net), std::move(layout)};
}

/// Top class = alternatives on the source side.
inline DichotomousOrder extract_order(const CutResult<Count>& cut, const NetworkLayout& layout,
                                      const Universe& universe) {
  const std::size_t m = universe->size();
  if (layout.node_of_alternative.size() != m) throw UniverseMismatch();
  std::vector<bool> in_top(m);
  for (std::size_t a = 0; a < m; ++a) in_top[a] = cut.on_source_side(layout.node_of_alternative[a]);

  if (layout.variant == Variant::literal) {
    // The only L-arcs join a and v(a,b), so this also rules out a crossed L-arc.
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (a != b && cut.on_source_side(layout.node_of_pair(a, b)) != in_top[a])
          throw InternalError("minimum cut separates pair node (" + universe->name(a) + ", " +
                              universe->name(b) + ") from its alternative");
  }
  return DichotomousOrder(universe, std::move(in_top));
}

/// Cost of every unordered pair under o; strict pairs are listed top-first.
inline std::vector<PairCost> per_pair_breakdown(const PairStats& st, const DichotomousOrder& o) {
  const std::size_t m = st.alternatives();
  std::vector<PairCost> out;
  out.reserve(m * (m - 1) / 2);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      const bool tied = o.same_class(a, b);
      const bool a_first = tied || o.in_top(a);
      out.push_back({a_first ? a : b, a_first ? b : a, tied, pair_cost(st, o, a, b)});
    }
  }
  return out;
}

namespace detail {

inline SolveResult finish(const Profile& p, const PairStats& st, DichotomousOrder order,
                          Count cut_capacity, bool breakdown) {
  const Count disagreements = score(p, order);
  if (disagreements != cut_capacity)
    throw InternalError("cut capacity " + std::to_string(cut_capacity) +
                        " differs from the order's disagreements " + std::to_string(disagreements));
  SolveResult r{std::move(order), disagreements, cut_capacity, std::nullopt};
  if (breakdown) r.per_pair = per_pair_breakdown(st, r.order);
  return r;
}

}  // namespace detail

/// Order minimizing total disagreements (empty classes allowed). Requires a complete profile.
inline SolveResult solve(const Profile& p, Variant variant = Variant::contracted,
                         bool breakdown = false) {
  require_complete(p);
  const PairStats st = pair_stats(p);
  auto [net, layout] =
      variant == Variant::literal ? build_literal_network(st) : build_contracted_network(st);
  const auto cut = min_cut(net);
  return detail::finish(p, st, extract_order(cut, layout, p.universe()), cut.capacity, breakdown);
}

/// As solve(), restricted to orders with both classes nonempty. Needs m >= 2.
///
/// Runs one contracted cut per ordered pair (x, y) with x forced to the top
/// and y to the bottom by arcs of weight L; the cheapest cut wins, ties going
/// to the first pair in row-major order.
inline SolveResult solve_nonempty(const Profile& p, bool breakdown = false) {
  const std::size_t m = p.alternatives();
  if (m < 2) throw ValidationError("both classes nonempty needs at least two alternatives");
  require_complete(p);
  const PairStats st = pair_stats(p);
  const Count big_l = choose_big_l(st);
  const auto [base, layout] = build_contracted_network(st);

  std::optional<CutResult<Count>> best;
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (x == y) continue;
      FlowNetwork<Count> net = base;
      net.add_arc(layout.source, layout.node_of_alternative[x], big_l);
      net.add_arc(layout.node_of_alternative[y], layout.sink, big_l);
      auto cut = min_cut(net);
      if (cut.capacity >= big_l) throw InternalError("forced cut crosses a forcing arc");
      if (!best || cut.capacity < best->capacity) best = std::move(cut);
    }
  }
  return detail::finish(p, st, extract_order(*best, layout, p.universe()), best->capacity,
                        breakdown);
}

}  // namespace dwo
