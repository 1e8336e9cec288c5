#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "dwo/error.hpp"

namespace dwo {

template <std::signed_integral Cap>
struct Arc {
  std::size_t from;
  std::size_t to;
  Cap capacity;
};

/// Capacitated digraph with a distinguished source and sink.
///
/// Antiparallel and parallel arcs are kept as given. The running total of all
/// capacities is checked against Cap, so every cut and flow value fits.
template <std::signed_integral Cap>
class FlowNetwork {
 public:
  FlowNetwork(std::size_t node_count, std::size_t source, std::size_t sink)
      : node_count_(node_count), source_(source), sink_(sink) {
    if (node_count < 2) throw ValidationError("flow network needs at least two nodes");
    if (source >= node_count || sink >= node_count)
      throw ValidationError("source or sink index out of range");
    if (source == sink) throw ValidationError("source and sink must differ");
  }

  /// Returns the arc's index.
  std::size_t add_arc(std::size_t from, std::size_t to, Cap capacity) {
    if (from >= node_count_ || to >= node_count_)
      throw ValidationError("arc endpoint out of range");
    if (capacity < 0) throw ValidationError("negative arc capacity");
    if (total_capacity_ > std::numeric_limits<Cap>::max() - capacity)
      throw CapacityOverflow("total arc capacity exceeds the capacity type");
    total_capacity_ += capacity;
    arcs_.push_back({from, to, capacity});
    return arcs_.size() - 1;
  }

  void reserve(std::size_t arcs) { arcs_.reserve(arcs); }

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t source() const noexcept { return source_; }
  std::size_t sink() const noexcept { return sink_; }
  const std::vector<Arc<Cap>>& arcs() const noexcept { return arcs_; }
  Cap total_capacity() const noexcept { return total_capacity_; }

 private:
  std::size_t node_count_;
  std::size_t source_;
  std::size_t sink_;
  std::vector<Arc<Cap>> arcs_;
  Cap total_capacity_ = 0;
};

/// Residual capacities left by a flow, in compressed adjacency form.
template <std::signed_integral Cap>
class ResidualGraph {
 public:
  struct Edge {
    std::size_t to;
    std::size_t reverse;
    Cap residual;
  };

  explicit ResidualGraph(const FlowNetwork<Cap>& net)
      : first_(net.node_count() + 1, 0), arc_edge_(net.arcs().size()) {
    const auto& arcs = net.arcs();
    for (const auto& a : arcs) {
      ++first_[a.from + 1];
      ++first_[a.to + 1];
    }
    for (std::size_t v = 0; v < net.node_count(); ++v) first_[v + 1] += first_[v];
    edges_.resize(2 * arcs.size());
    original_.resize(2 * arcs.size());
    std::vector<std::size_t> fill(first_.begin(), first_.end() - 1);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      const auto& a = arcs[i];
      const std::size_t fwd = fill[a.from]++;
      const std::size_t bwd = fill[a.to]++;
      edges_[fwd] = {a.to, bwd, a.capacity};
      edges_[bwd] = {a.from, fwd, 0};
      original_[fwd] = a.capacity;
      arc_edge_[i] = fwd;
    }
  }

  std::size_t node_count() const noexcept { return first_.size() - 1; }
  std::size_t begin(std::size_t v) const noexcept { return first_[v]; }
  std::size_t end(std::size_t v) const noexcept { return first_[v + 1]; }
  Edge& edge(std::size_t e) noexcept { return edges_[e]; }
  const Edge& edge(std::size_t e) const noexcept { return edges_[e]; }

  /// Flow currently routed along input arc i.
  Cap arc_flow(std::size_t i) const {
    const std::size_t e = arc_edge_.at(i);
    return original_[e] - edges_[e].residual;
  }

  /// Nodes reachable from `from` along edges with positive residual capacity.
  std::vector<bool> reachable_from(std::size_t from) const {
    std::vector<bool> seen(node_count(), false);
    std::vector<std::size_t> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t e = begin(v); e < end(v); ++e) {
        const auto& ed = edges_[e];
        if (ed.residual > 0 && !seen[ed.to]) {
          seen[ed.to] = true;
          stack.push_back(ed.to);
        }
      }
    }
    return seen;
  }

 private:
  std::vector<std::size_t> first_;
  std::vector<Edge> edges_;
  std::vector<Cap> original_;
  std::vector<std::size_t> arc_edge_;
};

template <std::signed_integral Cap>
struct FlowResult {
  Cap flow_value;
  ResidualGraph<Cap> residual;
};

template <std::signed_integral Cap>
struct CutResult {
  std::vector<bool> source_side;  // indexed by node
  Cap capacity;
  Cap flow_value;

  bool on_source_side(std::size_t v) const { return source_side.at(v); }
};

/// Sum of capacities of arcs leaving the node set marked in `side`.
template <std::signed_integral Cap>
Cap cut_capacity(const FlowNetwork<Cap>& net, const std::vector<bool>& side) {
  Cap total = 0;
  for (const auto& a : net.arcs())
    if (side[a.from] && !side[a.to]) total += a.capacity;
  return total;
}

namespace detail {

/// Blocking-flow (level graph) max-flow. Single use.
template <std::signed_integral Cap>
class BlockingFlowSolver {
 public:
  BlockingFlowSolver(ResidualGraph<Cap>& g, std::size_t source, std::size_t sink)
      : g_(g), source_(source), sink_(sink), level_(g.node_count()), next_(g.node_count()) {}

  Cap run() {
    Cap total = 0;
    while (build_levels()) {
      for (std::size_t v = 0; v < g_.node_count(); ++v) next_[v] = g_.begin(v);
      while (Cap pushed = augment(source_, std::numeric_limits<Cap>::max())) total += pushed;
    }
    return total;
  }

 private:
  static constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

  bool build_levels() {
    std::fill(level_.begin(), level_.end(), kUnreached);
    queue_.clear();
    queue_.push_back(source_);
    level_[source_] = 0;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const std::size_t v = queue_[head];
      for (std::size_t e = g_.begin(v); e < g_.end(v); ++e) {
        const auto& ed = g_.edge(e);
        if (ed.residual > 0 && level_[ed.to] == kUnreached) {
          level_[ed.to] = level_[v] + 1;
          queue_.push_back(ed.to);
        }
      }
    }
    return level_[sink_] != kUnreached;
  }

  // Depth is bounded by the sink's level.
  Cap augment(std::size_t v, Cap limit) {
    if (v == sink_) return limit;
    for (std::size_t& e = next_[v]; e < g_.end(v); ++e) {
      auto& ed = g_.edge(e);
      if (ed.residual <= 0 || level_[ed.to] != level_[v] + 1) continue;
      const Cap pushed = augment(ed.to, std::min(limit, ed.residual));
      if (pushed > 0) {
        ed.residual -= pushed;
        g_.edge(ed.reverse).residual += pushed;
        return pushed;
      }
    }
    return 0;
  }

  ResidualGraph<Cap>& g_;
  std::size_t source_;
  std::size_t sink_;
  std::vector<std::size_t> level_;
  std::vector<std::size_t> next_;
  std::vector<std::size_t> queue_;
};

}  // namespace detail

template <std::signed_integral Cap>
FlowResult<Cap> max_flow(const FlowNetwork<Cap>& net) {
  ResidualGraph<Cap> g(net);
  const Cap value = detail::BlockingFlowSolver<Cap>(g, net.source(), net.sink()).run();
  return {value, std::move(g)};
}

/// Minimum s-t cut whose source side is the residual-reachable set from the
/// source, i.e. the inclusion-minimal one among all minimum cuts.
template <std::signed_integral Cap>
CutResult<Cap> min_cut(const FlowNetwork<Cap>& net) {
  auto flow = max_flow(net);
  auto side = flow.residual.reachable_from(net.source());
  if (side[net.sink()]) throw InternalError("sink reachable after max-flow");
  const Cap capacity = cut_capacity(net, side);
  if (capacity != flow.flow_value)
    throw InternalError("cut capacity " + std::to_string(capacity) + " differs from flow value " +
                        std::to_string(flow.flow_value));
  return {std::move(side), capacity, flow.flow_value};
}

}  // namespace dwo
