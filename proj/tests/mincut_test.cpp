#include <gtest/gtest.h>

#include <random>

#include "dwo/mincut.hpp"
#include "support/oracles.hpp"

namespace dwo {
namespace {

using Net = FlowNetwork<std::int64_t>;

// s = 0, x = 1, y = 2, t = 3
Net diamond() {
  Net net(4, 0, 3);
  net.add_arc(0, 1, 1);
  net.add_arc(0, 2, 1);
  net.add_arc(1, 3, 1);
  net.add_arc(2, 3, 1);
  net.add_arc(1, 2, 5);
  return net;
}

std::vector<bool> side_of(std::size_t nodes, std::initializer_list<std::size_t> members) {
  std::vector<bool> side(nodes, false);
  for (auto v : members) side[v] = true;
  return side;
}

void expect_feasible_flow(const Net& net, const ResidualGraph<std::int64_t>& g, std::int64_t value) {
  std::vector<std::int64_t> excess(net.node_count(), 0);
  for (std::size_t i = 0; i < net.arcs().size(); ++i) {
    const auto& a = net.arcs()[i];
    const auto f = g.arc_flow(i);
    ASSERT_GE(f, 0);
    ASSERT_LE(f, a.capacity);
    excess[a.from] -= f;
    excess[a.to] += f;
  }
  for (std::size_t v = 0; v < net.node_count(); ++v) {
    const std::int64_t expected = v == net.source() ? -value : v == net.sink() ? value : 0;
    EXPECT_EQ(excess[v], expected) << "node " << v;
  }
}

TEST(FlowNetwork, Validation) {
  EXPECT_THROW(Net(1, 0, 0), ValidationError);
  EXPECT_THROW(Net(3, 1, 1), ValidationError);
  EXPECT_THROW(Net(3, 0, 3), ValidationError);
  Net net(3, 0, 2);
  EXPECT_THROW(net.add_arc(0, 5, 1), ValidationError);
  EXPECT_THROW(net.add_arc(0, 1, -1), ValidationError);
}

TEST(FlowNetwork, OverflowIsCaughtAtConstruction) {
  FlowNetwork<std::int8_t> net(3, 0, 2);
  net.add_arc(0, 1, 100);
  EXPECT_THROW(net.add_arc(1, 2, 100), CapacityOverflow);
  Net wide(2, 0, 1);
  wide.add_arc(0, 1, std::numeric_limits<std::int64_t>::max());
  EXPECT_THROW(wide.add_arc(0, 1, 1), CapacityOverflow);
}

TEST(MaxFlow, SeriesBottleneck) {
  Net net(3, 0, 2);
  net.add_arc(0, 1, 3);
  net.add_arc(1, 2, 2);
  EXPECT_EQ(max_flow(net).flow_value, 2);
}

TEST(MaxFlow, NoArcs) {
  Net net(5, 0, 4);
  EXPECT_EQ(max_flow(net).flow_value, 0);
  const auto cut = min_cut(net);
  EXPECT_EQ(cut.source_side, side_of(5, {0}));
  EXPECT_EQ(cut.capacity, 0);
}

TEST(MaxFlow, Diamond) {
  const auto net = diamond();
  EXPECT_EQ(testing::enumerate_min_cut(net), 2);
  auto flow = max_flow(net);
  EXPECT_EQ(flow.flow_value, 2);
  expect_feasible_flow(net, flow.residual, flow.flow_value);
}

TEST(MinCut, CanonicalSourceSide) {
  Net wide_first(3, 0, 2);
  wide_first.add_arc(0, 1, 3);
  wide_first.add_arc(1, 2, 2);
  auto cut = min_cut(wide_first);
  EXPECT_EQ(cut.source_side, side_of(3, {0, 1}));
  EXPECT_EQ(cut.capacity, 2);

  Net narrow_first(3, 0, 2);
  narrow_first.add_arc(0, 1, 2);
  narrow_first.add_arc(1, 2, 3);
  cut = min_cut(narrow_first);
  EXPECT_EQ(cut.source_side, side_of(3, {0}));
  EXPECT_EQ(cut.capacity, 2);

  cut = min_cut(diamond());
  EXPECT_EQ(cut.source_side, side_of(4, {0}));
  EXPECT_EQ(cut.capacity, 2);
  EXPECT_EQ(cut.flow_value, 2);
}

TEST(MinCut, ParallelAndAntiparallelArcs) {
  Net net(3, 0, 2);
  net.add_arc(0, 1, 2);
  net.add_arc(0, 1, 3);
  net.add_arc(1, 0, 9);
  net.add_arc(1, 2, 4);
  net.add_arc(1, 2, 4);
  EXPECT_EQ(min_cut(net).capacity, 5);
  EXPECT_EQ(testing::enumerate_min_cut(net), 5);
}

TEST(MinCut, MatchesExhaustiveEnumeration) {
  std::mt19937_64 rng(2024);
  for (int seed = 0; seed < 400; ++seed) {
    const std::size_t nodes = 2 + seed % 9;
    const auto net = testing::random_network(rng, nodes, nodes * (1 + seed % 4), 20);
    const auto cut = min_cut(net);
    ASSERT_EQ(cut.capacity, testing::enumerate_min_cut(net)) << "seed " << seed;
    EXPECT_TRUE(cut.source_side[net.source()]);
    EXPECT_FALSE(cut.source_side[net.sink()]);
    EXPECT_EQ(cut.capacity, cut_capacity(net, cut.source_side));

    auto flow = max_flow(net);
    EXPECT_EQ(flow.flow_value, cut.capacity);
    expect_feasible_flow(net, flow.residual, flow.flow_value);

    // Canonical: no residual capacity leaves the source side.
    const auto& g = flow.residual;
    for (std::size_t v = 0; v < nodes; ++v) {
      if (!cut.source_side[v]) continue;
      for (std::size_t e = g.begin(v); e < g.end(v); ++e)
        EXPECT_FALSE(g.edge(e).residual > 0 && !cut.source_side[g.edge(e).to]);
    }
  }
}

TEST(MinCut, SourceSideIsInclusionMinimal) {
  // Every minimum cut's source side contains the canonical one.
  std::mt19937_64 rng(99);
  for (int seed = 0; seed < 100; ++seed) {
    const std::size_t nodes = 3 + seed % 6;
    const auto net = testing::random_network(rng, nodes, 2 * nodes, 4);
    const auto cut = min_cut(net);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (nodes - 2)); ++mask) {
      std::vector<bool> side(nodes, false);
      side[0] = true;
      for (std::size_t i = 0; i + 2 < nodes; ++i) side[i + 1] = (mask >> i) & 1U;
      if (cut_capacity(net, side) != cut.capacity) continue;
      for (std::size_t v = 0; v < nodes; ++v) {
        if (cut.source_side[v]) {
          EXPECT_TRUE(side[v]);
        }
      }
    }
  }
}

}  // namespace
}  // namespace dwo
