#pragma once

#include <vector>

#include "dwo/relations.hpp"

namespace dwo::testing {

inline Universe abc() { return make_universe({"a", "b", "c"}); }

/// R = ({a,b}, {c}) and R' = ({b,c}, {a}) over {a,b,c}.
inline Profile worked_example() {
  auto u = abc();
  return Profile(u, {relation_from_tiers(u, std::vector<std::vector<std::size_t>>{{0, 1}, {2}}),
                     relation_from_tiers(u, std::vector<std::vector<std::size_t>>{{1, 2}, {0}})});
}

/// Two voters a > b, one voter b > a.
inline Profile two_to_one() {
  auto u = make_universe({"a", "b"});
  auto ab = relation_from_tiers(u, std::vector<std::vector<std::size_t>>{{0}, {1}});
  auto ba = relation_from_tiers(u, std::vector<std::vector<std::size_t>>{{1}, {0}});
  return Profile(u, {ab, ab, ba});
}

inline Profile unanimous(const Universe& u, const std::vector<std::vector<std::size_t>>& tiers,
                         std::size_t n) {
  return Profile(u, std::vector<BinaryRelation>(n, relation_from_tiers(u, tiers)));
}

}  // namespace dwo::testing
