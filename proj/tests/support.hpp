#pragma once

// Shared fixtures and adapters between library types and the oracles.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "gqforge/catalog.hpp"
#include "gqforge/group.hpp"
#include "gqforge/incidence.hpp"
#include "oracles.hpp"

namespace gqtest {

inline oracle::Table table_of(const gqforge::FiniteGroup& g) {
  oracle::Table t;
  for (const auto& row : g.table_rows()) t.emplace_back(row.begin(), row.end());
  return t;
}

inline oracle::Lines lines_of(const gqforge::IncidenceStructure& q) {
  return {q.lines().begin(), q.lines().end()};
}

inline gqforge::FiniteGroup klein() {
  return gqforge::direct_product(gqforge::cyclic_group(2), gqforge::cyclic_group(2));
}

inline gqforge::Permutation random_permutation(std::size_t n, std::uint32_t seed) {
  gqforge::Permutation p(n);
  std::iota(p.begin(), p.end(), 0U);
  std::mt19937 rng(seed);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// An order-27 group acting regularly on the points of the (2,4) fixture,
/// computed once per process.
inline const gqforge::RegularSubgroup& payne_regular_27() {
  static const gqforge::RegularSubgroup sub = [] {
    const auto q = gqforge::catalog_fixture("payne-w3");
    auto found = gqforge::regular_subgroups(q, 27, gqforge::RegularityMode::Points);
    return found.at(0);
  }();
  return sub;
}

}  // namespace gqtest
