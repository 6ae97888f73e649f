#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gqforge/incidence.hpp"

namespace gqforge {

/// The thin quadrangle of order (1,1): a 4-cycle.
IncidenceStructure ordinary_quadrangle();

/// W(q) for q in {2, 3}. Points are the 1-spaces of GF(q)^4, each indexed by
/// its normalized vector (first nonzero coordinate 1) in lexicographic order;
/// lines are the totally isotropic 2-spaces for
/// B(u,v) = u1 v2 - u2 v1 + u3 v4 - u4 v3, sorted lexicographically.
IncidenceStructure symplectic_gq(std::uint32_t q);

/// {x,y}^perp: points other than x and y collinear with both.
std::vector<Point> perp(const IncidenceStructure& q, Point x, Point y);

/// {x,y}^perp^perp, sorted; includes x and y.
std::vector<Point> double_perp(const IncidenceStructure& q, Point x, Point y);

/// True iff |{x,y}^perp^perp| = t+1 for every y not collinear with x.
/// Throws NotAGQError when q is not a GQ.
bool is_regular_point(const IncidenceStructure& q, Point x);

/// Payne derivative at a regular point x of a GQ of order (s,s): points off
/// x^perp (renumbered in increasing order), lines not through x restricted
/// to them, and the sets {x,y}^perp^perp minus x. Lines are sorted.
IncidenceStructure payne_derive(const IncidenceStructure& q, Point x);

/// Fixture names accepted by `catalog_fixture`.
const std::vector<std::string>& catalog_names();

/// "ordinary", "w2", "w3" or "payne-w3" (derived at point 0).
IncidenceStructure catalog_fixture(std::string_view name);

}  // namespace gqforge
