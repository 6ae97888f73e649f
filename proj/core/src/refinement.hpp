#pragma once

// Individualization-refinement search over vertex-colored graphs. Used for
// collineation groups, isomorphism tests and polarity search on the
// bipartite point-line incidence graph.

#include <cstdint>
#include <optional>
#include <vector>

#include "gqforge/incidence.hpp"
#include "gqforge/permutation.hpp"

namespace gqforge::detail {

using Coloring = std::vector<std::uint32_t>;

class ColoredGraph {
 public:
  ColoredGraph(std::size_t n, std::vector<std::vector<std::uint32_t>> adjacency, Coloring colors);

  std::size_t size() const noexcept { return n_; }
  const std::vector<std::uint32_t>& neighbors(std::uint32_t v) const noexcept { return adjacency_[v]; }
  bool adjacent(std::uint32_t u, std::uint32_t v) const noexcept {
    return (matrix_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }
  const Coloring& colors() const noexcept { return colors_; }
  std::size_t edge_count() const noexcept { return edges_; }

 private:
  std::size_t n_;
  std::size_t words_;
  std::size_t edges_ = 0;
  std::vector<std::vector<std::uint32_t>> adjacency_;
  std::vector<std::uint64_t> matrix_;
  Coloring colors_;
};

/// Points first, then lines. With `tag_parts` the two sides get different
/// initial colors so only part-preserving maps are considered.
ColoredGraph incidence_graph(const IncidenceStructure& q, bool tag_parts);

/// Equitable refinement. Colors are renumbered by the rank of their
/// (old color, sorted neighbor colors) signature, so the result is
/// invariant under relabeling of the graph.
Coloring refine(const ColoredGraph& g, Coloring colors);

struct AutomorphismResult {
  std::vector<Permutation> generators;
  std::uint64_t order = 1;
};

AutomorphismResult search_automorphisms(const ColoredGraph& g);

/// Vertex map a -> b preserving colors and adjacency.
std::optional<Permutation> search_isomorphism(const ColoredGraph& a, const ColoredGraph& b);

}  // namespace gqforge::detail
