#include "refinement.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace gqforge::detail {

ColoredGraph::ColoredGraph(std::size_t n, std::vector<std::vector<std::uint32_t>> adjacency, Coloring colors)
    : n_(n), words_((n + 63) / 64), adjacency_(std::move(adjacency)), matrix_(n * ((n + 63) / 64), 0),
      colors_(std::move(colors)) {
  for (std::uint32_t u = 0; u < n_; ++u) {
    for (auto v : adjacency_[u]) {
      matrix_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
      ++edges_;
    }
    std::sort(adjacency_[u].begin(), adjacency_[u].end());
  }
}

ColoredGraph incidence_graph(const IncidenceStructure& q, bool tag_parts) {
  const std::size_t np = q.num_points();
  const std::size_t n = np + q.num_lines();
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (LineId l = 0; l < q.num_lines(); ++l) {
    const auto lv = static_cast<std::uint32_t>(np + l);
    for (Point p : q.line(l)) {
      adj[p].push_back(lv);
      adj[lv].push_back(p);
    }
  }
  Coloring colors(n, 0);
  if (tag_parts) std::fill(colors.begin() + static_cast<std::ptrdiff_t>(np), colors.end(), 1U);
  return ColoredGraph(n, std::move(adj), std::move(colors));
}

namespace {

std::size_t compress(Coloring& c) {
  Coloring values = c;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (auto& x : c) x = static_cast<std::uint32_t>(std::lower_bound(values.begin(), values.end(), x) - values.begin());
  return values.size();
}

Coloring individualize(const Coloring& c, std::uint32_t v) {
  Coloring r(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) r[i] = 2 * c[i];
  r[v] += 1;
  compress(r);
  return r;
}

std::vector<std::uint32_t> histogram(const Coloring& c) {
  std::vector<std::uint32_t> h(c.size(), 0);
  for (auto x : c) ++h[x];
  return h;
}

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

std::uint32_t target_color(const std::vector<std::uint32_t>& hist) {
  for (std::uint32_t c = 0; c < hist.size(); ++c)
    if (hist[c] > 1) return c;
  return kNone;
}

std::vector<std::uint32_t> cell_of(const Coloring& c, std::uint32_t color) {
  std::vector<std::uint32_t> cell;
  for (std::uint32_t v = 0; v < c.size(); ++v)
    if (c[v] == color) cell.push_back(v);
  return cell;
}

struct Level {
  Coloring coloring;
  std::vector<std::uint32_t> hist;
  std::uint32_t target = kNone;
  std::vector<std::uint32_t> cell;
  std::uint32_t chosen = 0;
};

// First path of the search tree: always individualize the smallest vertex
// of the first non-singleton cell. The last level is the discrete leaf.
std::vector<Level> first_path(const ColoredGraph& g) {
  std::vector<Level> levels;
  Coloring c = refine(g, g.colors());
  while (true) {
    Level level;
    level.hist = histogram(c);
    level.target = target_color(level.hist);
    if (level.target != kNone) {
      level.cell = cell_of(c, level.target);
      level.chosen = level.cell.front();
    }
    level.coloring = std::move(c);
    levels.push_back(std::move(level));
    if (levels.back().target == kNone) break;
    c = refine(g, individualize(levels.back().coloring, levels.back().chosen));
  }
  return levels;
}

bool is_isomorphism(const ColoredGraph& a, const ColoredGraph& b, const Permutation& map) {
  for (std::uint32_t u = 0; u < a.size(); ++u) {
    if (a.colors()[u] != b.colors()[map[u]]) return false;
    for (auto v : a.neighbors(u))
      if (!b.adjacent(map[u], map[v])) return false;
  }
  return true;
}

// Explores the subtree of `b` below `c` (which corresponds to level j of the
// first path of `a`) looking for a leaf that yields an isomorphism.
class LeafMatcher {
 public:
  LeafMatcher(const ColoredGraph& a, const std::vector<Level>& path, const ColoredGraph& b)
      : a_(a), path_(path), b_(b) {}

  std::optional<Permutation> descend(std::size_t j, const Coloring& c) const {
    const Level& level = path_[j];
    if (level.target == kNone) {
      const Coloring& leaf = level.coloring;
      std::vector<std::uint32_t> by_color(c.size());
      for (std::uint32_t v = 0; v < c.size(); ++v) by_color[c[v]] = v;
      Permutation map(leaf.size());
      for (std::uint32_t x = 0; x < leaf.size(); ++x) map[x] = by_color[leaf[x]];
      if (is_isomorphism(a_, b_, map)) return map;
      return std::nullopt;
    }
    for (auto u : cell_of(c, level.target)) {
      Coloring next = refine(b_, individualize(c, u));
      if (histogram(next) != path_[j + 1].hist) continue;
      if (auto found = descend(j + 1, next)) return found;
    }
    return std::nullopt;
  }

 private:
  const ColoredGraph& a_;
  const std::vector<Level>& path_;
  const ColoredGraph& b_;
};

std::vector<std::uint32_t> orbit_of(std::uint32_t v, const std::vector<const Permutation*>& gens, std::size_t n) {
  std::vector<char> in(n, 0);
  std::vector<std::uint32_t> orbit{v};
  in[v] = 1;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const auto* g : gens) {
      const auto w = (*g)[orbit[i]];
      if (!in[w]) {
        in[w] = 1;
        orbit.push_back(w);
      }
    }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

}  // namespace

Coloring refine(const ColoredGraph& g, Coloring colors) {
  const std::size_t n = g.size();
  std::size_t classes = compress(colors);
  std::vector<std::vector<std::uint32_t>> sig(n);
  std::vector<std::uint32_t> order(n);
  while (classes < n) {
    for (std::uint32_t v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.clear();
      s.push_back(colors[v]);
      for (auto u : g.neighbors(v)) s.push_back(colors[u]);
      std::sort(s.begin() + 1, s.end());
    }
    std::iota(order.begin(), order.end(), 0U);
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return sig[x] < sig[y]; });
    Coloring next(n);
    std::uint32_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
      next[order[i]] = rank;
    }
    const std::size_t next_classes = n == 0 ? 0 : rank + 1;
    if (next_classes == classes) break;
    colors = std::move(next);
    classes = next_classes;
  }
  return colors;
}

AutomorphismResult search_automorphisms(const ColoredGraph& g) {
  const std::size_t n = g.size();
  const auto path = first_path(g);
  const LeafMatcher matcher(g, path, g);

  // generators[k] was found at level levels_of[k] and fixes the first-path
  // choices of all shallower levels.
  std::vector<Permutation> generators;
  std::vector<std::size_t> found_at;
  AutomorphismResult result;
  const std::size_t depth = path.size() - 1;

  for (std::size_t i = depth; i-- > 0;) {
    const Level& level = path[i];
    auto level_gens = [&] {
      std::vector<const Permutation*> gens;
      for (std::size_t k = 0; k < generators.size(); ++k)
        if (found_at[k] >= i) gens.push_back(&generators[k]);
      return gens;
    };
    auto orbit = orbit_of(level.chosen, level_gens(), n);
    for (auto w : level.cell) {
      if (std::binary_search(orbit.begin(), orbit.end(), w)) continue;
      Coloring c = refine(g, individualize(level.coloring, w));
      if (histogram(c) != path[i + 1].hist) continue;
      if (auto gamma = matcher.descend(i + 1, c)) {
        generators.push_back(std::move(*gamma));
        found_at.push_back(i);
        orbit = orbit_of(level.chosen, level_gens(), n);
      }
    }
    const std::uint64_t size = orbit.size();
    if (result.order > std::numeric_limits<std::uint64_t>::max() / size) {
      throw Error(ErrorKind::TooLarge, "automorphism group order overflows 64 bits");
    }
    result.order *= size;
  }
  result.generators = std::move(generators);
  return result;
}

std::optional<Permutation> search_isomorphism(const ColoredGraph& a, const ColoredGraph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return std::nullopt;
  if (a.size() == 0) return Permutation{};
  // Initial colors must agree as multisets with the same labels.
  Coloring sa = a.colors(), sb = b.colors();
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  const auto path = first_path(a);
  Coloring c = refine(b, b.colors());
  if (histogram(c) != path.front().hist) return std::nullopt;
  return LeafMatcher(a, path, b).descend(0, c);
}

}  // namespace gqforge::detail
