#include "gqforge/incidence.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "gqforge/numtheory.hpp"
#include "refinement.hpp"

namespace gqforge {

IncidenceStructure::IncidenceStructure(std::size_t num_points, std::vector<std::vector<Point>> lines,
                                       std::string name)
    : num_points_(num_points), lines_(std::move(lines)), point_to_lines_(num_points), name_(std::move(name)) {
  if (num_points_ == 0) throw Error(ErrorKind::InvalidInput, "structure has no points");
  for (LineId l = 0; l < lines_.size(); ++l) {
    auto& line = lines_[l];
    if (line.empty()) throw Error(ErrorKind::InvalidInput, "line " + std::to_string(l) + " is empty");
    std::sort(line.begin(), line.end());
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] >= num_points_) {
        throw Error(ErrorKind::InvalidInput, "line " + std::to_string(l) + " has out-of-range point " +
                                                 std::to_string(line[i]));
      }
      if (i > 0 && line[i] == line[i - 1]) {
        throw Error(ErrorKind::InvalidInput, "line " + std::to_string(l) + " repeats point " + std::to_string(line[i]));
      }
      point_to_lines_[line[i]].push_back(l);
    }
    if (!line_index_.emplace(line, l).second) {
      throw Error(ErrorKind::InvalidInput, "line " + std::to_string(l) + " duplicates line " +
                                               std::to_string(line_index_.at(line)));
    }
  }
  for (Point p = 0; p < num_points_; ++p) {
    if (point_to_lines_[p].empty()) throw Error(ErrorKind::InvalidInput, "point " + std::to_string(p) + " is on no line");
  }
}

bool IncidenceStructure::incident(Point p, LineId l) const noexcept {
  const auto& line = lines_[l];
  return std::binary_search(line.begin(), line.end(), p);
}

std::optional<LineId> IncidenceStructure::find_line(const std::vector<Point>& sorted_points) const {
  auto it = line_index_.find(sorted_points);
  if (it == line_index_.end()) return std::nullopt;
  return it->second;
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::TwoCommonLines: return "two-common-lines";
    case ViolationKind::LineSizeMismatch: return "line-size-mismatch";
    case ViolationKind::PointDegreeMismatch: return "point-degree-mismatch";
    case ViolationKind::NoCollinearPoint: return "no-collinear-point";
    case ViolationKind::SeveralCollinearPoints: return "several-collinear-points";
  }
  return "unknown";
}

std::string GQViolation::describe() const {
  auto list = [](const auto& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  switch (kind) {
    case ViolationKind::TwoCommonLines:
      return "points {" + list(points) + "} lie on lines {" + list(lines) + "}";
    case ViolationKind::LineSizeMismatch:
      return "line " + list(lines) + " has " + std::to_string(actual) + " points, expected " + std::to_string(expected);
    case ViolationKind::PointDegreeMismatch:
      return "point " + list(points) + " is on " + std::to_string(actual) + " lines, expected " +
             std::to_string(expected);
    case ViolationKind::NoCollinearPoint:
    case ViolationKind::SeveralCollinearPoints:
      return "point " + std::to_string(points.front()) + " is collinear with " + std::to_string(actual) +
             " points of line " + list(lines);
  }
  return "unknown violation";
}

GQCheck check_gq(const IncidenceStructure& q) {
  const std::size_t np = q.num_points();
  const std::size_t nl = q.num_lines();

  // (a) two distinct points share at most one line
  {
    std::vector<std::uint32_t> stamp(np, UINT32_MAX);
    std::vector<LineId> via(np);
    for (Point p = 0; p < np; ++p) {
      for (LineId l : q.lines_through(p)) {
        for (Point x : q.line(l)) {
          if (x == p) continue;
          if (stamp[x] == p) {
            GQViolation v{ViolationKind::TwoCommonLines, {p, x}, {via[x], l}, 1, 2};
            return v;
          }
          stamp[x] = p;
          via[x] = l;
        }
      }
    }
  }

  // (b) uniform line size and point degree
  const std::size_t line_size = q.line(0).size();
  for (LineId l = 0; l < nl; ++l) {
    if (q.line(l).size() != line_size) return GQViolation{ViolationKind::LineSizeMismatch, {}, {l}, line_size, q.line(l).size()};
  }
  const std::size_t degree = q.lines_through(0).size();
  for (Point p = 0; p < np; ++p) {
    if (q.lines_through(p).size() != degree) {
      return GQViolation{ViolationKind::PointDegreeMismatch, {p}, {}, degree, q.lines_through(p).size()};
    }
  }

  // (c) a point off a line is collinear with exactly one of its points.
  // Given (a), count[l] is the number of points of l collinear with p.
  std::vector<std::uint32_t> count(nl);
  std::vector<char> through(nl);
  for (Point p = 0; p < np; ++p) {
    std::fill(count.begin(), count.end(), 0);
    std::fill(through.begin(), through.end(), 0);
    for (LineId m : q.lines_through(p)) through[m] = 1;
    for (LineId m : q.lines_through(p))
      for (Point x : q.line(m)) {
        if (x == p) continue;
        for (LineId l : q.lines_through(x))
          if (l != m) ++count[l];
      }
    for (LineId l = 0; l < nl; ++l) {
      if (through[l] || count[l] == 1) continue;
      GQViolation v{count[l] == 0 ? ViolationKind::NoCollinearPoint : ViolationKind::SeveralCollinearPoints,
                    {p}, {l}, 1, count[l]};
      return v;
    }
  }

  GQCertificate cert;
  cert.s = line_size - 1;
  cert.t = degree - 1;
  cert.thick = cert.s >= 2 && cert.t >= 2;
  cert.num_points = np;
  cert.num_lines = nl;
  return cert;
}

GQCertificate verify_gq(const IncidenceStructure& q) {
  auto result = check_gq(q);
  if (auto* v = std::get_if<GQViolation>(&result)) throw NotAGQError(std::move(*v));
  return std::get<GQCertificate>(result);
}

IncidenceStructure dual(const IncidenceStructure& q) {
  std::vector<std::vector<Point>> lines(q.num_points());
  for (Point p = 0; p < q.num_points(); ++p) {
    auto through = q.lines_through(p);
    lines[p].assign(through.begin(), through.end());
  }
  std::string name = q.name().empty() ? std::string{} : "dual(" + q.name() + ")";
  return IncidenceStructure(q.num_lines(), std::move(lines), std::move(name));
}

std::vector<std::vector<char>> collinearity(const IncidenceStructure& q) {
  std::vector<std::vector<char>> c(q.num_points(), std::vector<char>(q.num_points(), 0));
  for (const auto& line : q.lines())
    for (Point x : line)
      for (Point y : line)
        if (x != y) c[x][y] = 1;
  return c;
}

ParameterCheck parameter_feasible(std::uint64_t s, std::uint64_t t) {
  if (s == 0 || t == 0) throw Error(ErrorKind::InvalidInput, "s and t must be positive");
  using numtheory::u128;
  ParameterCheck r;
  const u128 product = u128{s} * t * (s + 1) * (t + 1);
  r.divisibility = product % (s + t) == 0;
  r.inequality = u128{t} <= u128{s} * s && u128{s} <= u128{t} * t;
  r.feasible = r.divisibility && r.inequality;
  const std::string st = "s+t = " + std::to_string(s + t);
  const std::string prod = numtheory::to_string(product);
  r.reason = st + (r.divisibility ? " divides " : " does not divide ") + "st(s+1)(t+1) = " + prod + "; " +
             (r.inequality ? "t <= s^2 and s <= t^2 hold" : "t <= s^2 and s <= t^2 fails");
  return r;
}

bool polarity_order_constraint(std::uint64_t s) {
  if (s == 0) throw Error(ErrorKind::InvalidInput, "s must be positive");
  return numtheory::is_square(2 * s);
}

namespace {

void check_size(const IncidenceStructure& q, const SearchLimits& limits) {
  const std::size_t n = q.num_points() + q.num_lines();
  if (n > limits.max_vertices) {
    throw Error(ErrorKind::TooLarge, std::to_string(n) + " points+lines exceeds the search cap of " +
                                         std::to_string(limits.max_vertices));
  }
}

Permutation restrict_to_points(const Permutation& vertex_perm, std::size_t np) {
  return Permutation(vertex_perm.begin(), vertex_perm.begin() + static_cast<std::ptrdiff_t>(np));
}

}  // namespace

PermutationGroup automorphisms(const IncidenceStructure& q, const SearchLimits& limits) {
  check_size(q, limits);
  const auto g = detail::incidence_graph(q, true);
  auto found = detail::search_automorphisms(g);
  std::vector<Permutation> gens;
  gens.reserve(found.generators.size());
  for (const auto& v : found.generators) gens.push_back(restrict_to_points(v, q.num_points()));
  return PermutationGroup(q.num_points(), std::move(gens), found.order);
}

Permutation induced_line_permutation(const IncidenceStructure& q, const Permutation& point_perm) {
  if (!is_permutation(point_perm, q.num_points())) {
    throw Error(ErrorKind::InvalidAction, "point map is not a permutation of the points");
  }
  Permutation lp(q.num_lines());
  std::vector<Point> image;
  for (LineId l = 0; l < q.num_lines(); ++l) {
    image.clear();
    for (Point p : q.line(l)) image.push_back(point_perm[p]);
    std::sort(image.begin(), image.end());
    auto target = q.find_line(image);
    if (!target) throw Error(ErrorKind::InvalidAction, "image of line " + std::to_string(l) + " is not a line");
    lp[l] = *target;
  }
  return lp;
}

std::optional<Isomorphism> isomorphic(const IncidenceStructure& a, const IncidenceStructure& b,
                                      const SearchLimits& limits) {
  check_size(a, limits);
  check_size(b, limits);
  if (a.num_points() != b.num_points() || a.num_lines() != b.num_lines()) return std::nullopt;
  const auto ga = detail::incidence_graph(a, true);
  const auto gb = detail::incidence_graph(b, true);
  auto map = detail::search_isomorphism(ga, gb);
  if (!map) return std::nullopt;
  const std::size_t np = a.num_points();
  Isomorphism iso;
  iso.point_map = restrict_to_points(*map, np);
  iso.line_map.resize(a.num_lines());
  for (LineId l = 0; l < a.num_lines(); ++l) iso.line_map[l] = static_cast<LineId>((*map)[np + l] - np);
  return iso;
}

std::optional<Polarity> find_polarity(const IncidenceStructure& q, const SearchLimits& limits) {
  if (q.num_points() != q.num_lines()) {
    throw Error(ErrorKind::ShapeMismatch, std::to_string(q.num_points()) + " points but " +
                                              std::to_string(q.num_lines()) + " lines");
  }
  check_size(q, limits);
  const std::size_t np = q.num_points();
  const auto g = detail::incidence_graph(q, false);
  const auto found = detail::search_automorphisms(g);
  if (found.order > limits.max_group_elements) {
    throw Error(ErrorKind::TooLarge, "incidence graph automorphism group has order " + std::to_string(found.order));
  }
  // Every polarity is an involutory automorphism of the untagged incidence
  // graph that swaps the two parts; the enumeration is exhaustive.
  std::optional<Permutation> best;
  for (auto& sigma : enumerate_closure(g.size(), found.generators, limits.max_group_elements)) {
    if (sigma[0] < np) continue;
    if (!is_identity(compose(sigma, sigma))) continue;
    if (!best || sigma < *best) best = std::move(sigma);
  }
  if (!best) return std::nullopt;
  Polarity pol;
  pol.point_to_line.resize(np);
  pol.line_to_point.resize(np);
  for (std::size_t i = 0; i < np; ++i) {
    pol.point_to_line[i] = static_cast<std::uint32_t>((*best)[i] - np);
    pol.line_to_point[i] = (*best)[np + i];
  }
  return pol;
}

IncidenceStructure relabel(const IncidenceStructure& q, const Permutation& point_perm) {
  if (!is_permutation(point_perm, q.num_points())) throw Error(ErrorKind::InvalidInput, "relabeling is not a permutation");
  std::vector<std::vector<Point>> lines;
  lines.reserve(q.num_lines());
  for (const auto& line : q.lines()) {
    std::vector<Point> image;
    for (Point p : line) image.push_back(point_perm[p]);
    std::sort(image.begin(), image.end());
    lines.push_back(std::move(image));
  }
  std::sort(lines.begin(), lines.end());
  return IncidenceStructure(q.num_points(), std::move(lines), q.name());
}

namespace {

// The enumerated collineation group with fast multiplication: an element is
// identified by the images of a short base of points.
class ElementTable {
 public:
  ElementTable(std::vector<Permutation> elements, std::size_t degree) : elements_(std::move(elements)) {
    bits_ = 1;
    while ((std::size_t{1} << bits_) < degree) ++bits_;
    std::vector<Point> base;
    std::unordered_map<std::uint64_t, std::uint32_t> index;
    for (Point b = 0; b < degree; ++b) {
      base.push_back(b);
      if (base.size() * bits_ > 64) break;
      index.clear();
      bool unique = true;
      for (std::uint32_t i = 0; i < elements_.size() && unique; ++i) unique = index.emplace(key(base, elements_[i]), i).second;
      if (unique) {
        base_ = std::move(base);
        index_ = std::move(index);
        return;
      }
    }
    // Base too long to pack; fall back to hashing whole permutations.
    for (std::uint32_t i = 0; i < elements_.size(); ++i) full_.emplace(elements_[i], i);
  }

  std::size_t size() const noexcept { return elements_.size(); }
  const Permutation& operator[](std::uint32_t i) const noexcept { return elements_[i]; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    const auto& pa = elements_[a];
    const auto& pb = elements_[b];
    if (!base_.empty()) {
      std::uint64_t k = 0;
      for (Point x : base_) k = (k << bits_) | pb[pa[x]];
      return index_.at(k);
    }
    return full_.at(compose(pa, pb));
  }

 private:
  std::uint64_t key(const std::vector<Point>& base, const Permutation& p) const {
    std::uint64_t k = 0;
    for (Point x : base) k = (k << bits_) | p[x];
    return k;
  }

  std::vector<Permutation> elements_;
  std::size_t bits_;
  std::vector<Point> base_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> full_;
};

struct VectorHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept { return PermutationHash{}(v); }
};

bool fixed_point_free(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] == i) return false;
  return true;
}

}  // namespace

std::vector<RegularSubgroup> regular_subgroups(const IncidenceStructure& q, std::size_t k, RegularityMode mode,
                                               const SearchLimits& limits) {
  const std::size_t np = q.num_points();
  if (k != np || (mode == RegularityMode::PointsAndLines && k != q.num_lines())) {
    throw Error(ErrorKind::ShapeMismatch, "regular subgroups need k = number of points" +
                                              std::string(mode == RegularityMode::PointsAndLines ? " = number of lines" : ""));
  }
  const auto aut = automorphisms(q, limits);
  const ElementTable table(aut.elements(limits.max_group_elements), np);
  const std::uint32_t n = static_cast<std::uint32_t>(table.size());

  // good[g]: every nontrivial power of g is fixed-point-free (on lines too
  // in the biregular mode) and the order of g divides k.
  std::vector<char> fpf(n, 0);
  for (std::uint32_t g = 1; g < n; ++g) {
    fpf[g] = fixed_point_free(table[g]);
    if (fpf[g] && mode == RegularityMode::PointsAndLines) fpf[g] = fixed_point_free(induced_line_permutation(q, table[g]));
  }
  std::vector<char> good(n, 0);
  for (std::uint32_t g = 1; g < n; ++g) {
    if (!fpf[g]) continue;
    bool ok = true;
    std::size_t order = 1;
    for (std::uint32_t x = g; x != 0; x = table.mul(x, g)) {
      if (!fpf[x] || order > k) {
        ok = false;
        break;
      }
      ++order;
    }
    good[g] = ok && k % order == 0;
  }
  std::vector<std::uint32_t> candidates;
  for (std::uint32_t g = 1; g < n; ++g)
    if (good[g]) candidates.push_back(g);

  struct Subgroup {
    std::vector<std::uint32_t> members;  // sorted element indices
    std::vector<std::uint32_t> generators;
  };

  // Closure of H and g, abandoned once it exceeds k elements or contains an
  // element that cannot lie in a semiregular group of order k.
  std::vector<char> in(n, 0);
  auto extend = [&](const Subgroup& h, std::uint32_t g) -> std::optional<Subgroup> {
    Subgroup r;
    r.generators = h.generators;
    r.generators.push_back(g);
    std::vector<std::uint32_t> members = h.members;
    for (auto x : members) in[x] = 1;
    bool ok = true;
    auto add = [&](std::uint32_t y) {
      if (in[y]) return;
      if (!good[y] || members.size() >= k) {
        ok = false;
        return;
      }
      in[y] = 1;
      members.push_back(y);
    };
    add(g);
    for (std::size_t i = 0; i < members.size() && ok; ++i)
      for (auto s : r.generators) {
        add(table.mul(members[i], s));
        if (!ok) break;
      }
    for (auto x : members) in[x] = 0;
    if (!ok || k % members.size() != 0) return std::nullopt;
    std::sort(members.begin(), members.end());
    r.members = std::move(members);
    return r;
  };

  std::unordered_set<std::vector<std::uint32_t>, VectorHash> visited;
  std::vector<std::vector<std::uint32_t>> found;
  std::vector<Subgroup> frontier{Subgroup{{0}, {}}};
  std::vector<char> covered(n, 0);
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& h : frontier) {
      std::fill(covered.begin(), covered.end(), 0);
      for (auto x : h.members) covered[x] = 1;
      for (auto g : candidates) {
        if (covered[g]) continue;
        // <H, g^j> = <H, g> whenever g^j generates <g>.
        std::vector<std::uint32_t> powers{g};
        for (std::uint32_t x = table.mul(g, g); x != 0; x = table.mul(x, g)) powers.push_back(x);
        const std::size_t order = powers.size() + 1;
        for (std::size_t j = 0; j < powers.size(); ++j)
          if (std::gcd(j + 1, order) == 1) covered[powers[j]] = 1;
        auto r = extend(h, g);
        if (!r) continue;
        if (!visited.insert(r->members).second) continue;
        if (r->members.size() == k) {
          found.push_back(r->members);
        } else {
          next.push_back(std::move(*r));
        }
      }
    }
    frontier = std::move(next);
  }
  if (k == 1) found.push_back({0});

  std::vector<RegularSubgroup> result;
  for (const auto& members : found) {
    // Element x of the regular group is the collineation sending point 0 to x.
    std::vector<Permutation> action(k);
    for (auto m : members) action[table[m][0]] = table[m];
    std::vector<std::vector<std::int64_t>> rows(k, std::vector<std::int64_t>(k));
    for (std::size_t x = 0; x < k; ++x)
      for (std::size_t y = 0; y < k; ++y) rows[x][y] = action[y][x];
    RegularSubgroup sub{group_from_table(rows), std::move(action), {}};
    for (const auto& p : sub.point_action) sub.line_action.push_back(induced_line_permutation(q, p));
    result.push_back(std::move(sub));
  }
  std::sort(result.begin(), result.end(),
            [](const RegularSubgroup& a, const RegularSubgroup& b) { return a.point_action < b.point_action; });
  return result;
}

}  // namespace gqforge
