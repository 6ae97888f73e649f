#include "gqforge/catalog.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>

#include "gqforge/error.hpp"

namespace gqforge {

IncidenceStructure ordinary_quadrangle() {
  return IncidenceStructure(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, "ordinary");
}

namespace {

using Vec4 = std::array<std::uint32_t, 4>;

Vec4 normalize(Vec4 v, std::uint32_t q) {
  std::size_t lead = 0;
  while (lead < 4 && v[lead] == 0) ++lead;
  std::uint32_t inv = 1;
  while (v[lead] * inv % q != 1) ++inv;
  for (auto& c : v) c = c * inv % q;
  return v;
}

std::uint32_t form(const Vec4& u, const Vec4& v, std::uint32_t q) {
  const std::uint32_t plus = u[0] * v[1] + u[2] * v[3];
  const std::uint32_t minus = u[1] * v[0] + u[3] * v[2];
  return (plus + q * q * 2 - minus) % q;
}

}  // namespace

IncidenceStructure symplectic_gq(std::uint32_t q) {
  if (q != 2 && q != 3) throw Error(ErrorKind::UnsupportedField, "W(q) is available for q in {2, 3}, not " + std::to_string(q));
  std::vector<Vec4> points;
  for (std::uint32_t code = 1; code < q * q * q * q; ++code) {
    Vec4 v{};
    for (std::size_t i = 0, c = code; i < 4; ++i, c /= q) v[3 - i] = static_cast<std::uint32_t>(c % q);
    if (normalize(v, q) == v) points.push_back(v);
  }
  std::sort(points.begin(), points.end());
  std::map<Vec4, Point> index;
  for (Point i = 0; i < points.size(); ++i) index.emplace(points[i], i);

  std::set<std::vector<Point>> lines;
  for (Point a = 0; a < points.size(); ++a) {
    for (Point b = a + 1; b < points.size(); ++b) {
      if (form(points[a], points[b], q) != 0) continue;
      std::vector<Point> line{a, b};
      for (std::uint32_t lambda = 1; lambda < q; ++lambda) {
        Vec4 w{};
        for (std::size_t i = 0; i < 4; ++i) w[i] = (points[a][i] * lambda + points[b][i]) % q;
        line.push_back(index.at(normalize(w, q)));
      }
      std::sort(line.begin(), line.end());
      lines.insert(std::move(line));
    }
  }
  return IncidenceStructure(points.size(), {lines.begin(), lines.end()}, "W(" + std::to_string(q) + ")");
}

std::vector<Point> perp(const IncidenceStructure& q, Point x, Point y) {
  std::vector<char> near_x(q.num_points(), 0);
  for (LineId l : q.lines_through(x)) {
    for (Point p : q.line(l)) near_x[p] = 1;
  }
  std::vector<Point> result;
  for (LineId l : q.lines_through(y)) {
    for (Point p : q.line(l)) {
      if (p != x && p != y && near_x[p]) result.push_back(p);
    }
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

std::vector<Point> double_perp(const IncidenceStructure& q, Point x, Point y) {
  const auto first = perp(q, x, y);
  std::vector<std::size_t> hits(q.num_points(), 0);
  for (Point z : first) {
    std::vector<char> seen(q.num_points(), 0);
    for (LineId l : q.lines_through(z)) {
      for (Point p : q.line(l)) {
        if (!seen[p]) {
          seen[p] = 1;
          ++hits[p];
        }
      }
    }
  }
  std::vector<Point> result;
  for (Point p = 0; p < q.num_points(); ++p) {
    if (hits[p] == first.size()) result.push_back(p);
  }
  return result;
}

bool is_regular_point(const IncidenceStructure& q, Point x) {
  const auto cert = verify_gq(q);
  if (x >= q.num_points()) throw Error(ErrorKind::InvalidInput, "point out of range");
  const auto near = collinearity(q);
  for (Point y = 0; y < q.num_points(); ++y) {
    if (y == x || near[x][y]) continue;
    if (double_perp(q, x, y).size() != cert.t + 1) return false;
  }
  return true;
}

IncidenceStructure payne_derive(const IncidenceStructure& q, Point x) {
  const auto cert = verify_gq(q);
  if (cert.s != cert.t) {
    throw Error(ErrorKind::NotAGQ, "Payne derivation needs order (s,s), got (" + std::to_string(cert.s) + "," +
                                       std::to_string(cert.t) + ")");
  }
  if (!is_regular_point(q, x)) throw Error(ErrorKind::NotRegularPoint, "point " + std::to_string(x) + " is not regular");

  const auto near = collinearity(q);
  std::vector<std::int64_t> renumber(q.num_points(), -1);
  std::uint32_t next = 0;
  for (Point p = 0; p < q.num_points(); ++p) {
    if (p != x && !near[x][p]) renumber[p] = next++;
  }
  std::set<std::vector<Point>> lines;
  for (LineId l = 0; l < q.num_lines(); ++l) {
    if (q.incident(x, l)) continue;
    std::vector<Point> line;
    for (Point p : q.line(l)) {
      if (renumber[p] >= 0) line.push_back(static_cast<Point>(renumber[p]));
    }
    lines.insert(std::move(line));
  }
  for (Point y = 0; y < q.num_points(); ++y) {
    if (renumber[y] < 0) continue;
    std::vector<Point> line;
    for (Point p : double_perp(q, x, y)) {
      if (p != x) line.push_back(static_cast<Point>(renumber[p]));
    }
    lines.insert(std::move(line));
  }
  std::string name = "payne(" + (q.name().empty() ? std::string("Q") : q.name()) + "," + std::to_string(x) + ")";
  return IncidenceStructure(next, {lines.begin(), lines.end()}, std::move(name));
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"ordinary", "w2", "w3", "payne-w3"};
  return names;
}

IncidenceStructure catalog_fixture(std::string_view name) {
  if (name == "ordinary") return ordinary_quadrangle();
  if (name == "w2") return symplectic_gq(2);
  if (name == "w3") return symplectic_gq(3);
  if (name == "payne-w3") return payne_derive(symplectic_gq(3), 0);
  throw Error(ErrorKind::InvalidInput, "unknown fixture '" + std::string(name) + "'");
}

}  // namespace gqforge
