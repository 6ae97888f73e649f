#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "gqforge/error.hpp"
#include "gqforge/group.hpp"
#include "gqforge/permutation.hpp"

namespace gqforge {

using Point = std::uint32_t;
using LineId = std::uint32_t;

/// Points are 0..num_points-1; each line is a strictly increasing list of
/// points. Lines are pairwise distinct and every point is on some line.
class IncidenceStructure {
 public:
  /// Sorts each line; rejects out-of-range or repeated points, empty or
  /// duplicate lines, and isolated points.
  IncidenceStructure(std::size_t num_points, std::vector<std::vector<Point>> lines, std::string name = {});

  std::size_t num_points() const noexcept { return num_points_; }
  std::size_t num_lines() const noexcept { return lines_.size(); }
  const std::vector<std::vector<Point>>& lines() const noexcept { return lines_; }
  std::span<const Point> line(LineId l) const noexcept { return lines_[l]; }
  std::span<const LineId> lines_through(Point p) const noexcept { return point_to_lines_[p]; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  bool incident(Point p, LineId l) const noexcept;
  /// Index of the line with exactly this (sorted) point set.
  std::optional<LineId> find_line(const std::vector<Point>& sorted_points) const;

 private:
  std::size_t num_points_;
  std::vector<std::vector<Point>> lines_;
  std::vector<std::vector<LineId>> point_to_lines_;
  std::map<std::vector<Point>, LineId> line_index_;
  std::string name_;
};

struct GQCertificate {
  std::size_t s = 0;
  std::size_t t = 0;
  bool thick = false;
  std::size_t num_points = 0;
  std::size_t num_lines = 0;

  bool operator==(const GQCertificate&) const = default;
};

enum class ViolationKind {
  TwoCommonLines,
  LineSizeMismatch,
  PointDegreeMismatch,
  NoCollinearPoint,
  SeveralCollinearPoints,
};

std::string_view to_string(ViolationKind kind);

/// First failing witness found by the GQ verifier.
struct GQViolation {
  ViolationKind kind{};
  std::vector<Point> points;
  std::vector<LineId> lines;
  std::size_t expected = 0;
  std::size_t actual = 0;

  std::string describe() const;
};

class NotAGQError : public Error {
 public:
  explicit NotAGQError(GQViolation violation)
      : Error(ErrorKind::NotAGQ, violation.describe()), violation_(std::move(violation)) {}
  const GQViolation& violation() const noexcept { return violation_; }

 private:
  GQViolation violation_;
};

using GQCheck = std::variant<GQCertificate, GQViolation>;

/// Checks, in order: two points share at most one line; uniform line size
/// and point degree; every non-incident point-line pair has exactly one
/// collinear point on the line.
GQCheck check_gq(const IncidenceStructure& q);

/// Like check_gq but throws NotAGQError on a violation.
GQCertificate verify_gq(const IncidenceStructure& q);

/// Points of the dual are the lines of q; line j of the dual lists the
/// lines of q through point j.
IncidenceStructure dual(const IncidenceStructure& q);

/// Per-point collinearity marks: result[p][x] != 0 iff x != p and x shares
/// a line with p.
std::vector<std::vector<char>> collinearity(const IncidenceStructure& q);

struct ParameterCheck {
  bool feasible = false;
  bool divisibility = false;  // s+t | st(s+1)(t+1)
  bool inequality = false;    // t <= s^2 and s <= t^2
  std::string reason;
};

ParameterCheck parameter_feasible(std::uint64_t s, std::uint64_t t);

/// True iff 2s is a perfect square.
bool polarity_order_constraint(std::uint64_t s);

struct SearchLimits {
  std::size_t max_vertices = 200;  // num_points + num_lines
  std::size_t max_group_elements = 1'000'000;
};

/// Collineation group acting on points. The order comes from the
/// stabilizer chain of the backtracking search.
PermutationGroup automorphisms(const IncidenceStructure& q, const SearchLimits& limits = {});

/// The permutation of lines induced by a point permutation; throws
/// InvalidAction if the point permutation is not a collineation.
Permutation induced_line_permutation(const IncidenceStructure& q, const Permutation& point_perm);

struct Isomorphism {
  Permutation point_map;  // point of the first structure -> point of the second
  Permutation line_map;
};

std::optional<Isomorphism> isomorphic(const IncidenceStructure& a, const IncidenceStructure& b,
                                      const SearchLimits& limits = {});

struct Polarity {
  Permutation point_to_line;
  Permutation line_to_point;
};

/// Throws ShapeMismatch when num_points != num_lines.
std::optional<Polarity> find_polarity(const IncidenceStructure& q, const SearchLimits& limits = {});

enum class RegularityMode { Points, PointsAndLines };

/// A subgroup of the collineation group acting regularly. Group element x
/// is the unique collineation taking point 0 to point x.
struct RegularSubgroup {
  FiniteGroup group;
  std::vector<Permutation> point_action;
  std::vector<Permutation> line_action;
};

std::vector<RegularSubgroup> regular_subgroups(const IncidenceStructure& q, std::size_t k, RegularityMode mode,
                                               const SearchLimits& limits = {});

/// Relabels points by `point_perm` (point p becomes point_perm[p]) and
/// reorders lines lexicographically.
IncidenceStructure relabel(const IncidenceStructure& q, const Permutation& point_perm);

}  // namespace gqforge
