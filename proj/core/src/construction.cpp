#include "gqforge/construction.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "gqforge/error.hpp"

namespace gqforge {

namespace {

std::string triple_text(const Triple& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

// Greedy generating set: each generator lies outside the span of the earlier ones.
std::vector<Element> generating_set(const FiniteGroup& group) {
  std::vector<Element> gens;
  std::vector<bool> covered(group.order(), false);
  covered[kIdentity] = true;
  for (Element g = 0; g < group.order(); ++g) {
    if (covered[g]) continue;
    gens.push_back(g);
    for (Element x : subgroup_generated(group, ElementSet(gens))) covered[x] = true;
  }
  return gens;
}

void check_action_maps(const FiniteGroup& group, const std::vector<Permutation>& action, std::size_t degree,
                       ActionDomain domain) {
  const std::string what(to_string(domain));
  if (action.size() != group.order()) {
    throw Error(ErrorKind::InvalidAction, what + " action has " + std::to_string(action.size()) +
                                              " maps for a group of order " + std::to_string(group.order()));
  }
  for (std::size_t g = 0; g < action.size(); ++g) {
    if (!is_permutation(action[g], degree)) {
      throw Error(ErrorKind::InvalidAction, what + " map of element " + std::to_string(g) + " is not a permutation of " +
                                                std::to_string(degree) + " objects");
    }
  }
}

void check_regular(const FiniteGroup& group, const std::vector<Permutation>& action, std::size_t degree,
                   ActionDomain domain) {
  if (degree != group.order()) {
    throw NotRegularError(domain, std::to_string(degree) + " objects but the group has order " +
                                      std::to_string(group.order()));
  }
  std::vector<bool> hit(degree, false);
  for (std::size_t g = 0; g < action.size(); ++g) {
    const auto image = action[g][0];
    if (hit[image]) throw NotRegularError(domain, "two elements send object 0 to " + std::to_string(image));
    hit[image] = true;
  }
  for (std::size_t g = 1; g < action.size(); ++g) {
    for (std::size_t x = 0; x < degree; ++x) {
      if (action[g][x] == x) {
        throw NotRegularError(domain, "element " + std::to_string(g) + " fixes " + std::to_string(x));
      }
    }
  }
}

void check_homomorphism(const FiniteGroup& group, const std::vector<Permutation>& action,
                        const std::vector<Element>& gens, ActionDomain domain) {
  if (!is_identity(action[kIdentity])) {
    throw Error(ErrorKind::InvalidAction, std::string(to_string(domain)) + " map of the identity is not trivial");
  }
  for (Element a = 0; a < group.order(); ++a) {
    for (Element g : gens) {
      if (action[group.mul(a, g)] != compose(action[a], action[g])) {
        throw Error(ErrorKind::InvalidAction, std::string(to_string(domain)) + " maps are not a homomorphism at (" +
                                                  std::to_string(a) + "," + std::to_string(g) + ")");
      }
    }
  }
}

}  // namespace

std::string_view to_string(FailedAxiom axiom) {
  switch (axiom) {
    case FailedAxiom::AX1Nonunique: return "AX1-nonunique";
    case FailedAxiom::AX1Unrepresentable: return "AX1-unrepresentable";
    case FailedAxiom::AX2: return "AX2";
  }
  return "unknown";
}

std::string_view to_string(ActionDomain domain) {
  return domain == ActionDomain::Points ? "points" : "lines";
}

SigmaSet SigmaSet::of(const FiniteGroup& group, std::vector<Element> members) {
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
    throw Error(ErrorKind::InvalidInput, "sigma has repeated elements");
  }
  if (members.size() < 2) throw Error(ErrorKind::InvalidInput, "sigma needs at least two elements");
  if (members.front() != kIdentity) throw Error(ErrorKind::InvalidInput, "sigma must contain the identity 0");
  if (members.back() >= group.order()) {
    throw Error(ErrorKind::InvalidInput, "sigma element " + std::to_string(members.back()) + " is out of range");
  }
  return SigmaSet(std::move(members));
}

bool SigmaSet::contains(Element g) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), g);
}

AxiomReport check_sigma_axioms(const FiniteGroup& group, const SigmaSet& sigma) {
  const std::size_t n = group.order();
  const std::size_t m = sigma.size();
  if (sigma.members().back() >= n) throw Error(ErrorKind::InvalidInput, "sigma does not fit the group");
  std::vector<bool> in_sigma(n, false);
  for (Element g : sigma.members()) in_sigma[g] = true;

  auto product = [&](std::size_t i, std::size_t j, std::size_t k) {
    return group.mul(group.mul(sigma[i], group.inv(sigma[j])), sigma[k]);
  };

  AxiomReport report;
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      if (i == j) continue;
      for (std::size_t k = 0; k < m; ++k) {
        if (k == j) continue;
        const Element p = product(i, j, k);
        if (in_sigma[p]) {
          report.failed_axiom = FailedAxiom::AX2;
          report.element = p;
          report.triple = Triple{i, j, k};
          return report;
        }
      }
    }
  }

  std::vector<std::uint32_t> count(n, 0);
  std::vector<Triple> first(n), second(n);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      if (i == j) continue;
      for (std::size_t k = 0; k < m; ++k) {
        if (k == j) continue;
        const Element p = product(i, j, k);
        if (count[p] == 0) first[p] = {i, j, k};
        if (count[p] == 1) second[p] = {i, j, k};
        ++count[p];
      }
    }
  }
  for (Element g = 0; g < n; ++g) {
    if (in_sigma[g] || count[g] == 1) continue;
    report.element = g;
    if (count[g] == 0) {
      report.failed_axiom = FailedAxiom::AX1Unrepresentable;
    } else {
      report.failed_axiom = FailedAxiom::AX1Nonunique;
      report.triple = first[g];
      report.other_triple = second[g];
    }
    return report;
  }
  report.pass = true;
  const std::size_t s = m - 1;
  report.counting_identity = n == m + s * s * m;
  if (!report.counting_identity) {
    throw Error(ErrorKind::AxiomsFail, "axioms hold but |G| != (s+1) + s^2(s+1)");
  }
  return report;
}

namespace {

std::string describe(const AxiomReport& report) {
  std::string text(to_string(*report.failed_axiom));
  if (report.element) text += " at element " + std::to_string(*report.element);
  if (report.triple) text += " via " + triple_text(*report.triple);
  if (report.other_triple) text += " and " + triple_text(*report.other_triple);
  return text;
}

}  // namespace

SigmaQuadrangle build_gq_from_sigma(const FiniteGroup& group, const SigmaSet& sigma) {
  const std::uint64_t s = sigma.s();
  const std::uint64_t n = group.order();
  if (n != (s + 1) * (s * s + 1)) {
    throw Error(ErrorKind::OrderMismatch, "|G| = " + std::to_string(n) + " but (s+1)(s^2+1) = " +
                                              std::to_string((s + 1) * (s * s + 1)) + " for s = " + std::to_string(s));
  }
  const auto report = check_sigma_axioms(group, sigma);
  if (!report.pass) throw Error(ErrorKind::AxiomsFail, describe(report));

  std::vector<std::vector<Point>> lines(n);
  for (Element h = 0; h < n; ++h) {
    for (Element g : sigma.members()) lines[h].push_back(group.mul(g, h));
  }
  std::vector<Permutation> point_action(n, Permutation(n));
  for (Element g = 0; g < n; ++g) {
    for (Element x = 0; x < n; ++x) point_action[g][x] = group.mul(x, g);
  }
  std::string name = "sigma-gq";
  if (!group.name().empty()) name += "(" + group.name() + ")";
  // Line h is Sigma*h and (Sigma*h)*g = Sigma*(hg), so both actions are right translation.
  auto line_action = point_action;
  return {IncidenceStructure(n, std::move(lines), std::move(name)), std::move(point_action), std::move(line_action)};
}

void validate_regular_action(const IncidenceStructure& q, const FiniteGroup& group,
                             const std::vector<Permutation>& point_action,
                             const std::vector<Permutation>* line_action) {
  check_action_maps(group, point_action, q.num_points(), ActionDomain::Points);
  if (line_action) check_action_maps(group, *line_action, q.num_lines(), ActionDomain::Lines);
  check_regular(group, point_action, q.num_points(), ActionDomain::Points);
  if (line_action) check_regular(group, *line_action, q.num_lines(), ActionDomain::Lines);
  const auto gens = generating_set(group);
  check_homomorphism(group, point_action, gens, ActionDomain::Points);
  if (line_action) check_homomorphism(group, *line_action, gens, ActionDomain::Lines);
  for (Element g : gens) {
    const auto induced = induced_line_permutation(q, point_action[g]);
    if (line_action && induced != (*line_action)[g]) {
      throw Error(ErrorKind::InvalidAction, "line map of element " + std::to_string(g) +
                                                " disagrees with the point map on incidence");
    }
  }
}

LineId default_base_line(const IncidenceStructure& q, Point point) {
  const auto through = q.lines_through(point);
  return *std::min_element(through.begin(), through.end(),
                           [&](LineId a, LineId b) { return q.lines()[a] < q.lines()[b]; });
}

SigmaSet extract_sigma(const IncidenceStructure& q, const FiniteGroup& group,
                       const std::vector<Permutation>& point_action, const std::vector<Permutation>& line_action,
                       Point base_point, std::optional<LineId> base_line) {
  validate_regular_action(q, group, point_action, &line_action);
  if (base_point >= q.num_points()) throw Error(ErrorKind::InvalidInput, "base point out of range");
  const LineId line = base_line ? *base_line : default_base_line(q, base_point);
  if (line >= q.num_lines()) throw Error(ErrorKind::InvalidInput, "base line out of range");
  if (!q.incident(base_point, line)) {
    throw Error(ErrorKind::NotIncident, "point " + std::to_string(base_point) + " is not on line " + std::to_string(line));
  }
  std::vector<Element> members;
  for (Element g = 0; g < group.order(); ++g) {
    if (q.incident(point_action[g][base_point], line)) members.push_back(g);
  }
  auto sigma = SigmaSet::of(group, std::move(members));
  const auto report = check_sigma_axioms(group, sigma);
  if (!report.pass) throw Error(ErrorKind::AxiomsFail, "extracted set fails " + describe(report));
  return sigma;
}

std::optional<std::uint64_t> sigma_order_parameter(std::uint64_t n) {
  for (std::uint64_t s = 1;; ++s) {
    const std::uint64_t value = (s + 1) * (s * s + 1);
    if (value == n) return s;
    if (value > n) return std::nullopt;
  }
}

namespace {

class SigmaSearch {
 public:
  SigmaSearch(const FiniteGroup& group, std::size_t size)
      : group_(group), size_(size), in_sigma_(group.order(), false), used_(group.order(), false) {}

  std::vector<SigmaSet> run() {
    chosen_.push_back(kIdentity);
    in_sigma_[kIdentity] = true;
    extend();
    return std::move(found_);
  }

 private:
  Element product(std::size_t i, std::size_t j, std::size_t k) const {
    return group_.mul(group_.mul(chosen_[i], group_.inv(chosen_[j])), chosen_[k]);
  }

  // Products g_i g_j^-1 g_k (i != j, k != j) that involve the newest index
  // must avoid the partial Sigma and each other; otherwise AX2 or the
  // uniqueness half of AX1 already fails.
  bool add(Element x, std::vector<Element>& added) {
    chosen_.push_back(x);
    in_sigma_[x] = true;
    const std::size_t m = chosen_.size();
    const std::size_t last = m - 1;
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t i = 0; i < m; ++i) {
        if (i == j) continue;
        for (std::size_t k = 0; k < m; ++k) {
          if (k == j || (i != last && j != last && k != last)) continue;
          const Element p = product(i, j, k);
          if (in_sigma_[p] || used_[p]) return false;
          used_[p] = true;
          added.push_back(p);
        }
      }
    }
    return true;
  }

  void undo(const std::vector<Element>& added) {
    for (Element p : added) used_[p] = false;
    in_sigma_[chosen_.back()] = false;
    chosen_.pop_back();
  }

  void extend() {
    if (chosen_.size() == size_) {
      found_.push_back(SigmaSet::of(group_, chosen_));
      return;
    }
    const std::size_t need = size_ - chosen_.size();
    for (Element x = chosen_.back() + 1; x + need <= group_.order(); ++x) {
      if (used_[x]) continue;
      std::vector<Element> added;
      if (add(x, added)) extend();
      undo(added);
    }
  }

  const FiniteGroup& group_;
  std::size_t size_;
  std::vector<Element> chosen_;
  std::vector<bool> in_sigma_;
  std::vector<bool> used_;
  std::vector<SigmaSet> found_;
};

}  // namespace

std::vector<SigmaSet> search_sigma(const FiniteGroup& group, bool reduce_symmetry) {
  const auto s = sigma_order_parameter(group.order());
  if (!s) {
    throw Error(ErrorKind::OrderNotAdmissible, "no s >= 1 has (s+1)(s^2+1) = " + std::to_string(group.order()));
  }
  if (reduce_symmetry && group.order() > kSigmaReductionLimit) {
    throw Error(ErrorKind::TooLarge, "symmetry reduction is limited to groups of order <= " +
                                         std::to_string(kSigmaReductionLimit));
  }
  auto found = SigmaSearch(group, *s + 1).run();
  for (const auto& sigma : found) {
    if (!check_sigma_axioms(group, sigma).pass) throw Error(ErrorKind::AxiomsFail, "search produced an invalid set");
  }
  if (!reduce_symmetry) return found;

  const auto autos = group_automorphisms(group);
  std::set<SigmaSet> reps;
  for (const auto& sigma : found) {
    std::optional<SigmaSet> best;
    for (const auto& phi : autos) {
      std::vector<Element> image;
      for (Element g : sigma.members()) image.push_back(phi[g]);
      auto candidate = SigmaSet::of(group, std::move(image));
      if (!best || candidate < *best) best = std::move(candidate);
    }
    reps.insert(*best);
  }
  return {reps.begin(), reps.end()};
}

std::size_t DeltaProfile::delta_size() const {
  return static_cast<std::size_t>(std::count(delta.begin(), delta.end(), true));
}

DeltaProfile delta_profile(const IncidenceStructure& q, const FiniteGroup& group,
                           const std::vector<Permutation>& point_action, Point base_point) {
  validate_regular_action(q, group, point_action, nullptr);
  if (base_point >= q.num_points()) throw Error(ErrorKind::InvalidInput, "base point out of range");
  const auto cert = verify_gq(q);

  std::vector<bool> collinear(q.num_points(), false);
  for (LineId l : q.lines_through(base_point)) {
    for (Point p : q.line(l)) collinear[p] = true;
  }
  DeltaProfile profile;
  profile.base_point = base_point;
  profile.s = cert.s;
  profile.t = cert.t;
  profile.delta.assign(group.order(), false);
  for (Element g = 0; g < group.order(); ++g) profile.delta[g] = g == kIdentity || collinear[point_action[g][base_point]];
  profile.classes = conjugacy_classes(group);
  for (const auto& cls : profile.classes) {
    ClassIntersection ci;
    for (Element g : cls) (profile.delta[g] ? ci.in_delta : ci.in_complement)++;
    profile.class_intersections.push_back(ci);
  }
  if (profile.delta_size() != cert.s * (cert.t + 1) + 1) {
    throw Error(ErrorKind::NotRegular, "|Delta| differs from s(t+1)+1");
  }
  return profile;
}

YoshiaraReport yoshiara_checks(const DeltaProfile& profile, const FiniteGroup& group) {
  if (profile.delta.size() != group.order()) throw Error(ErrorKind::InvalidInput, "profile does not match the group");
  YoshiaraReport report;
  report.s = profile.s;
  report.t = profile.t;
  report.gcd_st = std::gcd<std::uint64_t>(profile.s, profile.t);
  if (report.gcd_st <= 1) {
    throw Error(ErrorKind::HypothesisFail, "gcd(s,t) = " + std::to_string(report.gcd_st) + " but must exceed 1");
  }
  const std::uint64_t t = profile.t;
  report.normal_bound = std::gcd<std::uint64_t>(profile.s + 1, t * t - t);

  std::vector<ElementSet> contained;
  bool pass = true;
  for (std::size_t c = 0; c < profile.classes.size(); ++c) {
    const auto& cls = profile.classes[c];
    if (cls.contains(kIdentity)) continue;
    ClassCheck check;
    check.members = cls;
    check.intersection = profile.class_intersections[c];
    check.element_order = element_order(group, cls[0]);
    const auto& ci = check.intersection;
    check.meets_delta = ci.in_delta > 0;
    check.complement_divisible = ci.in_complement % report.gcd_st == 0;
    check.size_bound = ci.in_complement == 0 || cls.size() >= report.gcd_st + 1;
    check.order_divides = ci.in_complement > 0 || (profile.s + 1) % check.element_order == 0;
    if (ci.in_complement == 0) contained.push_back(cls);
    pass = pass && check.pass();
    report.classes.push_back(std::move(check));
  }

  // A normal subgroup inside Delta is a union of Delta-contained classes, so
  // it is the join of the normal closures of those classes.
  auto inside_delta = [&](const ElementSet& set) {
    return std::all_of(set.begin(), set.end(), [&](Element g) { return profile.delta[g]; });
  };
  std::set<ElementSet> normals;
  std::vector<ElementSet> frontier;
  for (const auto& cls : contained) {
    auto n = subgroup_generated(group, cls);
    if (inside_delta(n) && normals.insert(n).second) frontier.push_back(std::move(n));
  }
  while (!frontier.empty()) {
    std::vector<ElementSet> next;
    const std::vector<ElementSet> known(normals.begin(), normals.end());
    for (const auto& a : frontier) {
      for (const auto& b : known) {
        std::vector<Element> both(a.begin(), a.end());
        both.insert(both.end(), b.begin(), b.end());
        std::sort(both.begin(), both.end());
        both.erase(std::unique(both.begin(), both.end()), both.end());
        auto join = subgroup_generated(group, ElementSet(std::move(both)));
        if (inside_delta(join) && normals.insert(join).second) next.push_back(std::move(join));
      }
    }
    frontier = std::move(next);
  }
  for (const auto& n : normals) {
    NormalSubgroupCheck check{n, report.normal_bound % n.size() == 0};
    pass = pass && check.divides;
    report.normal_subgroups.push_back(std::move(check));
  }
  report.pass = pass;
  return report;
}

}  // namespace gqforge
