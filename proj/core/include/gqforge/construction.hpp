#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gqforge/group.hpp"
#include "gqforge/incidence.hpp"
#include "gqforge/permutation.hpp"

namespace gqforge {

/// Candidate Sigma = {g_0 = 1, g_1, ..., g_s}: sorted, duplicate-free,
/// contains the identity and at least one other element. g_i is members()[i].
class SigmaSet {
 public:
  static SigmaSet of(const FiniteGroup& group, std::vector<Element> members);

  const std::vector<Element>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  /// s = |Sigma| - 1
  std::size_t s() const noexcept { return members_.size() - 1; }
  bool contains(Element g) const noexcept;
  Element operator[](std::size_t i) const noexcept { return members_[i]; }

  bool operator==(const SigmaSet&) const = default;
  auto operator<=>(const SigmaSet&) const = default;

 private:
  explicit SigmaSet(std::vector<Element> members) : members_(std::move(members)) {}
  std::vector<Element> members_;
};

enum class FailedAxiom { AX1Nonunique, AX1Unrepresentable, AX2 };

std::string_view to_string(FailedAxiom axiom);

using Triple = std::array<std::size_t, 3>;  // (i, j, k) for g_i g_j^-1 g_k

/// AX1: every g outside Sigma is g_i g_j^-1 g_k for exactly one (i, j, k)
/// with i != j and k != j. AX2: a product g_i g_j^-1 g_k lies in Sigma
/// only if i = j or j = k.
struct AxiomReport {
  bool pass = false;
  std::optional<FailedAxiom> failed_axiom;
  /// The element that breaks AX1, or the product that breaks AX2.
  std::optional<Element> element;
  std::optional<Triple> triple;
  /// Second representation, for AX1-nonunique.
  std::optional<Triple> other_triple;
  /// When both axioms pass: |G| = (s+1) + s^2 (s+1).
  bool counting_identity = false;
};

/// AX2 is checked first over triples ordered by j, then i, then k; AX1
/// failures are reported for the smallest offending element.
AxiomReport check_sigma_axioms(const FiniteGroup& group, const SigmaSet& sigma);

/// The structure with points G and lines Sigma*h, together with the right
/// translation actions of G. Line h is Sigma*h, so line 0 is Sigma.
struct SigmaQuadrangle {
  IncidenceStructure gq;
  std::vector<Permutation> point_action;  // point_action[g][x] = x*g
  std::vector<Permutation> line_action;   // line_action[g][h] = h*g
};

SigmaQuadrangle build_gq_from_sigma(const FiniteGroup& group, const SigmaSet& sigma);

enum class ActionDomain { Points, Lines };

std::string_view to_string(ActionDomain domain);

class NotRegularError : public Error {
 public:
  NotRegularError(ActionDomain domain, const std::string& detail)
      : Error(ErrorKind::NotRegular, std::string(to_string(domain)) + ": " + detail), domain_(domain) {}
  ActionDomain domain() const noexcept { return domain_; }

 private:
  ActionDomain domain_;
};

/// Checks that the action of G on points (and on lines when given) is a
/// regular, incidence-compatible homomorphism. Throws InvalidAction or
/// NotRegular.
void validate_regular_action(const IncidenceStructure& q, const FiniteGroup& group,
                             const std::vector<Permutation>& point_action,
                             const std::vector<Permutation>* line_action);

/// The lexicographically smallest line through `point`.
LineId default_base_line(const IncidenceStructure& q, Point point);

/// Sigma = {g : base_point^g lies on base_line}; revalidated against the
/// axioms (AxiomsFail otherwise).
SigmaSet extract_sigma(const IncidenceStructure& q, const FiniteGroup& group,
                       const std::vector<Permutation>& point_action, const std::vector<Permutation>& line_action,
                       Point base_point = 0, std::optional<LineId> base_line = std::nullopt);

/// The s >= 1 with (s+1)(s^2+1) = n, if any.
std::optional<std::uint64_t> sigma_order_parameter(std::uint64_t n);

/// Largest group order for which reduce_symmetry is supported.
inline constexpr std::size_t kSigmaReductionLimit = 16;

/// Every Sigma passing both axioms, sorted lexicographically. With
/// reduce_symmetry, the least image of each orbit under Aut(G).
std::vector<SigmaSet> search_sigma(const FiniteGroup& group, bool reduce_symmetry);

struct ClassIntersection {
  std::size_t in_delta = 0;
  std::size_t in_complement = 0;
};

/// Delta = {g : P^g collinear with P} together with the identity, for a
/// point-regular action and distinguished point P.
struct DeltaProfile {
  Point base_point = 0;
  std::vector<bool> delta;
  std::size_t s = 0;
  std::size_t t = 0;
  std::vector<ElementSet> classes;
  std::vector<ClassIntersection> class_intersections;

  std::size_t delta_size() const;
};

DeltaProfile delta_profile(const IncidenceStructure& q, const FiniteGroup& group,
                           const std::vector<Permutation>& point_action, Point base_point = 0);

struct ClassCheck {
  ElementSet members;
  std::uint64_t element_order = 0;
  ClassIntersection intersection;
  bool meets_delta = false;            // x^G meets Delta
  bool complement_divisible = false;   // gcd(s,t) divides |x^G minus Delta|
  bool size_bound = false;             // |x^G| >= gcd(s,t)+1 when x^G leaves Delta
  bool order_divides = false;          // |x| divides s+1 when x^G lies in Delta
  bool pass() const { return meets_delta && complement_divisible && size_bound && order_divides; }
};

struct NormalSubgroupCheck {
  ElementSet members;
  bool divides = false;  // |N| divides gcd(s+1, t^2-t)
};

struct YoshiaraReport {
  std::size_t s = 0;
  std::size_t t = 0;
  std::uint64_t gcd_st = 0;
  std::uint64_t normal_bound = 0;  // gcd(s+1, t^2-t)
  std::vector<ClassCheck> classes;  // nontrivial classes
  std::vector<NormalSubgroupCheck> normal_subgroups;
  bool pass = false;
};

/// Class and normal-subgroup checks on a Delta profile. Throws HypothesisFail
/// when gcd(s,t) = 1.
YoshiaraReport yoshiara_checks(const DeltaProfile& profile, const FiniteGroup& group);

}  // namespace gqforge
