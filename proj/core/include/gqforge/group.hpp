#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gqforge/error.hpp"

namespace gqforge {

/// Dense element index. The identity is always index 0.
using Element = std::uint32_t;
inline constexpr Element kIdentity = 0;

/// Largest order accepted by `group_from_table`; beyond this the n*n table
/// stops fitting comfortably in memory.
inline constexpr std::size_t kMaxGroupOrder = 8192;

/// Groups up to this order get an exhaustive associativity check; larger
/// ones are sampled with 10*n^2 random triples.
inline constexpr std::size_t kExhaustiveAssociativityLimit = 512;

enum class NotAGroupReason { NoIdentity, NotLatin, NotAssociative, MissingInverse };

std::string_view to_string(NotAGroupReason reason);

class NotAGroupError : public Error {
 public:
  NotAGroupError(NotAGroupReason reason, const std::string& detail)
      : Error(ErrorKind::NotAGroup, std::string(to_string(reason)) + ": " + detail),
        reason_(reason) {}
  NotAGroupReason reason() const noexcept { return reason_; }

 private:
  NotAGroupReason reason_;
};

/// A finite group given by its Cayley table. Immutable once built; every
/// instance satisfies the group axioms with identity at index 0.
class FiniteGroup {
 public:
  std::size_t order() const noexcept { return order_; }
  const std::string& name() const noexcept { return name_; }

  Element mul(Element a, Element b) const noexcept { return table_[a * order_ + b]; }
  Element inv(Element a) const noexcept { return inverse_[a]; }

  /// Row `a` of the table: entry b is a*b.
  std::span<const Element> row(Element a) const noexcept {
    return {table_.data() + a * order_, order_};
  }

  Element power(Element g, std::uint64_t k) const noexcept;
  /// g^-1 * h * g
  Element conjugate(Element h, Element g) const noexcept { return mul(mul(inv(g), h), g); }

  std::vector<std::vector<Element>> table_rows() const;

  bool operator==(const FiniteGroup& other) const noexcept {
    return order_ == other.order_ && table_ == other.table_;
  }

 private:
  FiniteGroup(std::size_t order, std::vector<Element> table, std::vector<Element> inverse,
              std::string name);

  friend FiniteGroup group_from_table(const std::vector<std::vector<std::int64_t>>&,
                                      std::string);
  friend FiniteGroup cyclic_group(std::size_t);
  friend FiniteGroup direct_product(const FiniteGroup&, const FiniteGroup&);

  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::string name_;
};

/// Sorted, duplicate-free set of element indices of some group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::vector<Element> members);

  /// Validates that every member is < order.
  static ElementSet of(const FiniteGroup& group, std::vector<Element> members);

  const std::vector<Element>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Element g) const noexcept;
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  Element operator[](std::size_t i) const noexcept { return members_[i]; }

  bool operator==(const ElementSet&) const = default;
  auto operator<=>(const ElementSet&) const = default;

 private:
  std::vector<Element> members_;
};

/// Validates a Cayley table. If the identity is not at index 0 the labels of
/// the identity and 0 are swapped.
FiniteGroup group_from_table(const std::vector<std::vector<std::int64_t>>& table,
                             std::string name = {});

FiniteGroup cyclic_group(std::size_t n);

/// Pair (a, b) is indexed as a*|H| + b.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

std::uint64_t element_order(const FiniteGroup& group, Element g);

/// Classes ordered by their smallest member; the first is {0}.
std::vector<ElementSet> conjugacy_classes(const FiniteGroup& group);

ElementSet center(const FiniteGroup& group);

ElementSet subgroup_generated(const FiniteGroup& group, const ElementSet& generators);

bool is_normal_subgroup(const FiniteGroup& group, const ElementSet& subgroup);

/// Automorphisms as images of every element, found by brute force over a
/// generating set. Intended for small groups only.
std::vector<std::vector<Element>> group_automorphisms(const FiniteGroup& group);

}  // namespace gqforge
