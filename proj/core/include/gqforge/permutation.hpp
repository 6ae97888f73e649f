#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gqforge {

/// p[i] is the image of i. Groups act on the right: i^(ab) = (i^a)^b.
using Permutation = std::vector<std::uint32_t>;

Permutation identity_permutation(std::size_t degree);

/// Apply `first`, then `second`.
Permutation compose(const Permutation& first, const Permutation& second);

Permutation inverse(const Permutation& p);

bool is_permutation(const Permutation& p, std::size_t degree);

bool is_identity(const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// A permutation group given by generators. The order is fixed at
/// construction, either supplied by the caller (e.g. from a stabilizer
/// chain) or computed by enumerating the closure.
class PermutationGroup {
 public:
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators, std::uint64_t order);

  /// Enumerates the generated group to obtain its order; throws TooLarge
  /// above `cap` elements.
  static PermutationGroup generated_by(std::size_t degree, std::vector<Permutation> generators,
                                       std::size_t cap = 1'000'000);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  std::uint64_t order() const noexcept { return order_; }

  /// All elements, identity first, in breadth-first order over the
  /// generators. Throws TooLarge above `cap`.
  std::vector<Permutation> elements(std::size_t cap = 1'000'000) const;

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::uint64_t order_;
};

/// Breadth-first closure of `generators`, identity first.
std::vector<Permutation> enumerate_closure(std::size_t degree, const std::vector<Permutation>& generators,
                                           std::size_t cap);

}  // namespace gqforge
