#include <numeric>
#include <string>
#include <unordered_set>

#include "gqforge/error.hpp"
#include "gqforge/permutation.hpp"

namespace gqforge {

Permutation identity_permutation(std::size_t degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0U);
  return p;
}

Permutation compose(const Permutation& first, const Permutation& second) {
  Permutation r(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) r[i] = second[first[i]];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint32_t>(i);
  return r;
}

bool is_permutation(const Permutation& p, std::size_t degree) {
  if (p.size() != degree) return false;
  std::vector<char> seen(degree, 0);
  for (auto x : p) {
    if (x >= degree || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

bool is_identity(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto x : p) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::vector<Permutation> enumerate_closure(std::size_t degree, const std::vector<Permutation>& generators,
                                           std::size_t cap) {
  std::vector<Permutation> elements{identity_permutation(degree)};
  std::unordered_set<Permutation, PermutationHash> seen{elements.front()};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : generators) {
      Permutation next = compose(elements[i], g);
      if (seen.insert(next).second) {
        if (elements.size() >= cap) {
          throw Error(ErrorKind::TooLarge, "group has more than " + std::to_string(cap) + " elements");
        }
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators, std::uint64_t order)
    : degree_(degree), generators_(std::move(generators)), order_(order) {
  for (const auto& g : generators_) {
    if (!is_permutation(g, degree_)) throw Error(ErrorKind::InvalidInput, "generator is not a bijection");
  }
}

PermutationGroup PermutationGroup::generated_by(std::size_t degree, std::vector<Permutation> generators,
                                                std::size_t cap) {
  for (const auto& g : generators) {
    if (!is_permutation(g, degree)) throw Error(ErrorKind::InvalidInput, "generator is not a bijection");
  }
  const auto order = enumerate_closure(degree, generators, cap).size();
  return PermutationGroup(degree, std::move(generators), order);
}

std::vector<Permutation> PermutationGroup::elements(std::size_t cap) const {
  if (order_ > cap) throw Error(ErrorKind::TooLarge, "group order " + std::to_string(order_) + " exceeds cap");
  return enumerate_closure(degree_, generators_, cap);
}

}  // namespace gqforge
