#include "gqforge/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace gqforge {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::NotAGQ: return "NotAGQ";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::AxiomsFail: return "AxiomsFail";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::OrderNotAdmissible: return "OrderNotAdmissible";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::NotIncident: return "NotIncident";
    case ErrorKind::InvalidAction: return "InvalidAction";
    case ErrorKind::NotRegularPoint: return "NotRegularPoint";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::HypothesisFail: return "HypothesisFail";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::BadQ: return "BadQ";
  }
  return "Unknown";
}

std::string_view to_string(NotAGroupReason reason) {
  switch (reason) {
    case NotAGroupReason::NoIdentity: return "no-identity";
    case NotAGroupReason::NotLatin: return "not-latin";
    case NotAGroupReason::NotAssociative: return "not-associative";
    case NotAGroupReason::MissingInverse: return "missing-inverse";
  }
  return "unknown";
}

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Element> table,
                         std::vector<Element> inverse, std::string name)
    : order_(order), table_(std::move(table)), inverse_(std::move(inverse)), name_(std::move(name)) {}

Element FiniteGroup::power(Element g, std::uint64_t k) const noexcept {
  Element result = kIdentity;
  Element base = g;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return result;
}

std::vector<std::vector<Element>> FiniteGroup::table_rows() const {
  std::vector<std::vector<Element>> rows(order_);
  for (std::size_t a = 0; a < order_; ++a) rows[a].assign(table_.begin() + a * order_, table_.begin() + (a + 1) * order_);
  return rows;
}

ElementSet::ElementSet(std::vector<Element> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

ElementSet ElementSet::of(const FiniteGroup& group, std::vector<Element> members) {
  for (Element g : members) {
    if (g >= group.order()) {
      throw Error(ErrorKind::InvalidInput, "element " + std::to_string(g) + " out of range for group of order " +
                                               std::to_string(group.order()));
    }
  }
  return ElementSet(std::move(members));
}

bool ElementSet::contains(Element g) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), g);
}

namespace {

void check_associative(std::size_t n, const std::vector<Element>& t) {
  auto at = [&](std::size_t a, std::size_t b) { return t[a * n + b]; };
  auto fail = [](std::size_t a, std::size_t b, std::size_t c) {
    throw NotAGroupError(NotAGroupReason::NotAssociative,
                         "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" + std::to_string(c) +
                             " != " + std::to_string(a) + "*(" + std::to_string(b) + "*" +
                             std::to_string(c) + ")");
  };
  if (n <= kExhaustiveAssociativityLimit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t ab = at(a, b);
        for (std::size_t c = 0; c < n; ++c)
          if (at(ab, c) != at(a, at(b, c))) fail(a, b, c);
      }
    return;
  }
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  const std::size_t samples = 10 * n * n;
  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
    if (at(at(a, b), c) != at(a, at(b, c))) fail(a, b, c);
  }
}

}  // namespace

FiniteGroup group_from_table(const std::vector<std::vector<std::int64_t>>& table, std::string name) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::InvalidInput, "empty table");
  if (n > kMaxGroupOrder) throw Error(ErrorKind::TooLarge, "group order " + std::to_string(n));
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw Error(ErrorKind::InvalidInput, "table is not square at row " + std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) {
      const std::int64_t v = table[a][b];
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw Error(ErrorKind::InvalidInput, "entry out of range at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
      t[a * n + b] = static_cast<Element>(v);
    }
  }

  // Latin square
  std::vector<unsigned char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[t[a * n + b]]++) throw NotAGroupError(NotAGroupReason::NotLatin, "row " + std::to_string(a) + " repeats an entry");
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t a = 0; a < n; ++a) {
      if (seen[t[a * n + b]]++) throw NotAGroupError(NotAGroupReason::NotLatin, "column " + std::to_string(b) + " repeats an entry");
    }
  }

  std::size_t identity = n;
  for (std::size_t e = 0; e < n && identity == n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = t[e * n + x] == x && t[x * n + e] == x;
    if (ok) identity = e;
  }
  if (identity == n) throw NotAGroupError(NotAGroupReason::NoIdentity, "no two-sided identity");

  if (identity != 0) {
    auto relabel = [&](std::size_t x) -> std::size_t { return x == identity ? 0 : (x == 0 ? identity : x); };
    std::vector<Element> r(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) r[relabel(a) * n + relabel(b)] = static_cast<Element>(relabel(t[a * n + b]));
    t = std::move(r);
  }

  std::vector<Element> inverse(n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto row = t.begin() + static_cast<std::ptrdiff_t>(a * n);
    const auto b = static_cast<std::size_t>(std::find(row, row + static_cast<std::ptrdiff_t>(n), 0U) - row);
    if (t[b * n + a] != 0) {
      throw NotAGroupError(NotAGroupReason::MissingInverse, "right inverse of " + std::to_string(a) + " is not a left inverse");
    }
    inverse[a] = static_cast<Element>(b);
  }

  check_associative(n, t);
  return FiniteGroup(n, std::move(t), std::move(inverse), std::move(name));
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "cyclic group of order 0");
  if (n > kMaxGroupOrder) throw Error(ErrorKind::TooLarge, "group order " + std::to_string(n));
  std::vector<Element> t(n * n);
  std::vector<Element> inverse(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Element>((a + b) % n);
    inverse[a] = static_cast<Element>((n - a) % n);
  }
  return FiniteGroup(n, std::move(t), std::move(inverse), "C" + std::to_string(n));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t m = g.order();
  const std::size_t k = h.order();
  const std::size_t n = m * k;
  if (n > kMaxGroupOrder) throw Error(ErrorKind::TooLarge, "group order " + std::to_string(n));
  std::vector<Element> t(n * n);
  std::vector<Element> inverse(n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto a1 = static_cast<Element>(a / k), a2 = static_cast<Element>(a % k);
    inverse[a] = static_cast<Element>(g.inv(a1) * k + h.inv(a2));
    for (std::size_t b = 0; b < n; ++b) {
      const auto b1 = static_cast<Element>(b / k), b2 = static_cast<Element>(b % k);
      t[a * n + b] = static_cast<Element>(g.mul(a1, b1) * k + h.mul(a2, b2));
    }
  }
  std::string name;
  if (!g.name().empty() && !h.name().empty()) name = g.name() + "x" + h.name();
  return FiniteGroup(n, std::move(t), std::move(inverse), std::move(name));
}

std::uint64_t element_order(const FiniteGroup& group, Element g) {
  std::uint64_t k = 1;
  for (Element x = g; x != kIdentity; x = group.mul(x, g)) ++k;
  return k;
}

std::vector<ElementSet> conjugacy_classes(const FiniteGroup& group) {
  const std::size_t n = group.order();
  std::vector<char> assigned(n, 0);
  std::vector<ElementSet> classes;
  for (Element x = 0; x < n; ++x) {
    if (assigned[x]) continue;
    std::vector<Element> cls;
    for (Element g = 0; g < n; ++g) {
      const Element y = group.conjugate(x, g);
      if (!assigned[y]) {
        assigned[y] = 1;
        cls.push_back(y);
      }
    }
    classes.emplace_back(std::move(cls));
  }
  return classes;
}

ElementSet center(const FiniteGroup& group) {
  const std::size_t n = group.order();
  std::vector<Element> z;
  for (Element a = 0; a < n; ++a) {
    bool central = true;
    for (Element b = 0; b < n && central; ++b) central = group.mul(a, b) == group.mul(b, a);
    if (central) z.push_back(a);
  }
  return ElementSet(std::move(z));
}

ElementSet subgroup_generated(const FiniteGroup& group, const ElementSet& generators) {
  const std::size_t n = group.order();
  std::vector<char> in(n, 0);
  std::vector<Element> members{kIdentity};
  in[kIdentity] = 1;
  // In a finite group closure under multiplication by generators suffices.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element s : generators) {
      if (s >= n) throw Error(ErrorKind::InvalidInput, "generator out of range");
      const Element y = group.mul(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  return ElementSet(std::move(members));
}

bool is_normal_subgroup(const FiniteGroup& group, const ElementSet& subgroup) {
  for (Element h : subgroup)
    for (Element g = 0; g < group.order(); ++g)
      if (!subgroup.contains(group.conjugate(h, g))) return false;
  return true;
}

std::vector<std::vector<Element>> group_automorphisms(const FiniteGroup& group) {
  const std::size_t n = group.order();
  // Greedy generating set: add the smallest element outside the current span.
  std::vector<Element> gens;
  ElementSet span({kIdentity});
  while (span.size() < n) {
    Element next = 0;
    while (span.contains(next)) ++next;
    gens.push_back(next);
    span = subgroup_generated(group, ElementSet(gens));
  }

  // Every element as a word: element = parent * gens[via].
  std::vector<Element> parent(n, kIdentity);
  std::vector<std::size_t> via(n, 0);
  std::vector<Element> bfs{kIdentity};
  std::vector<char> reached(n, 0);
  reached[kIdentity] = 1;
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Element y = group.mul(bfs[i], gens[j]);
      if (!reached[y]) {
        reached[y] = 1;
        parent[y] = bfs[i];
        via[y] = j;
        bfs.push_back(y);
      }
    }
  }

  std::vector<std::uint64_t> orders(n);
  for (Element g = 0; g < n; ++g) orders[g] = element_order(group, g);

  std::vector<std::vector<Element>> result;
  std::vector<Element> images(gens.size());
  std::vector<Element> phi(n);
  std::vector<char> hit(n);

  auto try_images = [&]() {
    phi[kIdentity] = kIdentity;
    for (std::size_t i = 1; i < bfs.size(); ++i) {
      const Element x = bfs[i];
      phi[x] = group.mul(phi[parent[x]], images[via[x]]);
    }
    std::fill(hit.begin(), hit.end(), 0);
    for (Element x = 0; x < n; ++x) {
      if (hit[phi[x]]++) return;
    }
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (phi[group.mul(a, b)] != group.mul(phi[a], phi[b])) return;
    result.push_back(phi);
  };

  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (depth == gens.size()) {
      try_images();
      return;
    }
    for (Element y = 1; y < n; ++y) {
      if (orders[y] != orders[gens[depth]]) continue;
      images[depth] = y;
      self(self, depth + 1);
    }
  };
  if (n == 1) {
    result.push_back({kIdentity});
  } else {
    recurse(recurse, 0);
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace gqforge
