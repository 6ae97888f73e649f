#include "oracles.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace oracle {

using boost::multiprecision::cpp_int;

std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool c5_bigint(std::uint64_t s, std::uint64_t p, std::uint32_t n) {
  const cpp_int order = cpp_int(s + 1) * (cpp_int(s) * s + 1);
  cpp_int product = boost::multiprecision::pow(cpp_int(p), n);
  for (std::uint32_t k = 0; k < n; ++k) product *= boost::multiprecision::pow(cpp_int(p), n - k) - 1;
  return product % order == 0;
}

Verdict naive_conditions(std::uint64_t s) {
  Verdict v;
  if (std::gcd<std::uint64_t>(s + 1, 6) != 1) {
    v.conditions[0] = 2;
    return v;
  }
  v.conditions[0] = 1;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> squares;
  for (auto [p, e] : factorize(s * s + 1)) {
    if (e >= 2) squares.emplace_back(p, e);
  }
  if (squares.empty()) {
    v.conditions[1] = 2;
    return v;
  }
  v.conditions[1] = 1;
  v.conditions[2] = 1;
  std::optional<std::pair<std::uint64_t, std::uint32_t>> c4, c5;
  for (auto [p, e] : squares) {
    const cpp_int pe = boost::multiprecision::pow(cpp_int(p), e);
    if (pe < 2 * cpp_int(s) + 3) continue;
    if (!c4) c4 = std::make_pair(p, e);
    if (c5_bigint(s, p, e)) {
      c5 = std::make_pair(p, e);
      break;
    }
  }
  const auto w = c5 ? *c5 : (c4 ? *c4 : squares.front());
  v.witness_p = w.first;
  v.witness_n = w.second;
  if (!c4) {
    v.conditions[3] = 2;
    return v;
  }
  v.conditions[3] = 1;
  v.conditions[4] = c5 ? 1 : 2;
  v.pass = c5.has_value();
  return v;
}

bool marked_naive(std::uint64_t s) {
  for (auto [p, e] : factorize(s * s + 1)) {
    if (e >= 2 && p % 4 == 1) return true;
  }
  return false;
}

std::vector<SuzukiPair> suzuki_pairs(std::uint64_t x, bool u_form) {
  std::vector<SuzukiPair> out;
  const cpp_int coarse = 2 * cpp_int(x + 1);
  std::uint64_t two = 1;
  while ((x + 1) % (two * 2) == 0) two *= 2;
  const cpp_int order = u_form ? (cpp_int(x) * x + 1) * (boost::multiprecision::pow(cpp_int(x), 5) + 1)
                               : cpp_int(x + 1) * (cpp_int(x) * x + 1);
  for (std::uint64_t q = 8; cpp_int(q) * q <= coarse; q *= 4) {
    const cpp_int sz = cpp_int(q) * q * (q - 1) * (cpp_int(q) * q + 1);
    std::uint64_t root = 0;
    while ((root + 1) * (root + 1) <= 2 * q) ++root;
    for (std::uint32_t m = 1; boost::multiprecision::pow(cpp_int(q), 2 * m) <= coarse; ++m) {
      SuzukiPair pair{q, m, false, false, false};
      pair.a = boost::multiprecision::pow(cpp_int(q), 2 * m) <= 2 * cpp_int(two);
      if (u_form) {
        pair.b = 2 * (cpp_int(x) * x + 1) <= cpp_int(m) * q * (q - 1) * (cpp_int(q) * q + 1);
      } else {
        pair.b = cpp_int(x + 1) <= cpp_int(m) * q * q * (q - 1) * (q + root + 1);
      }
      pair.c = order % boost::multiprecision::pow(sz, m) == 0;
      out.push_back(pair);
    }
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> classes_by_orbits(const Table& t) {
  const std::uint32_t n = static_cast<std::uint32_t>(t.size());
  std::vector<std::uint32_t> inv(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (t[a][b] == 0) inv[a] = b;
    }
  }
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::uint32_t>> classes;
  for (std::uint32_t g = 0; g < n; ++g) {
    if (seen[g]) continue;
    std::set<std::uint32_t> orbit;
    for (std::uint32_t h = 0; h < n; ++h) orbit.insert(t[t[inv[h]][g]][h]);
    for (auto x : orbit) seen[x] = true;
    classes.emplace_back(orbit.begin(), orbit.end());
  }
  return classes;
}

std::vector<std::uint32_t> center_by_commutation(const Table& t) {
  std::vector<std::uint32_t> z;
  for (std::uint32_t g = 0; g < t.size(); ++g) {
    bool central = true;
    for (std::uint32_t h = 0; h < t.size() && central; ++h) central = t[g][h] == t[h][g];
    if (central) z.push_back(g);
  }
  return z;
}

std::uint32_t order_by_powers(const Table& t, std::uint32_t g) {
  std::uint32_t k = 1;
  for (std::uint32_t x = g; x != 0; x = t[x][g]) ++k;
  return k;
}

bool sigma_axioms(const Table& t, const std::vector<std::uint32_t>& sigma) {
  const std::size_t n = t.size();
  std::vector<std::uint32_t> inv(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (t[a][b] == 0) inv[a] = b;
    }
  }
  std::vector<int> reps(n, 0);
  const std::set<std::uint32_t> in(sigma.begin(), sigma.end());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    for (std::size_t j = 0; j < sigma.size(); ++j) {
      for (std::size_t k = 0; k < sigma.size(); ++k) {
        const auto x = t[t[sigma[i]][inv[sigma[j]]]][sigma[k]];
        const bool generic = i != j && k != j;
        if (generic && in.count(x)) return false;  // AX2
        if (generic) ++reps[x];
      }
    }
  }
  for (std::uint32_t g = 0; g < n; ++g) {
    if (!in.count(g) && reps[g] != 1) return false;  // AX1
  }
  return true;
}

std::vector<std::vector<std::uint32_t>> sigma_subsets(const Table& t, std::size_t size) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> current{0};
  const std::uint32_t n = static_cast<std::uint32_t>(t.size());
  auto rec = [&](auto&& self, std::uint32_t next) -> void {
    if (current.size() == size) {
      if (sigma_axioms(t, current)) out.push_back(current);
      return;
    }
    for (std::uint32_t g = next; g < n; ++g) {
      current.push_back(g);
      self(self, g + 1);
      current.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

namespace {

std::vector<std::vector<char>> collinear_matrix(std::size_t np, const Lines& lines) {
  std::vector<std::vector<char>> c(np, std::vector<char>(np, 0));
  for (const auto& l : lines) {
    for (auto a : l) {
      for (auto b : l) {
        if (a != b) c[a][b] = 1;
      }
    }
  }
  return c;
}

}  // namespace

std::optional<std::pair<std::size_t, std::size_t>> gq_order(std::size_t np, const Lines& lines) {
  if (lines.empty()) return std::nullopt;
  const std::size_t line_size = lines[0].size();
  for (const auto& l : lines) {
    if (l.size() != line_size) return std::nullopt;
  }
  std::vector<std::size_t> degree(np, 0);
  for (const auto& l : lines) {
    for (auto p : l) ++degree[p];
  }
  for (auto d : degree) {
    if (d != degree[0]) return std::nullopt;
  }
  // two points on at most one line
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> pair_count;
  for (const auto& l : lines) {
    for (auto a : l) {
      for (auto b : l) {
        if (a < b && ++pair_count[{a, b}] > 1) return std::nullopt;
      }
    }
  }
  const auto c = collinear_matrix(np, lines);
  for (const auto& l : lines) {
    const std::set<std::uint32_t> on(l.begin(), l.end());
    for (std::uint32_t p = 0; p < np; ++p) {
      if (on.count(p)) continue;
      int hits = 0;
      for (auto x : l) hits += c[p][x];
      if (hits != 1) return std::nullopt;
    }
  }
  return std::make_pair(line_size - 1, degree[0] - 1);
}

std::vector<std::vector<std::uint32_t>> collineations(std::size_t np, const Lines& lines) {
  const auto c = collinear_matrix(np, lines);
  std::set<std::vector<std::uint32_t>> line_set;
  for (auto l : lines) {
    std::sort(l.begin(), l.end());
    line_set.insert(l);
  }
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> image(np);
  std::vector<bool> used(np, false);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == np) {
      for (const auto& l : lines) {
        std::vector<std::uint32_t> im;
        for (auto p : l) im.push_back(image[p]);
        std::sort(im.begin(), im.end());
        if (!line_set.count(im)) return;
      }
      out.push_back(image);
      return;
    }
    for (std::uint32_t x = 0; x < np; ++x) {
      if (used[x]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = c[i][j] == c[x][image[j]];
      if (!ok) continue;
      used[x] = true;
      image[i] = x;
      self(self, i + 1);
      used[x] = false;
    }
  };
  rec(rec, 0);
  return out;
}

bool polarity_exists_brute(std::size_t np, const Lines& lines) {
  if (lines.size() != np) return false;
  std::vector<std::set<std::uint32_t>> on(lines.size());
  for (std::size_t l = 0; l < lines.size(); ++l) on[l] = {lines[l].begin(), lines[l].end()};
  std::vector<std::uint32_t> p2l(np), l2p(np);
  std::iota(p2l.begin(), p2l.end(), 0);
  do {
    std::iota(l2p.begin(), l2p.end(), 0);
    do {
      bool ok = true;
      for (std::uint32_t p = 0; p < np && ok; ++p) ok = l2p[p2l[p]] == p;
      for (std::uint32_t p = 0; p < np && ok; ++p) {
        for (std::uint32_t l = 0; l < np && ok; ++l) {
          // P on l  <=>  theta(l) on theta(P)
          ok = (on[l].count(p) > 0) == (on[p2l[p]].count(l2p[l]) > 0);
        }
      }
      if (ok) return true;
    } while (std::next_permutation(l2p.begin(), l2p.end()));
  } while (std::next_permutation(p2l.begin(), p2l.end()));
  return false;
}

std::size_t count_regular_subgroups(const std::vector<std::vector<std::uint32_t>>& elements, std::size_t k,
                                    const Lines& lines, bool lines_too) {
  const std::size_t n = elements.size();
  const std::size_t np = elements.front().size();
  std::map<std::vector<std::uint32_t>, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[elements[i]] = i;
  std::set<std::vector<std::uint32_t>> line_set;
  for (auto l : lines) {
    std::sort(l.begin(), l.end());
    line_set.insert(l);
  }
  auto fixes_something = [&](const std::vector<std::uint32_t>& g) {
    bool identity = true;
    for (std::size_t x = 0; x < np; ++x) identity = identity && g[x] == x;
    if (identity) return false;
    for (std::size_t x = 0; x < np; ++x) {
      if (g[x] == x) return true;
    }
    if (!lines_too) return false;
    for (auto l : lines) {
      std::vector<std::uint32_t> im;
      for (auto p : l) im.push_back(g[p]);
      std::sort(im.begin(), im.end());
      std::sort(l.begin(), l.end());
      if (im == l) return true;
    }
    return false;
  };
  auto compose = [&](std::size_t a, std::size_t b) {
    std::vector<std::uint32_t> r(np);
    for (std::size_t x = 0; x < np; ++x) r[x] = elements[b][elements[a][x]];
    return index.at(r);
  };
  // every k-subset of the group, tested for closure (small groups only)
  std::size_t count = 0;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  std::sort(pick.begin(), pick.end());
  do {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (pick[i]) members.push_back(i);
    }
    const std::set<std::size_t> in(members.begin(), members.end());
    bool closed = true;
    for (auto a : members) {
      for (auto b : members) closed = closed && in.count(compose(a, b));
    }
    if (!closed) continue;
    bool regular = true;
    for (auto a : members) regular = regular && !fixes_something(elements[a]);
    if (regular) ++count;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return count;
}

}  // namespace oracle
