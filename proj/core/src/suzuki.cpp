#include "gqforge/suzuki.hpp"

#include <string>

#include "gqforge/error.hpp"
#include "gqforge/numtheory.hpp"

namespace gqforge {

using numtheory::u128;

bool is_suzuki_q(std::uint64_t q) {
  if (!numtheory::is_power_of_two(q) || q < 2) return false;
  unsigned e = 0;
  while ((q >> e) != 1) ++e;
  return e % 2 == 1;
}

std::uint64_t suzuki_order(std::uint64_t q) {
  if (!is_suzuki_q(q)) throw Error(ErrorKind::BadQ, std::to_string(q) + " is not of the form 2^(2e+1)");
  if (q > 2048) throw Error(ErrorKind::RangeError, "|Sz(" + std::to_string(q) + ")| exceeds 64 bits");
  return q * q * (q - 1) * (q * q + 1);
}

std::string_view to_string(FeasibilityKind kind) {
  return kind == FeasibilityKind::OrderS ? "s" : "uq";
}

namespace {

u128 suzuki_order_wide(std::uint64_t q) {
  const u128 q2 = static_cast<u128>(q) * q;
  return q2 * (q - 1) * (q2 + 1);
}

// Whether order^m divides value, by repeated exact division.
bool power_divides(u128 order, std::uint32_t m, u128 value) {
  for (std::uint32_t i = 0; i < m; ++i) {
    if (value % order != 0) return false;
    value /= order;
  }
  return true;
}

void check_hypothesis(std::uint64_t x, const char* name) {
  if (x <= 1 || x % 2 == 0 || (x + 1) % 3 == 0) {
    throw Error(ErrorKind::HypothesisFail, std::string(name) + " = " + std::to_string(x) +
                                               " must be odd, greater than 1, with 3 not dividing " + name + "+1");
  }
}

template <typename Evaluate>
FeasibilityReport enumerate(FeasibilityKind kind, std::uint64_t x, Evaluate evaluate) {
  FeasibilityReport report;
  report.kind = kind;
  report.parameter = x;
  const u128 coarse = static_cast<u128>(2) * (x + 1);
  for (std::uint64_t q = 8; static_cast<u128>(q) * q <= coarse; q *= 4) {
    u128 q2m = static_cast<u128>(q) * q;
    for (std::uint32_t m = 1; q2m <= coarse; ++m, q2m *= static_cast<u128>(q) * q) {
      SuzukiPair pair = evaluate(q, m, q2m);
      report.evaluated.push_back(pair);
      if (pair.feasible()) report.candidates.push_back(pair);
    }
  }
  report.empty = report.candidates.empty();
  return report;
}

}  // namespace

FeasibilityReport sz_feasibility(std::uint64_t s) {
  check_hypothesis(s, "s");
  if (s > kMaxFeasibilityS) throw Error(ErrorKind::RangeError, "s exceeds " + std::to_string(kMaxFeasibilityS));
  const u128 two_part = 2 * static_cast<u128>(numtheory::two_part(s + 1));
  const u128 order = static_cast<u128>(s + 1) * (static_cast<u128>(s) * s + 1);
  return enumerate(FeasibilityKind::OrderS, s, [&](std::uint64_t q, std::uint32_t m, u128 q2m) {
    const std::uint64_t root = numtheory::isqrt(2 * q);
    const u128 class_bound = static_cast<u128>(m) * q * q * (q - 1) * (q + root + 1);
    SuzukiPair pair{q, m, q2m <= two_part, static_cast<u128>(s + 1) <= class_bound, false};
    pair.c = power_divides(suzuki_order_wide(q), m, order);
    return pair;
  });
}

FeasibilityReport uq_feasibility(std::uint64_t u) {
  check_hypothesis(u, "u");
  if (u > kMaxFeasibilityU) throw Error(ErrorKind::RangeError, "u exceeds " + std::to_string(kMaxFeasibilityU));
  const u128 two_part = 2 * static_cast<u128>(numtheory::two_part(u + 1));
  const u128 u2 = static_cast<u128>(u) * u;
  const u128 order = (u2 + 1) * (u2 * u2 * u + 1);
  return enumerate(FeasibilityKind::OrderU, u, [&](std::uint64_t q, std::uint32_t m, u128 q2m) {
    const u128 centralizer_bound = static_cast<u128>(m) * q * (q - 1) * (static_cast<u128>(q) * q + 1);
    SuzukiPair pair{q, m, q2m <= two_part, 2 * (u2 + 1) <= centralizer_bound, false};
    pair.c = power_divides(suzuki_order_wide(q), m, order);
    return pair;
  });
}

}  // namespace gqforge
