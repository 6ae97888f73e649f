#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace gqforge {

/// True iff q = 2^(2e+1) for some e >= 0.
bool is_suzuki_q(std::uint64_t q);

/// |Sz(q)| = q^2 (q-1)(q^2+1). Throws BadQ unless q = 2^(2e+1), and
/// RangeError when the order does not fit in 64 bits (q > 2048).
std::uint64_t suzuki_order(std::uint64_t q);

enum class FeasibilityKind { OrderS, OrderU };

std::string_view to_string(FeasibilityKind kind);

/// One (q, m) pair with N = Sz(q)^m and the outcome of each constraint.
/// For OrderS (a GQ of order s):
///   A: q^(2m) <= 2 (s+1)_2
///   B: s+1 <= m q^2 (q-1)(q + sqrt(2q) + 1)
///   C: |Sz(q)|^m divides (s+1)(s^2+1)
/// For OrderU (order (u^2, u^3)):
///   A: q^(2m) <= 2 (u+1)_2
///   B: u^2+1 <= m q (q-1)(q^2+1) / 2
///   C: |Sz(q)|^m divides (u^2+1)(u^5+1)
struct SuzukiPair {
  std::uint64_t q = 0;
  std::uint32_t m = 0;
  bool a = false;
  bool b = false;
  bool c = false;
  bool feasible() const { return a && b && c; }
  bool operator==(const SuzukiPair&) const = default;
};

struct FeasibilityReport {
  FeasibilityKind kind = FeasibilityKind::OrderS;
  std::uint64_t parameter = 0;
  /// Every pair with q >= 8 and q^(2m) <= 2(x+1), the coarse bound before
  /// the 2-part refinement of A.
  std::vector<SuzukiPair> evaluated;
  /// Pairs passing A, B and C.
  std::vector<SuzukiPair> candidates;
  bool empty = true;
};

/// Largest parameters accepted by the two filters (products stay in 128 bits).
inline constexpr std::uint64_t kMaxFeasibilityS = 0xFFFF'FFFFULL;
inline constexpr std::uint64_t kMaxFeasibilityU = 1ULL << 18;

/// Needs s odd, s > 1 and 3 not dividing s+1 (HypothesisFail otherwise).
FeasibilityReport sz_feasibility(std::uint64_t s);

/// Needs u odd, u > 1 and 3 not dividing u+1 (HypothesisFail otherwise).
FeasibilityReport uq_feasibility(std::uint64_t u);

}  // namespace gqforge
