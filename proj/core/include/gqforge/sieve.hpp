#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace gqforge {

/// Largest s accepted by the sieve: s^2 + 1 must fit in 64 bits.
inline constexpr std::uint64_t kMaxSieveS = 0xFFFF'FFFFULL;

enum class ConditionStatus : std::uint8_t { Skipped, Pass, Fail };

std::string_view to_string(ConditionStatus status);

struct PrimePower {
  std::uint64_t p = 0;
  std::uint32_t n = 0;
  bool operator==(const PrimePower&) const = default;
};

/// Outcome of the five necessary conditions on s for a group regular on
/// both points and lines of a thick GQ of order s:
///   C1 gcd(s+1, 6) = 1
///   C2 s^2+1 is not squarefree
///   C3 some prime p has p^n || s^2+1 with n >= 2
///   C4 that p^n >= 2s+3
///   C5 (s+1)(s^2+1) divides p^n * prod_{k=0}^{n-1} (p^(n-k) - 1)
/// Conditions short-circuit: after the first failure the rest are Skipped.
struct SieveVerdict {
  std::uint64_t s = 0;
  std::array<ConditionStatus, 5> conditions{};
  std::optional<std::uint64_t> witness_p;
  std::optional<std::uint32_t> witness_n;
  /// Primes whose square divides s^2+1, ascending, with full exponents.
  std::vector<PrimePower> factor_hint;
  bool pass = false;

  bool operator==(const SieveVerdict&) const = default;
};

SieveVerdict regreg_conditions(std::uint64_t s);

/// C5 by gcd peeling: divides M = (s+1)(s^2+1) by gcd(M, f) for each factor
/// f of the product; true iff M reaches 1.
bool order_divides_gl_bound(std::uint64_t s, std::uint64_t p, std::uint32_t n);

enum class SieveEmit { Survivors, All };

struct SieveOptions {
  SieveEmit emit = SieveEmit::Survivors;
  unsigned threads = 1;
  unsigned segment_bits = 22;
};

struct SieveSummary {
  std::uint64_t scanned = 0;
  std::uint64_t coprime_to_six = 0;  // C1 passes
  std::uint64_t not_squarefree = 0;  // C1 and C2 pass
  std::uint64_t survivors = 0;
};

/// Streams verdicts for s in [from, to] to `sink` in increasing s, whatever
/// the thread count. Only s with p^2 | s^2+1 for some prime p = 1 (mod 4)
/// get the full C3-C5 treatment; the marks come from a segmented sieve on
/// s = +-r (mod p^2) with r^2 = -1 (mod p^2).
SieveSummary sieve_range(std::uint64_t from, std::uint64_t to, const SieveOptions& options,
                         const std::function<void(const SieveVerdict&)>& sink);

std::vector<SieveVerdict> sieve_range_collect(std::uint64_t from, std::uint64_t to, const SieveOptions& options);

}  // namespace gqforge
