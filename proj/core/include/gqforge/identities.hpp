#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace gqforge {

/// One family of exact integer identities or inequalities checked over a
/// finite grid.
struct IdentityCheck {
  std::string name;
  std::string statement;
  std::string grid;
  std::uint64_t cases = 0;
  std::uint64_t failure_count = 0;
  /// The first few failing cases, spelled out.
  std::vector<std::string> failures;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;

  std::uint64_t total_cases() const;
  std::uint64_t total_failures() const;
  bool pass() const { return total_failures() == 0; }
};

/// Evaluates, with unbounded integers, the polynomial identities, divisor
/// enumerations and inequalities behind the Suzuki-group and polarity
/// nonexistence arguments.
IdentityReport verify_arithmetic_identities();

/// Positive divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace gqforge
