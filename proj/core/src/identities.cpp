#include "gqforge/identities.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <numeric>

#include "gqforge/numtheory.hpp"
#include "gqforge/suzuki.hpp"

namespace gqforge {

using boost::multiprecision::cpp_int;
using boost::multiprecision::pow;

std::uint64_t IdentityReport::total_cases() const {
  return std::accumulate(checks.begin(), checks.end(), std::uint64_t{0},
                         [](std::uint64_t acc, const IdentityCheck& c) { return acc + c.cases; });
}

std::uint64_t IdentityReport::total_failures() const {
  return std::accumulate(checks.begin(), checks.end(), std::uint64_t{0},
                         [](std::uint64_t acc, const IdentityCheck& c) { return acc + c.failure_count; });
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

namespace {

constexpr std::size_t kKeptFailures = 8;

class Recorder {
 public:
  Recorder(std::string name, std::string statement, std::string grid) {
    check_.name = std::move(name);
    check_.statement = std::move(statement);
    check_.grid = std::move(grid);
  }

  void expect(bool ok, const std::function<std::string()>& what) {
    ++check_.cases;
    if (ok) return;
    ++check_.failure_count;
    if (check_.failures.size() < kKeptFailures) check_.failures.push_back(what());
  }

  IdentityCheck done() { return std::move(check_); }

 private:
  IdentityCheck check_;
};

cpp_int two_pow(long e) { return pow(cpp_int(2), static_cast<unsigned>(e)); }

const std::uint64_t kSuzukiQs[] = {8, 32, 128, 512};

IdentityCheck sextic_remainder() {
  Recorder r("sextic-remainder-2743",
             "64(u^6-u^5+2u^4-2u^3+2u^2-u+1) = (2u+3)(32u^5-80u^4+184u^3-340u^2+574u-893) + 2743, and "
             "(u^2+1)(u^5+1)/(u+1) equals the sextic",
             "u = 1..1000");
  for (long v = 1; v <= 1000; ++v) {
    const cpp_int u = v;
    const cpp_int sextic = pow(u, 6) - pow(u, 5) + 2 * pow(u, 4) - 2 * pow(u, 3) + 2 * u * u - u + 1;
    const cpp_int quintic = 32 * pow(u, 5) - 80 * pow(u, 4) + 184 * pow(u, 3) - 340 * u * u + 574 * u - 893;
    r.expect(64 * sextic == (2 * u + 3) * quintic + 2743, [&] { return "u=" + std::to_string(v); });
    const cpp_int order = (u * u + 1) * (pow(u, 5) + 1);
    r.expect(order % (u + 1) == 0 && order / (u + 1) == sextic, [&] { return "quotient at u=" + std::to_string(v); });
  }
  return r.done();
}

IdentityCheck divisors_2743() {
  Recorder r("divisors-2743", "2743 = 13*211; 2u+3 | 2743 forces u+1 in {6, 105, 1371}, none a power of 2",
             "all divisors of 2743");
  const auto divs = divisors(2743);
  r.expect(divs == std::vector<std::uint64_t>{1, 13, 211, 2743}, [] { return std::string("divisor set"); });
  r.expect(13 * 211 == 2743, [] { return std::string("factorization"); });
  std::vector<std::uint64_t> u_plus_one;
  for (auto d : divs) {
    if (d < 5) continue;  // 2u+3 >= 5 for u >= 1
    u_plus_one.push_back((d - 3) / 2 + 1);
  }
  r.expect(u_plus_one == std::vector<std::uint64_t>{6, 105, 1371}, [] { return std::string("u+1 set"); });
  for (auto v : u_plus_one) {
    r.expect(!numtheory::is_power_of_two(v), [v] { return std::to_string(v) + " is a power of 2"; });
  }
  return r.done();
}

IdentityCheck two_power_decompositions() {
  Recorder r("two-power-decompositions",
             "with s+1 = 2^(n-1) q^2: s^2+1 = 2^(2n-2)q^4 - 2^n q^2 + 2 = (q^2+1)(2^(2n-2)q^2 - (2^(2n-2)+2^n)) + "
             "(2^(n-1)+1)^2 + 1 = (q^4-1)2^(2n-2) + (2^(2n-2) - 2^n q^2 + 2); with 2^(n-1) = 2^m q the "
             "substituted remainders reduce as stated",
             "n = 1..12, q in {8, 32, 128}; m = 0..12");
  for (long n = 1; n <= 12; ++n) {
    for (std::uint64_t qv : {8ULL, 32ULL, 128ULL}) {
      const cpp_int q = qv;
      const cpp_int s = two_pow(n - 1) * q * q - 1;
      const cpp_int value = two_pow(2 * n - 2) * pow(q, 4) - two_pow(n) * q * q + 2;
      auto at = [&] { return "n=" + std::to_string(n) + " q=" + std::to_string(qv); };
      r.expect(s * s + 1 == value, at);
      r.expect(value == (q * q + 1) * (two_pow(2 * n - 2) * q * q - (two_pow(2 * n - 2) + two_pow(n))) +
                            pow(two_pow(n - 1) + 1, 2) + 1,
               at);
      r.expect(value == (pow(q, 4) - 1) * two_pow(2 * n - 2) + (two_pow(2 * n - 2) - two_pow(n) * q * q + 2), at);
    }
  }
  for (long m = 0; m <= 12; ++m) {
    for (std::uint64_t qv : {8ULL, 32ULL, 128ULL}) {
      const cpp_int q = qv;
      auto at = [&] { return "m=" + std::to_string(m) + " q=" + std::to_string(qv); };
      const cpp_int lhs = two_pow(m + 1) * pow(q, 3) - two_pow(2 * m) * q * q - 2;
      const cpp_int rest = (two_pow(m + 1) - two_pow(2 * m)) * q * q - two_pow(m + 1) * q + (two_pow(m + 1) - 2);
      r.expect(lhs == (q - 1) * (q * q + 1) * two_pow(m + 1) + rest, at);
      r.expect(rest == (two_pow(m + 1) - two_pow(2 * m)) * (q * q + 1) + (two_pow(2 * m) - two_pow(m + 1) * q - 2), at);
    }
  }
  return r.done();
}

IdentityCheck quartic_remainders() {
  Recorder r("q-minus-one-remainders",
             "4(s^2+1) = q^8 - 4q^4 + 8 = (q-1)(q^7+q^6+q^5+q^4-3q^3-3q^2-3q-3) + 5 for s+1 = q^4/2; "
             "(q^4-1)^2 + 1 leaves remainder 1 and (2q^4-1)^2 + 1 remainder 2 modulo q-1",
             "q in {8, 32, 128, 512}");
  for (auto qv : kSuzukiQs) {
    const cpp_int q = qv;
    auto at = [&] { return "q=" + std::to_string(qv); };
    const cpp_int s = pow(q, 4) / 2 - 1;
    const cpp_int octic = pow(q, 8) - 4 * pow(q, 4) + 8;
    r.expect(4 * (s * s + 1) == octic, at);
    r.expect(octic == (q - 1) * (pow(q, 7) + pow(q, 6) + pow(q, 5) + pow(q, 4) - 3 * pow(q, 3) - 3 * q * q - 3 * q - 3) + 5, at);
    r.expect(pow(pow(q, 4) - 1, 2) % (q - 1) == 0 && (pow(pow(q, 4) - 1, 2) + 1) % (q - 1) == 1, at);
    r.expect((4 * pow(q, 4) * (pow(q, 4) - 1)) % (q - 1) == 0 &&
                 pow(2 * pow(q, 4) - 1, 2) + 1 == 4 * pow(q, 4) * (pow(q, 4) - 1) + 2 &&
                 (pow(2 * pow(q, 4) - 1, 2) + 1) % (q - 1) == 2,
             at);
  }
  return r.done();
}

IdentityCheck order_bound() {
  Recorder r("order-bound-124q6", "5q^2((5q^2-1)^2+1) > 124 q^6", "q in {8, 32, 128, 512}");
  for (auto qv : kSuzukiQs) {
    const cpp_int q = qv;
    r.expect(5 * q * q * (pow(5 * q * q - 1, 2) + 1) > 124 * pow(q, 6), [&] { return "q=" + std::to_string(qv); });
  }
  return r.done();
}

IdentityCheck polarity_chain() {
  Recorder r("polarity-chain", "s - sqrt(2s) + 1 < s + sqrt(2s) + 1 < 2s + 3 and their product is s^2 + 1",
             "s = 1..10000 with 2s a perfect square");
  for (std::uint64_t s = 1; s <= 10000; ++s) {
    if (!numtheory::is_square(2 * s)) continue;
    const std::int64_t root = static_cast<std::int64_t>(numtheory::isqrt(2 * s));
    const std::int64_t si = static_cast<std::int64_t>(s);
    const std::int64_t low = si - root + 1;
    const std::int64_t high = si + root + 1;
    r.expect(low < high && high < 2 * si + 3 && low * high == si * si + 1, [s] { return "s=" + std::to_string(s); });
  }
  return r.done();
}

IdentityCheck sz_m_bound() {
  Recorder r("sz-m-bound",
             "q^(2m) <= 2 m q^2 (q-1)(q+sqrt(2q)+1) only for m <= 2, matching 12m < 34",
             "q in {8, 32, 128, 512}, m = 1..20");
  for (auto qv : kSuzukiQs) {
    const cpp_int q = qv;
    const cpp_int root = numtheory::isqrt(2 * qv);
    for (long m = 1; m <= 20; ++m) {
      const bool holds = pow(q, static_cast<unsigned>(2 * m)) <= 2 * m * q * q * (q - 1) * (q + root + 1);
      r.expect(!holds || 12 * m < 34, [&] { return "q=" + std::to_string(qv) + " m=" + std::to_string(m); });
      // 2m > q^(2m-5) >= 1 + 7(2m-5) whenever the first inequality holds.
      if (holds) {
        r.expect(2 * m > 1 + 7 * (2 * m - 5), [&] { return "linear bound at m=" + std::to_string(m); });
      }
    }
  }
  return r.done();
}

IdentityCheck uq_m_bound() {
  Recorder r("uq-m-bound",
             "q^(2m) <= 2(u+1) and u^2+1 <= m q(q-1)(q^2+1)/2 together force m = 1; then "
             "(q^(2m)/2 - 1)^2 + 1 <= u^2 + 1",
             "u = 1..1000, q = 2^(2e+1) >= 8, m >= 1");
  for (std::uint64_t u = 1; u <= 1000; ++u) {
    for (std::uint64_t q = 8; q * q <= 2 * (u + 1); q *= 4) {
      cpp_int q2m = cpp_int(q) * q;
      for (long m = 1; q2m <= 2 * (u + 1); ++m, q2m *= cpp_int(q) * q) {
        const bool b = 2 * (cpp_int(u) * u + 1) <= cpp_int(m) * q * (q - 1) * (cpp_int(q) * q + 1);
        if (!b) continue;
        auto at = [&] { return "u=" + std::to_string(u) + " q=" + std::to_string(q) + " m=" + std::to_string(m); };
        r.expect(m == 1, at);
        r.expect(pow(q2m / 2 - 1, 2) + 1 <= cpp_int(u) * u + 1, at);
      }
    }
  }
  return r.done();
}

IdentityCheck u_minus_one_square() {
  Recorder r("u-minus-one-square", "(u^2 + 2u + 1) - (2u^2 + 2) = -(u-1)^2, so 2u^2 + 2 < u^2 + 2u + 1 never holds",
             "u = 1..1000");
  for (long v = 1; v <= 1000; ++v) {
    const cpp_int u = v;
    const cpp_int diff = (u * u + 2 * u + 1) - (2 * u * u + 2);
    r.expect(diff == -pow(u - 1, 2) && !(2 * u * u + 2 < u * u + 2 * u + 1), [v] { return "u=" + std::to_string(v); });
  }
  return r.done();
}

IdentityCheck three_never_divides() {
  Recorder r("three-never-divides-u2+1", "u^2 + 1 is 1 or 2 modulo 3", "u = 0..1000");
  for (std::uint64_t u = 0; u <= 1000; ++u) {
    r.expect((u * u + 1) % 3 != 0, [u] { return "u=" + std::to_string(u); });
  }
  return r.done();
}

IdentityCheck two_parts() {
  Recorder r("two-part-of-order",
             "for odd s, |(s+1)(s^2+1)|_2 = 2(s+1)_2; for odd u, |(u^2+1)(u^5+1)|_2 = 2(u+1)_2",
             "odd s = 1..9999, odd u = 1..999");
  for (std::uint64_t s = 1; s < 10000; s += 2) {
    const std::uint64_t order = (s + 1) * (s * s + 1);
    r.expect(numtheory::two_part(order) == 2 * numtheory::two_part(s + 1), [s] { return "s=" + std::to_string(s); });
  }
  for (std::uint64_t u = 1; u < 1000; u += 2) {
    const numtheory::u128 order = static_cast<numtheory::u128>(u * u + 1) * (u * u * u * u * u + 1);
    std::uint64_t power = 1;
    while (order % (static_cast<numtheory::u128>(power) * 2) == 0) power *= 2;
    r.expect(power == 2 * numtheory::two_part(u + 1), [u] { return "u=" + std::to_string(u); });
  }
  return r.done();
}

IdentityCheck suzuki_divisibility() {
  Recorder r("suzuki-order-factors", "|Sz(q)| is divisible by q-1, q^2+1 and q^2, never by 3, always by 5",
             "q in {8, 32, 128, 512}");
  for (auto q : kSuzukiQs) {
    const std::uint64_t order = suzuki_order(q);
    r.expect(order % (q - 1) == 0 && order % (q * q + 1) == 0 && order % (q * q) == 0 && order % 3 != 0 &&
                 order % 5 == 0,
             [q] { return "q=" + std::to_string(q); });
  }
  return r.done();
}

}  // namespace

IdentityReport verify_arithmetic_identities() {
  IdentityReport report;
  report.checks.push_back(sextic_remainder());
  report.checks.push_back(divisors_2743());
  report.checks.push_back(two_power_decompositions());
  report.checks.push_back(quartic_remainders());
  report.checks.push_back(order_bound());
  report.checks.push_back(polarity_chain());
  report.checks.push_back(sz_m_bound());
  report.checks.push_back(uq_m_bound());
  report.checks.push_back(u_minus_one_square());
  report.checks.push_back(three_never_divides());
  report.checks.push_back(two_parts());
  report.checks.push_back(suzuki_divisibility());
  return report;
}

}  // namespace gqforge
