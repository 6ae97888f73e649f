#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "gqforge/identities.hpp"
#include "gqforge/json_io.hpp"
#include "gqforge/sieve.hpp"
#include "gqforge/suzuki.hpp"
#include "oracles.hpp"

using namespace gqforge;

namespace {

int code(ConditionStatus s) { return s == ConditionStatus::Skipped ? 0 : s == ConditionStatus::Pass ? 1 : 2; }

void expect_matches_oracle(const SieveVerdict& v) {
  const auto naive = oracle::naive_conditions(v.s);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(code(v.conditions[i]), naive.conditions[i]) << "s=" << v.s << " C" << i + 1;
  EXPECT_EQ(v.pass, naive.pass) << v.s;
}

}  // namespace

TEST(RegregConditions, Examples) {
  const auto s4 = regreg_conditions(4);
  EXPECT_EQ(s4.conditions[0], ConditionStatus::Pass);
  EXPECT_EQ(s4.conditions[1], ConditionStatus::Fail);
  EXPECT_EQ(s4.conditions[2], ConditionStatus::Skipped);

  const auto s70 = regreg_conditions(70);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(s70.conditions[i], ConditionStatus::Pass);
  EXPECT_EQ(s70.conditions[4], ConditionStatus::Fail);
  EXPECT_EQ(s70.witness_p, 13U);
  EXPECT_EQ(s70.witness_n, 2U);
  EXPECT_FALSE(s70.pass);

  const auto s18 = regreg_conditions(18);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(s18.conditions[i], ConditionStatus::Pass);
  EXPECT_EQ(s18.conditions[3], ConditionStatus::Fail);
  EXPECT_EQ(s18.witness_p, 5U);

  EXPECT_EQ(regreg_conditions(5).conditions[0], ConditionStatus::Fail);
  EXPECT_THROW(regreg_conditions(1), Error);
  EXPECT_THROW(regreg_conditions(kMaxSieveS + 1), Error);
}

TEST(RegregConditions, SeventyNumbers) {
  EXPECT_EQ(71U * 4901U, 347971U);
  EXPECT_EQ(169U * 168U * 12U, 340704U);
  EXPECT_EQ(oracle::factorize(4901), (std::vector<std::pair<std::uint64_t, std::uint32_t>>{{13, 2}, {29, 1}}));
  EXPECT_FALSE(oracle::c5_bigint(70, 13, 2));
  EXPECT_FALSE(order_divides_gl_bound(70, 13, 2));
}

TEST(RegregConditions, MatchesOracleWithWitness) {
  for (std::uint64_t s = 2; s <= 3000; ++s) {
    const auto v = regreg_conditions(s);
    expect_matches_oracle(v);
    const auto naive = oracle::naive_conditions(s);
    EXPECT_EQ(v.witness_p, naive.witness_p) << s;
    EXPECT_EQ(v.witness_n, naive.witness_n) << s;
  }
}

TEST(RegregConditions, LargeS) {
  for (std::uint64_t s : {std::uint64_t{kMaxSieveS}, kMaxSieveS - 2, std::uint64_t{4294967291ULL}, std::uint64_t{1000000007ULL}}) {
    const auto v = regreg_conditions(s);
    EXPECT_EQ(v.s, s);
  }
}

TEST(OrderDividesGlBound, MatchesBigIntegers) {
  std::mt19937_64 rng(2024);
  const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97, 101, 1009, 65537};
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t s = 2 + rng() % 5'000'000;
    const std::uint64_t p = primes[rng() % std::size(primes)];
    const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng() % 6);
    EXPECT_EQ(order_divides_gl_bound(s, p, n), oracle::c5_bigint(s, p, n)) << s << " " << p << " " << n;
  }
  // 15 divides 25 * 24 * 4.
  EXPECT_TRUE(oracle::c5_bigint(2, 5, 2));
  EXPECT_TRUE(order_divides_gl_bound(2, 5, 2));
  EXPECT_FALSE(order_divides_gl_bound(2, 5, 1));
}

TEST(SieveRange, MatchesOracleUpTo10k) {
  SieveOptions opt;
  opt.emit = SieveEmit::All;
  const auto all = sieve_range_collect(2, 10'000, opt);
  ASSERT_EQ(all.size(), 9999U);
  for (const auto& v : all) expect_matches_oracle(v);
}

TEST(SieveRange, MarkingSoundness) {
  SieveOptions opt;
  opt.emit = SieveEmit::All;
  for (const auto& v : sieve_range_collect(2, 10'000, opt)) {
    if (v.conditions[0] != ConditionStatus::Pass) continue;
    EXPECT_EQ(v.conditions[1] == ConditionStatus::Pass, oracle::marked_naive(v.s)) << v.s;
  }
  // p = 2 and p = 3 (mod 4) never divide s^2+1 twice once C1 holds.
  for (std::uint64_t s = 2; s <= 10'000; ++s) {
    if ((s + 1) % 2 == 0 || (s + 1) % 3 == 0) continue;
    for (auto [p, e] : oracle::factorize(s * s + 1)) {
      if (e >= 2) {
        EXPECT_EQ(p % 4, 1U) << s;
      }
    }
  }
}

TEST(SieveRange, SeventySingleton) {
  SieveOptions opt;
  opt.emit = SieveEmit::All;
  const auto v = sieve_range_collect(70, 70, opt);
  ASSERT_EQ(v.size(), 1U);
  EXPECT_EQ(v[0], regreg_conditions(70));
}

TEST(SieveRange, NoSurvivorsToMillion) {
  const auto summary = sieve_range(2, 1'000'000, {}, [](const SieveVerdict& v) { ADD_FAILURE() << "survivor " << v.s; });
  EXPECT_EQ(summary.scanned, 999'999U);
  EXPECT_EQ(summary.survivors, 0U);
}

TEST(SieveRange, ThreadCountDoesNotChangeOutput) {
  auto render = [](unsigned threads, unsigned bits) {
    SieveOptions opt;
    opt.emit = SieveEmit::All;
    opt.threads = threads;
    opt.segment_bits = bits;
    std::ostringstream out;
    const auto summary = sieve_range(2, 300'000, opt, [&](const SieveVerdict& v) { out << json_io::to_json(v).dump() << '\n'; });
    out << json_io::to_json(summary).dump();
    return out.str();
  };
  const auto one = render(1, 22);
  EXPECT_EQ(one, render(4, 12));
  EXPECT_EQ(one, render(3, 10));
}

TEST(SieveRange, RejectsBadRange) {
  EXPECT_THROW(sieve_range_collect(1, 10, {}), Error);
  EXPECT_THROW(sieve_range_collect(10, 5, {}), Error);
  EXPECT_THROW(sieve_range_collect(2, kMaxSieveS + 1, {}), Error);
}

TEST(Suzuki, Orders) {
  EXPECT_EQ(suzuki_order(8), 29120U);
  EXPECT_EQ(suzuki_order(2), 20U);
  EXPECT_EQ(suzuki_order(32), 32537600U);
  EXPECT_THROW(suzuki_order(4), Error);
  EXPECT_THROW(suzuki_order(12), Error);
  EXPECT_THROW(suzuki_order(8192), Error);
  for (std::uint64_t q : {8U, 32U, 128U, 512U}) {
    const auto n = suzuki_order(q);
    EXPECT_EQ(n % (q - 1), 0U);
    EXPECT_EQ(n % (q * q + 1), 0U);
    EXPECT_EQ(n % (q * q), 0U);
    EXPECT_NE(n % 3, 0U);
  }
}

TEST(Feasibility, Examples) {
  EXPECT_TRUE(sz_feasibility(9).empty);
  const auto r127 = sz_feasibility(127);
  EXPECT_TRUE(r127.empty);
  ASSERT_EQ(r127.evaluated.size(), 1U);
  EXPECT_EQ(r127.evaluated[0], (SuzukiPair{8, 1, true, true, false}));
  EXPECT_EQ(128U * 16130U, 2064640U);
  EXPECT_NE(2064640U % 29120U, 0U);

  EXPECT_TRUE(uq_feasibility(7).empty);
  const auto r31 = uq_feasibility(31);
  EXPECT_TRUE(r31.empty);
  ASSERT_EQ(r31.evaluated.size(), 1U);
  EXPECT_EQ(r31.evaluated[0], (SuzukiPair{8, 1, true, true, false}));

  for (std::uint64_t bad : {5U, 2U, 1U, 11U}) {
    try {
      sz_feasibility(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::HypothesisFail);
    }
  }
  EXPECT_THROW(uq_feasibility(5), Error);
}

TEST(Feasibility, MatchesBigIntegerOracle) {
  auto check = [](const FeasibilityReport& r, std::uint64_t x, bool u_form) {
    const auto naive = oracle::suzuki_pairs(x, u_form);
    ASSERT_EQ(r.evaluated.size(), naive.size()) << x;
    for (std::size_t i = 0; i < naive.size(); ++i) {
      EXPECT_EQ(r.evaluated[i], (SuzukiPair{naive[i].q, naive[i].m, naive[i].a, naive[i].b, naive[i].c})) << x;
    }
  };
  for (std::uint64_t s = 3; s <= 20'000; s += 2) {
    if ((s + 1) % 3 == 0) continue;
    check(sz_feasibility(s), s, false);
  }
  for (std::uint64_t s : {4294967295ULL - 4, 2147483647ULL, 536870911ULL}) {
    if ((s + 1) % 3 != 0) check(sz_feasibility(s), s, false);
  }
  for (std::uint64_t u = 3; u <= 5000; u += 2) {
    if ((u + 1) % 3 == 0) continue;
    check(uq_feasibility(u), u, true);
  }
}

TEST(Feasibility, MBoundAndUEmpty) {
  for (std::uint64_t s = 3; s <= 10'000; s += 2) {
    if ((s + 1) % 3 == 0) continue;
    for (const auto& c : sz_feasibility(s).candidates) EXPECT_LE(c.m, 2U) << s;
  }
  for (std::uint64_t u = 3; u <= 1000; u += 2) {
    if ((u + 1) % 3 == 0) continue;
    EXPECT_TRUE(uq_feasibility(u).empty) << u;
  }
}

TEST(Identities, AllPass) {
  const auto report = verify_arithmetic_identities();
  EXPECT_EQ(report.checks.size(), 12U);
  EXPECT_GT(report.total_cases(), 1000U);
  EXPECT_EQ(report.total_failures(), 0U);
  EXPECT_TRUE(report.pass());
  for (const auto& c : report.checks) EXPECT_GT(c.cases, 0U) << c.name;
}

TEST(Identities, Divisors) {
  EXPECT_EQ(divisors(2743), (std::vector<std::uint64_t>{1, 13, 211, 2743}));
  EXPECT_EQ(divisors(1), (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(divisors(36).size(), 9U);
  std::vector<std::uint64_t> u_plus_one;
  for (auto d : divisors(2743)) {
    if (d > 1) u_plus_one.push_back((d - 1) / 2);
  }
  EXPECT_EQ(u_plus_one, (std::vector<std::uint64_t>{6, 105, 1371}));
}
