#include "gqforge/sieve.hpp"

#include <algorithm>
#include <future>
#include <string>
#include <thread>

#include "gqforge/error.hpp"
#include "gqforge/numtheory.hpp"

namespace gqforge {

using numtheory::u128;

std::string_view to_string(ConditionStatus status) {
  switch (status) {
    case ConditionStatus::Skipped: return "skipped";
    case ConditionStatus::Pass: return "pass";
    case ConditionStatus::Fail: return "fail";
  }
  return "unknown";
}

bool order_divides_gl_bound(std::uint64_t s, std::uint64_t p, std::uint32_t n) {
  u128 m = static_cast<u128>(s + 1) * (static_cast<u128>(s) * s + 1);
  auto peel = [&](u128 f) {
    if (m == 1 || f == 0) return;
    m /= numtheory::gcd(m, f);
  };
  // p^n, then p^n - 1, p^(n-1) - 1, ..., p - 1
  u128 pn = 1;
  for (std::uint32_t i = 0; i < n; ++i) pn *= p;
  peel(pn);
  u128 pk = pn;
  for (std::uint32_t k = 0; k < n; ++k) {
    peel(pk - 1);
    pk /= p;
  }
  return m == 1;
}

namespace {

void check_s(std::uint64_t s) {
  if (s < 2) throw Error(ErrorKind::RangeError, "s must be at least 2");
  if (s > kMaxSieveS) throw Error(ErrorKind::RangeError, "s = " + std::to_string(s) + " exceeds " + std::to_string(kMaxSieveS));
}

bool coprime_to_six(std::uint64_t s) { return (s + 1) % 2 != 0 && (s + 1) % 3 != 0; }

// C2-C5 for an s that passed C1, given the primes whose square divides s^2+1.
void evaluate(SieveVerdict& v, const std::vector<std::uint64_t>& square_primes) {
  const std::uint64_t s = v.s;
  const std::uint64_t n2 = s * s + 1;
  auto& c = v.conditions;
  if (square_primes.empty()) {
    c[1] = ConditionStatus::Fail;
    return;
  }
  c[1] = ConditionStatus::Pass;
  for (auto p : square_primes) {
    PrimePower pp{p, 0};
    std::uint64_t rest = n2;
    while (rest % p == 0) {
      rest /= p;
      ++pp.n;
    }
    v.factor_hint.push_back(pp);
  }
  c[2] = ConditionStatus::Pass;
  const u128 bound = static_cast<u128>(2) * s + 3;
  const PrimePower* best_c4 = nullptr;
  const PrimePower* best_c5 = nullptr;
  for (const auto& pp : v.factor_hint) {
    u128 pn = 1;
    for (std::uint32_t i = 0; i < pp.n; ++i) pn *= pp.p;
    if (pn < bound) continue;
    if (!best_c4) best_c4 = &pp;
    if (order_divides_gl_bound(s, pp.p, pp.n)) {
      best_c5 = &pp;
      break;
    }
  }
  const PrimePower* witness = best_c5 ? best_c5 : (best_c4 ? best_c4 : &v.factor_hint.front());
  v.witness_p = witness->p;
  v.witness_n = witness->n;
  if (!best_c4) {
    c[3] = ConditionStatus::Fail;
    return;
  }
  c[3] = ConditionStatus::Pass;
  c[4] = best_c5 ? ConditionStatus::Pass : ConditionStatus::Fail;
  v.pass = best_c5 != nullptr;
}

SieveVerdict trivial_verdict(std::uint64_t s) {
  SieveVerdict v;
  v.s = s;
  if (!coprime_to_six(s)) {
    v.conditions[0] = ConditionStatus::Fail;
  } else {
    v.conditions[0] = ConditionStatus::Pass;
    v.conditions[1] = ConditionStatus::Fail;
  }
  return v;
}

struct MarkingPrime {
  std::uint64_t p;
  std::uint64_t modulus;  // p^2
  std::uint64_t root;     // root^2 = -1 (mod p^2)
};

std::vector<MarkingPrime> marking_primes(std::uint64_t to) {
  const std::uint64_t limit = numtheory::isqrt(static_cast<u128>(to) * to + 1);
  std::vector<MarkingPrime> result;
  for (auto p : numtheory::primes_up_to(limit)) {
    if (p % 4 != 1) continue;
    result.push_back({p, p * p, numtheory::sqrt_minus_one_mod_p_squared(p)});
  }
  return result;
}

// Full verdicts for the s in [lo, hi] that pass C1 and carry a mark.
std::vector<SieveVerdict> process_segment(std::uint64_t lo, std::uint64_t hi, const std::vector<MarkingPrime>& primes) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> marks;  // (s - lo, p)
  for (const auto& mp : primes) {
    if (mp.modulus > static_cast<u128>(hi) * hi + 1) break;
    for (std::uint64_t residue : {mp.root, mp.modulus - mp.root}) {
      const std::uint64_t offset = (residue + mp.modulus - lo % mp.modulus) % mp.modulus;
      for (u128 s = static_cast<u128>(lo) + offset; s <= hi; s += mp.modulus) {
        if (coprime_to_six(static_cast<std::uint64_t>(s))) marks.emplace_back(static_cast<std::uint64_t>(s) - lo, mp.p);
      }
    }
  }
  std::sort(marks.begin(), marks.end());
  std::vector<SieveVerdict> out;
  std::vector<std::uint64_t> square_primes;
  for (std::size_t i = 0; i < marks.size();) {
    const std::uint64_t off = marks[i].first;
    square_primes.clear();
    for (; i < marks.size() && marks[i].first == off; ++i) square_primes.push_back(marks[i].second);
    SieveVerdict v;
    v.s = lo + off;
    v.conditions[0] = ConditionStatus::Pass;
    evaluate(v, square_primes);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

SieveVerdict regreg_conditions(std::uint64_t s) {
  check_s(s);
  SieveVerdict v;
  v.s = s;
  if (!coprime_to_six(s)) {
    v.conditions[0] = ConditionStatus::Fail;
    return v;
  }
  v.conditions[0] = ConditionStatus::Pass;
  // s is even here, so s^2+1 is odd. Trial division to the cube root; what
  // is left is 1, a prime, a product of two distinct primes, or a prime
  // square.
  std::uint64_t rest = s * s + 1;
  std::vector<std::uint64_t> square_primes;
  for (std::uint64_t p = 3; static_cast<u128>(p) * p * p <= s * s + 1; p += 2) {
    if (rest % p != 0) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e >= 2) square_primes.push_back(p);
  }
  if (rest > 1 && numtheory::is_square(rest)) square_primes.push_back(numtheory::isqrt(rest));
  evaluate(v, square_primes);
  return v;
}

SieveSummary sieve_range(std::uint64_t from, std::uint64_t to, const SieveOptions& options,
                         const std::function<void(const SieveVerdict&)>& sink) {
  if (from < 2 || from > to) throw Error(ErrorKind::RangeError, "need 2 <= from <= to");
  if (to > kMaxSieveS) throw Error(ErrorKind::RangeError, "to exceeds " + std::to_string(kMaxSieveS));
  if (options.segment_bits < 4 || options.segment_bits > 30) throw Error(ErrorKind::RangeError, "segment bits must be in [4, 30]");
  const unsigned threads = std::max(1U, options.threads);
  const std::uint64_t seg_len = std::uint64_t{1} << options.segment_bits;
  const auto primes = marking_primes(to);

  SieveSummary summary;
  std::uint64_t next_lo = from;
  while (next_lo <= to) {
    // One batch: up to `threads` consecutive segments, merged in order.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> bounds;
    for (unsigned t = 0; t < threads && next_lo <= to; ++t) {
      const std::uint64_t hi = std::min<std::uint64_t>(to, next_lo + seg_len - 1);
      bounds.emplace_back(next_lo, hi);
      next_lo = hi + 1;
    }
    std::vector<std::vector<SieveVerdict>> results(bounds.size());
    if (bounds.size() == 1) {
      results[0] = process_segment(bounds[0].first, bounds[0].second, primes);
    } else {
      std::vector<std::future<std::vector<SieveVerdict>>> futures;
      for (const auto& [lo, hi] : bounds) {
        futures.push_back(std::async(std::launch::async, [&primes, lo = lo, hi = hi] { return process_segment(lo, hi, primes); }));
      }
      for (std::size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
    }

    for (std::size_t i = 0; i < bounds.size(); ++i) {
      const auto [lo, hi] = bounds[i];
      const auto& marked = results[i];
      summary.scanned += hi - lo + 1;
      for (std::uint64_t s = lo; s <= hi; ++s) summary.coprime_to_six += coprime_to_six(s);
      summary.not_squarefree += marked.size();
      for (const auto& v : marked) summary.survivors += v.pass;
      if (options.emit == SieveEmit::Survivors) {
        for (const auto& v : marked)
          if (v.pass) sink(v);
        continue;
      }
      std::size_t j = 0;
      for (std::uint64_t s = lo; s <= hi; ++s) {
        if (j < marked.size() && marked[j].s == s) {
          sink(marked[j++]);
        } else {
          sink(trivial_verdict(s));
        }
      }
    }
  }
  return summary;
}

std::vector<SieveVerdict> sieve_range_collect(std::uint64_t from, std::uint64_t to, const SieveOptions& options) {
  std::vector<SieveVerdict> out;
  sieve_range(from, to, options, [&](const SieveVerdict& v) { out.push_back(v); });
  return out;
}

}  // namespace gqforge
