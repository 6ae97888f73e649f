#include "gqforge/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gqforge::numtheory {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::uint64_t isqrt(u128 n) {
  if (n >> 64 == 0) return isqrt(static_cast<std::uint64_t>(n));
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(std::uint64_t n) {
  const auto r = isqrt(n);
  return static_cast<u128>(r) * r == n;
}

u128 gcd(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  i128 t = 0, new_t = 1;
  i128 r = m, new_r = a % m;
  while (new_r != 0) {
    const i128 quotient = r / new_r;
    const i128 tt = t - quotient * new_t;
    t = new_t;
    new_t = tt;
    const i128 rr = r - quotient * new_r;
    r = new_r;
    new_r = rr;
  }
  if (r != 1) throw std::domain_error("not invertible");
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

std::uint64_t two_part(std::uint64_t n) { return n & (~n + 1); }

bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

std::uint64_t sqrt_minus_one_mod_p_squared(std::uint64_t p) {
  std::uint64_t c = 2;
  while (powmod(c, (p - 1) / 2, p) != p - 1) ++c;
  const std::uint64_t r = powmod(c, (p - 1) / 4, p);
  const std::uint64_t m = p * p;
  // r' = r - (r^2 + 1) / (2r) mod p^2
  const std::uint64_t f = (mulmod(r, r, m) + 1) % m;
  const std::uint64_t step = mulmod(f, invmod((2 * r) % m, m), m);
  return (r + m - step) % m;
}

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace gqforge::numtheory
