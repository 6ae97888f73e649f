#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gqforge::numtheory {

__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;

std::uint64_t isqrt(std::uint64_t n);
std::uint64_t isqrt(u128 n);
bool is_square(std::uint64_t n);

u128 gcd(u128 a, u128 b);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
/// Modular inverse of a modulo m (gcd(a, m) = 1 required).
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

/// Largest power of two dividing n (n > 0).
std::uint64_t two_part(std::uint64_t n);

bool is_power_of_two(std::uint64_t n);

/// Primes up to and including `limit`.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Root r with r^2 = -1 (mod p^2), 0 < r < p^2, for a prime p = 1 (mod 4):
/// a root mod p from c^((p-1)/4) with c the least non-residue, then one
/// Hensel step.
std::uint64_t sqrt_minus_one_mod_p_squared(std::uint64_t p);

std::string to_string(u128 v);

}  // namespace gqforge::numtheory
