#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cace/errors.hpp"

namespace cace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

/// (a * b) mod m without overflow (128-bit intermediate).
u64 mul_mod(u64 a, u64 b, u64 m);

/// (base ^ exp) mod m by square-and-multiply.
u64 pow_mod(u64 base, u64 exp, u64 m);

/// a * b, throwing RangeViolation instead of wrapping past 2^64.
u64 checked_mul(u64 a, u64 b);

/// Inverse of a modulo m (extended Euclid); throws RangeViolation if
/// gcd(a, m) != 1.
u64 mod_inverse(u64 a, u64 m);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

/// Prime -> exponent map of a factored integer. `value` is the input, so the
/// round-trip product is checkable without outside context.
struct Factorization {
  u64 value = 1;
  std::map<u64, u32> exponents;

  /// Recompose prime^exponent; equals `value` by construction.
  u64 reconstruct() const;
};

/// Full factorization of n >= 1 (trial division, then Pollard rho on what
/// survives). n = 1 gives an empty map.
Factorization factorize(u64 n);

/// Euler's totient via factorization.
u64 euler_phi(u64 n);

/// True iff g generates the full multiplicative group mod the prime p.
/// Throws NotPrime for composite p, RangeViolation for g outside [1, p-1].
bool is_primitive_root(u64 g, u64 p);

/// All primitive roots of the prime p >= 3, ascending. The result has exactly
/// phi(p-1) entries.
std::vector<u64> primitive_roots(u64 p);

/// First element of primitive_roots(p).
u64 smallest_primitive_root(u64 p);

/// Dense table of discrete indices for an odd prime p and primitive root g:
/// table(a) is the unique e in [0, p-2] with g^e = a (mod p). Immutable after
/// construction; safe to share across threads.
class IndexTable {
 public:
  /// Largest prime this dense-table representation accepts. Above it, use
  /// discrete_log for point queries.
  static constexpr u64 kTableLimit = u64{1} << 24;

  IndexTable(u64 p, u64 g);

  u64 prime() const noexcept { return p_; }
  u64 root() const noexcept { return g_; }

  /// ind_g(a) for a not divisible by p.
  u64 operator()(u64 a) const;

 private:
  u64 p_;
  u64 g_;
  std::vector<u32> index_;
};

/// Baby-step/giant-step discrete logarithm: smallest e with g^e = a (mod p).
/// Intended for primes past IndexTable::kTableLimit; throws RangeViolation if
/// a lies outside the subgroup generated by g.
u64 discrete_log(u64 a, u64 g, u64 p);

/// ind_g(k) for k = 1..upto, choosing the dense table or BSGS per the prime's
/// size. upto must stay below p.
std::vector<u64> index_range(u64 p, u64 g, u64 upto);

/// True iff gcd(q, i) = 1 for every i in [2, omega-1], i.e.
/// gcd(q, (omega-1)!) = 1 without forming the factorial.
bool coprime_to_factorial(u64 q, u32 omega);

}  // namespace cace
