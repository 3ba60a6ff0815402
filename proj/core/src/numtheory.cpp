#include "cace/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>

namespace cace {

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 checked_mul(u64 a, u64 b) {
  if (a != 0 && b > std::numeric_limits<u64>::max() / a)
    throw RangeViolation("product " + std::to_string(a) + " * " +
                         std::to_string(b) + " exceeds 64 bits");
  return a * b;
}

u64 mod_inverse(u64 a, u64 m) {
  if (m == 0) throw RangeViolation("inverse modulo 0 is undefined");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1)
    throw RangeViolation(std::to_string(a) + " is not invertible modulo " +
                         std::to_string(m));
  return static_cast<u64>(t < 0 ? t + static_cast<std::int64_t>(m) : t);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Witness set exact below 3.3 * 10^24, so for the whole 64-bit range.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

namespace {

// Pollard rho (Brent's cycle finding). n must be odd, composite, > 1.
u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    auto step = [n, c](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    u64 x = 2, y = 2, d = 1;
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(u64 n, std::map<u64, u32>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  u64 d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

u64 Factorization::reconstruct() const {
  u64 product = 1;
  for (auto [p, e] : exponents)
    for (u32 i = 0; i < e; ++i) product = checked_mul(product, p);
  return product;
}

Factorization factorize(u64 n) {
  if (n == 0) throw RangeViolation("factorize requires n >= 1");
  Factorization f;
  f.value = n;
  for (u64 p : {2ull, 3ull, 5ull}) {
    while (n % p == 0) {
      ++f.exponents[p];
      n /= p;
    }
  }
  // Wheel over 6k +/- 1 up to 2^16, then rho for the hard remainder.
  for (u64 p = 7; p < (u64{1} << 16) && p * p <= n; p += 6) {
    for (u64 q : {p, p + 4}) {
      while (n % q == 0) {
        ++f.exponents[q];
        n /= q;
      }
    }
  }
  factor_into(n, f.exponents);
  return f;
}

u64 euler_phi(u64 n) {
  u64 phi = 1;
  for (auto [p, e] : factorize(n).exponents) {
    phi *= p - 1;
    for (u32 i = 1; i < e; ++i) phi = checked_mul(phi, p);
  }
  return phi;
}

bool is_primitive_root(u64 g, u64 p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (g == 0 || g >= p)
    throw RangeViolation("candidate root must lie in [1, p-1]");
  if (p == 2) return g == 1;
  for (auto [r, e] : factorize(p - 1).exponents) {
    (void)e;
    if (pow_mod(g, (p - 1) / r, p) == 1) return false;
  }
  return true;
}

std::vector<u64> primitive_roots(u64 p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (p < 3) throw RangeViolation("primitive_roots requires p >= 3");
  std::vector<u64> roots;
  if (p < IndexTable::kTableLimit) {
    // One index table; g is primitive iff gcd(ind(g), p-1) = 1.
    u64 g0 = smallest_primitive_root(p);
    IndexTable table(p, g0);
    for (u64 g = 2; g < p; ++g)
      if (std::gcd(table(g), p - 1) == 1) roots.push_back(g);
  } else {
    auto factors = factorize(p - 1).exponents;
    for (u64 g = 2; g < p; ++g) {
      bool primitive = true;
      for (auto [r, e] : factors) {
        (void)e;
        if (pow_mod(g, (p - 1) / r, p) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) roots.push_back(g);
    }
  }
  return roots;
}

u64 smallest_primitive_root(u64 p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (p < 3) throw RangeViolation("smallest_primitive_root requires p >= 3");
  auto factors = factorize(p - 1).exponents;
  for (u64 g = 2; g < p; ++g) {
    bool primitive = true;
    for (auto [r, e] : factors) {
      (void)e;
      if (pow_mod(g, (p - 1) / r, p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  throw NotPrime("no primitive root found; p is not an odd prime");
}

IndexTable::IndexTable(u64 p, u64 g) : p_(p), g_(g) {
  if (!is_prime(p) || p < 3) throw NotPrime("IndexTable requires an odd prime");
  if (p >= kTableLimit)
    throw RangeViolation("prime too large for a dense index table; use discrete_log");
  if (!is_primitive_root(g, p))
    throw NotPrimitiveRoot(std::to_string(g) + " is not a primitive root of " +
                           std::to_string(p));
  index_.assign(p, 0);
  u64 value = 1;
  for (u64 e = 0; e + 1 < p; ++e) {
    index_[value] = static_cast<u32>(e);
    value = mul_mod(value, g, p);
  }
}

u64 IndexTable::operator()(u64 a) const {
  a %= p_;
  if (a == 0) throw RangeViolation("index of 0 is undefined");
  return index_[a];
}

u64 discrete_log(u64 a, u64 g, u64 p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  a %= p;
  g %= p;
  if (a == 0 || g == 0) throw RangeViolation("discrete_log arguments must be nonzero mod p");
  if (a == 1) return 0;
  const u64 order = p - 1;
  const u64 m = static_cast<u64>(std::ceil(std::sqrt(static_cast<double>(order))));
  std::unordered_map<u64, u64> baby;
  baby.reserve(m);
  u64 value = 1;
  for (u64 j = 0; j < m; ++j) {
    baby.emplace(value, j);  // keeps the smallest j on duplicates
    value = mul_mod(value, g, p);
  }
  const u64 giant = pow_mod(pow_mod(g, m, p), p - 2, p);
  u64 gamma = a;
  for (u64 i = 0; i <= m; ++i) {
    auto it = baby.find(gamma);
    if (it != baby.end()) return i * m + it->second;
    gamma = mul_mod(gamma, giant, p);
  }
  throw RangeViolation("no discrete logarithm: value outside the subgroup of the base");
}

std::vector<u64> index_range(u64 p, u64 g, u64 upto) {
  if (upto >= p) throw WeightTooLarge("index_range needs upto < p");
  std::vector<u64> indices;
  indices.reserve(upto);
  if (p < IndexTable::kTableLimit) {
    IndexTable table(p, g);
    for (u64 k = 1; k <= upto; ++k) indices.push_back(table(k));
  } else {
    if (!is_primitive_root(g % p, p))
      throw NotPrimitiveRoot(std::to_string(g) + " is not a primitive root of " +
                             std::to_string(p));
    for (u64 k = 1; k <= upto; ++k) indices.push_back(discrete_log(k, g, p));
  }
  return indices;
}

bool coprime_to_factorial(u64 q, u32 omega) {
  if (q == 0 || omega < 2)
    throw RangeViolation("coprime_to_factorial requires q >= 1 and omega >= 2");
  for (u64 i = 2; i < omega; ++i)
    if (std::gcd(q, i) != 1) return false;
  return true;
}

}  // namespace cace
