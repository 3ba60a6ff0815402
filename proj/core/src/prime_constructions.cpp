#include "cace/prime_constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cace {

namespace {

void require_odd_prime(u64 p) {
  if (p < 3 || !is_prime(p))
    throw NotPrime(std::to_string(p) + " is not an odd prime");
}

void require_root(u64 g, u64 p) {
  if (g == 0 || g >= p || !is_primitive_root(g, p))
    throw NotPrimitiveRoot(std::to_string(g) + " is not a primitive root of " +
                           std::to_string(p));
}

// Generators g^(v*lambda*i + j) mod p, i-major so printed order matches the
// natural reading of the family.
std::vector<u64> power_family(u64 p, u64 g, u64 lambda, u64 v) {
  const u64 block = v * lambda;
  const u64 icount = (p - 1) / (2 * block);
  std::vector<u64> generators;
  generators.reserve(icount * v);
  const u64 stride = pow_mod(g, block, p);
  u64 row = 1;  // g^(v*lambda*i)
  for (u64 i = 0; i < icount; ++i) {
    u64 value = row;
    for (u64 j = 0; j < v; ++j) {
      generators.push_back(value);
      value = mul_mod(value, g, p);
    }
    row = mul_mod(row, stride, p);
  }
  return generators;
}

std::vector<u64> weight2_family(u64 p) {
  std::vector<u64> generators((p - 1) / 2);
  std::iota(generators.begin(), generators.end(), u64{1});
  return generators;
}

}  // namespace

MuCertificate compute_mu(u64 p, u64 g, u32 omega) {
  if (omega < 2) throw RangeViolation("weight must be at least 2");
  require_odd_prime(p);
  g %= p;
  const u64 lambda = omega - 1;
  if (lambda >= p)
    throw WeightTooLarge("omega-1 = " + std::to_string(lambda) +
                         " must be smaller than p = " + std::to_string(p));
  require_root(g, p);

  MuCertificate cert;
  cert.p = p;
  cert.g = g;
  cert.omega = omega;
  cert.indices = index_range(p, g, lambda);

  u64 mu = (p - 1) / 2;  // ind_g(-1)
  for (u64 k = 2; k <= lambda; ++k) mu = std::gcd(mu, cert.indices[k - 1]);
  cert.mu = mu;

  cert.residue_profile.reserve(lambda);
  for (u64 k = 1; k <= lambda; ++k) {
    const u64 ind = cert.indices[k - 1];
    if (ind % mu != 0)
      throw std::logic_error("mu does not divide ind(" + std::to_string(k) + ")");
    cert.residue_profile.push_back((ind / mu) % lambda);
  }
  return cert;
}

bool theorem3_condition(const MuCertificate& cert) {
  std::vector<u64> profile = cert.residue_profile;
  std::ranges::sort(profile);
  return std::ranges::adjacent_find(profile) == profile.end();
}

namespace {

Code theorem3_build(u64 p, u64 g, u32 omega, bool check_condition, bool checked_code) {
  if (omega == 2) {
    require_odd_prime(p);
    require_root(g % p, p);
    return Code(p, 2, weight2_family(p));
  }
  g %= p;
  MuCertificate cert = compute_mu(p, g, omega);
  const u64 lambda = cert.lambda();
  const u64 block = checked_mul(checked_mul(2, cert.mu), lambda);
  if ((p - 1) % block != 0)
    throw CongruenceViolated("p = 1 (mod 2*mu*lambda) required: p = " +
                             std::to_string(p) + ", mu = " + std::to_string(cert.mu) +
                             ", lambda = " + std::to_string(lambda));
  if (check_condition && !theorem3_condition(cert))
    throw ConditionViolated("index residues (ind(k)/mu) mod lambda do not cover [0, lambda-1]");
  auto generators = power_family(p, g, lambda, cert.mu);
  return checked_code ? Code(p, omega, std::move(generators))
                      : Code::unchecked(p, omega, std::move(generators));
}

}  // namespace

Code theorem3_construct(u64 p, u64 g, u32 omega) {
  return theorem3_build(p, g, omega, true, true);
}

Code theorem3_family_unchecked(u64 p, u64 g, u32 omega) {
  return theorem3_build(p, g, omega, false, false);
}

Code remark2_construct(u64 p, u64 g, u32 omega, u64 v) {
  if (omega == 2) {
    require_odd_prime(p);
    require_root(g % p, p);
    if (v == 0 || ((p - 1) / 2) % v != 0)
      throw DivisorViolation("v must divide mu = (p-1)/2");
    return Code(p, 2, weight2_family(p));
  }
  g %= p;
  MuCertificate cert = compute_mu(p, g, omega);
  const u64 lambda = cert.lambda();
  if (v == 0 || cert.mu % v != 0)
    throw DivisorViolation("v = " + std::to_string(v) + " does not divide mu = " +
                           std::to_string(cert.mu));
  if (std::gcd(cert.mu / v, lambda) != 1)
    throw DivisorViolation("gcd(mu/v, lambda) = " +
                           std::to_string(std::gcd(cert.mu / v, lambda)) +
                           " must be 1");
  if (!theorem3_condition(cert))
    throw ConditionViolated("index residues (ind(k)/mu) mod lambda do not cover [0, lambda-1]");
  if ((p - 1) % (2 * v * lambda) != 0)
    throw CongruenceViolated("p = 1 (mod 2*v*lambda) required: p = " + std::to_string(p) +
                             ", v = " + std::to_string(v) + ", lambda = " +
                             std::to_string(lambda));
  return Code(p, omega, power_family(p, g, lambda, v));
}

Theorem4Profile theorem4_profile(u64 p, u64 g, u64 k) {
  if (k == 0 || k > (u64{1} << 30)) throw RangeViolation("k must lie in [1, 2^30]");
  require_odd_prime(p);
  g %= p;
  if ((p - 1) % (4 * k) != 0)
    throw CongruenceViolated("p = 1 (mod 4k) required: p = " + std::to_string(p) +
                             ", k = " + std::to_string(k));
  require_root(g, p);

  auto indices = index_range(p, g, 4 * k);
  Theorem4Profile profile;
  profile.odd_residues.reserve(2 * k);
  profile.even_residues.reserve(2 * k);
  for (u64 i = 1; i <= 4 * k; i += 2) profile.odd_residues.push_back(indices[i - 1] % (2 * k));
  for (u64 i = 2; i <= 4 * k; i += 2) profile.even_residues.push_back(indices[i - 1] % (2 * k));

  auto covers_all = [&](const std::vector<u64>& values) {
    std::vector<bool> seen(2 * k, false);
    for (u64 value : values) seen[value] = true;
    return std::ranges::all_of(seen, [](bool b) { return b; });
  };
  profile.covers = covers_all(profile.odd_residues) && covers_all(profile.even_residues);
  return profile;
}

bool theorem4_condition(u64 p, u64 g, u64 k) {
  return theorem4_profile(p, g, k).covers;
}

Code theorem4_construct(u64 p, u64 k, std::optional<u64> g) {
  if (k == 0 || k > (u64{1} << 30)) throw RangeViolation("k must lie in [1, 2^30]");
  require_odd_prime(p);
  if ((p - 1) % (4 * k) != 0)
    throw CongruenceViolated("p = 1 (mod 4k) required: p = " + std::to_string(p) +
                             ", k = " + std::to_string(k));
  u64 root = g ? *g % p : smallest_primitive_root(p);
  require_root(root, p);
  if (!theorem4_condition(p, root, k))
    throw ConditionViolated("index parity classes do not cover [0, 2k-1] mod 2k");

  const u64 odd_root = (root % 2 == 0) ? root + p : root;  // same residue mod p, odd
  const u64 n = checked_mul(2, p);
  const u64 count = (p - 1) / (4 * k);
  const u64 stride = pow_mod(odd_root, 2 * k, n);
  std::vector<u64> generators;
  generators.reserve(count);
  u64 value = 1;
  for (u64 j = 0; j < count; ++j) {
    generators.push_back(value);
    value = mul_mod(value, stride, n);
  }
  return Code(n, static_cast<u32>(4 * k + 1), std::move(generators));
}

bool lemma3_check(u64 p, u64 k) {
  if (k == 0) throw RangeViolation("k must be positive");
  require_odd_prime(p);
  if ((p - 1) % (4 * k) != 0)
    throw CongruenceViolated("p = 1 (mod 4k) required");
  bool first = true;
  bool verdict = false;
  for (u64 g : primitive_roots(p)) {
    bool current = theorem4_condition(p, g, k);
    if (first) {
      verdict = current;
      first = false;
    } else if (current != verdict) {
      return false;
    }
  }
  return true;
}

}  // namespace cace
