#pragma once

#include <optional>

#include "cace/code.hpp"

namespace cace {

/// Certificate for the subgroup invariant mu at a prime p and weight omega:
/// mu = gcd(ind_g(-1), ind_g(2), ..., ind_g(omega-1)), i.e. the index of the
/// subgroup generated by -1, 2, ..., omega-1 in Z_p^*. `indices` holds
/// ind_g(k) for k = 1..omega-1 and `residue_profile` the values
/// (ind_g(k)/mu) mod (omega-1) in the same order. mu itself does not depend
/// on the choice of g.
struct MuCertificate {
  u64 p = 0;
  u64 g = 0;
  u32 omega = 0;
  u64 mu = 0;
  std::vector<u64> indices;
  std::vector<u64> residue_profile;

  u32 lambda() const noexcept { return omega - 1; }
};

/// Computes the certificate. For omega = 2 only ind_g(-1) participates, so
/// mu = (p-1)/2. Throws WeightTooLarge when omega-1 >= p.
MuCertificate compute_mu(u64 p, u64 g, u32 omega);

/// True iff the residue profile values are pairwise distinct, i.e. they cover
/// [0, omega-2] exactly.
bool theorem3_condition(const MuCertificate& cert);

/// Perfect code of prime length: generators g^(mu*lambda*i + j) mod p for
/// i in [0, (p-1)/(2*mu*lambda) - 1], j in [0, mu-1]. Requires
/// p = 1 (mod 2*mu*lambda) and theorem3_condition; the output has exactly
/// (p-1)/(2*lambda) codewords. For omega = 2 this degenerates to the explicit
/// family {1, ..., (p-1)/2}.
Code theorem3_construct(u64 p, u64 g, u32 omega);

/// Same power family without the condition check (the congruence is still
/// required to make the index range integral). When the condition fails the
/// returned set is provably not a valid code; callers verify it.
Code theorem3_family_unchecked(u64 p, u64 g, u32 omega);

/// Variant of theorem3_construct with the step divisor v in place of mu:
/// generators g^(v*lambda*i + j) for i in [0, (p-1)/(2*v*lambda) - 1],
/// j in [0, v-1]. Requires v | mu, gcd(mu/v, lambda) = 1, the condition at mu
/// and p = 1 (mod 2*v*lambda). v = mu reproduces theorem3_construct exactly.
Code remark2_construct(u64 p, u64 g, u32 omega, u64 v);

/// Ordered parity profile for the weight-(4k+1) condition at an odd prime
/// p = 1 (mod 4k): odd_residues[t] = ind_g(2t+1) mod 2k and
/// even_residues[t] = ind_g(2t+2) mod 2k for t in [0, 2k-1].
struct Theorem4Profile {
  std::vector<u64> odd_residues;
  std::vector<u64> even_residues;
  bool covers = false;  // both lists hit [0, 2k-1] exactly
};

Theorem4Profile theorem4_profile(u64 p, u64 g, u64 k);

/// True iff both parity classes of [1, 4k] cover [0, 2k-1] under
/// ind_g mod 2k. The verdict does not depend on the primitive root chosen.
bool theorem4_condition(u64 p, u64 g, u64 k);

/// Quasi-perfect code of length 2p and weight 4k+1: generators g^(2kj) mod 2p
/// for j in [0, (p-1)/(4k) - 1], with g an odd primitive root of p (an even
/// choice is replaced by g+p). Uses the smallest primitive root when g is
/// omitted. Requires p = 1 (mod 4k) and theorem4_condition.
Code theorem4_construct(u64 p, u64 k, std::optional<u64> g = std::nullopt);

/// Evaluates theorem4_condition on every primitive root of p and reports
/// whether all verdicts agree.
bool lemma3_check(u64 p, u64 k);

}  // namespace cace
