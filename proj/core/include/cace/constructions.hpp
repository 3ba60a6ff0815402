#pragma once

#include <span>

#include "cace/code.hpp"

namespace cace {

/// Product of two codes of one weight: generators {x1 + q1*r} for x1 in the
/// left code, r in Z_q2, plus {q1*x2} for x2 in the right code, all mod q1*q2.
/// The result has exactly q2*|left| + |right| codewords and is valid whenever
/// gcd(q2, (omega-1)!) = 1. With bypass_gcd_guard the guard is skipped and the
/// raw generator set is returned unchecked; callers must verify it themselves.
Code combine(const Code& left, const Code& right, bool bypass_gcd_guard = false);

/// Projection onto the divisor q of n: keep generators divisible by n/q and
/// divide them by n/q. Valid input gives valid output.
Code project(const Code& code, u64 q);

/// Replaces the projection of `code` onto q1 (embedded back as multiples of
/// q2 = n/q1) with the strictly larger `replacement`, yielding a valid code of
/// size |code| - |projection| + |replacement|. Requires gcd(q2, (omega-1)!)=1.
Code improve(const Code& code, u64 q1, u64 q2, const Code& replacement);

/// Left-associated fold of combine. A quasi-perfect factor must be the last
/// operand; when every factor is perfect the result is perfect, and with
/// exactly one quasi-perfect factor placed last it is quasi-perfect.
Code compose_many(std::span<const Code> codes);

/// Codes of length (2*omega-1)*q1 for gcd((omega-1)!, q1) = 1:
///   omega-1 < q1 < 2(omega-1): generators {(2*omega-1)*r + 1}, quasi-perfect,
///     q1 codewords;
///   q1 = 2*omega-1: single-codeword product with itself, perfect, 2*omega
///     codewords;
///   2*omega-1 < q1 < 4(omega-1): same product, quasi-perfect, q1+1 codewords.
Code lemma2_construct(u32 omega, u64 q1);

}  // namespace cace
