#include "cace/constructions.hpp"

#include <numeric>

namespace cace {

namespace {

void require_valid(const Code& code, const char* role) {
  VerifyReport report = verify(code);
  if (!report.valid) {
    const Conflict& c = *report.conflict;
    throw InvalidCode(std::string(role) + " is not a valid code: generators " +
                      std::to_string(c.generator_a) + " and " +
                      std::to_string(c.generator_b) + " share difference " +
                      std::to_string(c.difference));
  }
}

// The product constructions assume the strict form of membership, ax = by
// (mod n) iff a = b and x = y, which holds exactly when every codeword has
// the full 2(omega-1) differences. A collapsed codeword (say 3 in Z_9 at
// weight 3, delta {3, 6}) satisfies a*x = b*x for a != b, and lifting it
// multiplies that collision into a genuinely invalid product.
void require_full_deltas(const Code& code, const char* role) {
  const u64 full = 2 * static_cast<u64>(code.lambda());
  for (u64 x : code.generators()) {
    if (delta_set({code.modulus(), x}, code.weight()).size() != full)
      throw CollapsedDelta(std::string(role) + " contains generator " +
                           std::to_string(x) + " with fewer than " +
                           std::to_string(full) + " differences mod " +
                           std::to_string(code.modulus()));
  }
}

}  // namespace

Code combine(const Code& left, const Code& right, bool bypass_gcd_guard) {
  if (left.weight() != right.weight())
    throw MismatchedWeight("weights differ: " + std::to_string(left.weight()) +
                           " vs " + std::to_string(right.weight()));
  const u32 omega = left.weight();
  const u64 q1 = left.modulus();
  const u64 q2 = right.modulus();
  if (!bypass_gcd_guard && !coprime_to_factorial(q2, omega))
    throw GcdGuardViolated("combine requires gcd(q2, (omega-1)!) = 1 with q2 = " +
                           std::to_string(q2) + ", omega = " + std::to_string(omega));
  require_valid(left, "left operand");
  require_valid(right, "right operand");
  if (!bypass_gcd_guard) {
    require_full_deltas(left, "left operand");
    require_full_deltas(right, "right operand");
  }

  const u64 n = checked_mul(q1, q2);
  std::vector<u64> generators;
  generators.reserve(left.size() * q2 + right.size());
  for (u64 x1 : left.generators())
    for (u64 r = 0; r < q2; ++r) generators.push_back(x1 + q1 * r);
  for (u64 x2 : right.generators()) generators.push_back(q1 * x2);

  return bypass_gcd_guard ? Code::unchecked(n, omega, std::move(generators))
                          : Code(n, omega, std::move(generators));
}

Code project(const Code& code, u64 q) {
  const u64 n = code.modulus();
  if (q < 2 || n % q != 0)
    throw NotADivisor(std::to_string(q) + " is not a divisor >= 2 of " +
                      std::to_string(n));
  require_valid(code, "projection input");
  const u64 m = n / q;
  std::vector<u64> generators;
  for (u64 x : code.generators())
    if (x % m == 0) generators.push_back(x / m);
  return Code(q, code.weight(), std::move(generators));
}

Code improve(const Code& code, u64 q1, u64 q2, const Code& replacement) {
  if (checked_mul(q1, q2) != code.modulus())
    throw NotADivisor("q1 * q2 = " + std::to_string(q1) + " * " + std::to_string(q2) +
                      " does not equal the code modulus " +
                      std::to_string(code.modulus()));
  if (replacement.weight() != code.weight())
    throw MismatchedWeight("replacement weight " + std::to_string(replacement.weight()) +
                           " differs from " + std::to_string(code.weight()));
  if (replacement.modulus() != q1)
    throw MixedModulus("replacement modulus " + std::to_string(replacement.modulus()) +
                       " is not q1 = " + std::to_string(q1));
  if (!coprime_to_factorial(q2, code.weight()))
    throw GcdGuardViolated("improve requires gcd(q2, (omega-1)!) = 1 with q2 = " +
                           std::to_string(q2));
  require_valid(code, "improvement input");
  require_valid(replacement, "replacement");
  require_full_deltas(code, "improvement input");
  require_full_deltas(replacement, "replacement");

  Code projected = project(code, q1);
  if (replacement.size() <= projected.size())
    throw NoImprovement("replacement size " + std::to_string(replacement.size()) +
                        " does not exceed the projection size " +
                        std::to_string(projected.size()));

  std::vector<u64> generators;
  generators.reserve(code.size() - projected.size() + replacement.size());
  for (u64 x : code.generators())
    if (x % q2 != 0) generators.push_back(x);
  for (u64 x : replacement.generators()) generators.push_back(q2 * x);
  return Code(code.modulus(), code.weight(), std::move(generators));
}

Code compose_many(std::span<const Code> codes) {
  if (codes.empty()) throw RangeViolation("compose_many requires at least one code");
  for (std::size_t i = 0; i + 1 < codes.size(); ++i)
    if (classify(codes[i]).kind == CodeClass::quasi_perfect)
      throw OrderingViolation("quasi-perfect factor at position " + std::to_string(i) +
                              " must be the last operand");
  Code result = codes.front();
  for (std::size_t i = 1; i < codes.size(); ++i) result = combine(result, codes[i]);
  return result;
}

Code lemma2_construct(u32 omega, u64 q1) {
  if (omega < 2) throw RangeViolation("weight must be at least 2");
  if (!coprime_to_factorial(q1, omega))
    throw GcdGuardViolated("lemma2 requires gcd((omega-1)!, q1) = 1 with q1 = " +
                           std::to_string(q1));
  const u64 lambda = omega - 1;
  const u64 base = 2 * static_cast<u64>(omega) - 1;
  const u64 n = checked_mul(base, q1);

  if (lambda < q1 && q1 < 2 * lambda) {
    std::vector<u64> generators;
    generators.reserve(q1);
    for (u64 r = 0; r < q1; ++r) generators.push_back(base * r + 1);
    return Code(n, omega, std::move(generators));
  }
  if (q1 == base || (base < q1 && q1 < 4 * lambda)) {
    Code unit_left(base, omega, {1});
    Code unit_right(q1, omega, {1});
    return combine(unit_left, unit_right);
  }
  throw RangeViolation("q1 = " + std::to_string(q1) +
                       " falls in none of the ranges (omega-1, 2(omega-1)), "
                       "{2*omega-1}, (2*omega-1, 4(omega-1))");
}

}  // namespace cace
