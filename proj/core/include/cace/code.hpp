#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cace/errors.hpp"
#include "cace/numtheory.hpp"

namespace cace {

/// An equi-difference codeword: the set {0, x, 2x, ..., (omega-1)x} mod n,
/// identified by its modulus and generator. The weight omega is carried by the
/// ambient Code, not the codeword.
struct EquiDiffCodeword {
  u64 modulus = 0;
  u64 generator = 0;

  friend auto operator<=>(const EquiDiffCodeword&, const EquiDiffCodeword&) = default;
};

/// The omega elements {a*x mod n : a in [0, omega-1]}, sorted. Throws
/// DegenerateCodeword when they are not pairwise distinct.
std::vector<u64> expand(const EquiDiffCodeword& word, u32 omega);

/// The difference set {a*x mod n : a in [-(omega-1), omega-1], a != 0} as a
/// sorted set. Never contains 0; at most 2(omega-1) elements, fewer when the
/// set collapses (e.g. n = 12, x = 3, omega = 3 gives {3, 6, 9}).
std::vector<u64> delta_set(const EquiDiffCodeword& word, u32 omega);

/// A finite collection of equi-difference codewords over one modulus, stored
/// as sorted generators. Construction enforces the class invariants: every
/// generator in [1, n-1], every codeword non-degenerate for the weight, and no
/// two codewords expanding to the same omega-subset. Immutable thereafter.
class Code {
 public:
  /// Fully validated construction.
  Code(u64 modulus, u32 weight, std::vector<u64> generators);

  /// Assembles a code from codewords, rejecting mixed moduli.
  static Code from_codewords(u32 weight, std::span<const EquiDiffCodeword> words);

  /// Skips the degeneracy and duplicate-subset checks. For guard-bypassed
  /// construction paths whose output goes straight to verify().
  static Code unchecked(u64 modulus, u32 weight, std::vector<u64> generators);

  u64 modulus() const noexcept { return modulus_; }
  u32 weight() const noexcept { return weight_; }
  u32 lambda() const noexcept { return weight_ - 1; }
  const std::vector<u64>& generators() const noexcept { return generators_; }
  u64 size() const noexcept { return generators_.size(); }
  bool empty() const noexcept { return generators_.empty(); }
  std::vector<EquiDiffCodeword> codewords() const;

  friend bool operator==(const Code&, const Code&) = default;

 private:
  struct Unchecked {};
  Code(Unchecked, u64 modulus, u32 weight, std::vector<u64> generators);

  u64 modulus_;
  u32 weight_;
  std::vector<u64> generators_;
};

/// floor(n / (2(omega-1))), the size bound reported for CAC^e(n, omega).
u64 size_bound(u64 n, u32 omega);

struct Conflict {
  u64 generator_a = 0;  // earlier codeword (by stored order)
  u64 generator_b = 0;
  u64 difference = 0;   // shared element of both delta sets

  friend bool operator==(const Conflict&, const Conflict&) = default;
};

struct VerifyReport {
  bool valid = false;
  std::optional<Conflict> conflict;  // first collision in scan order
  u64 coverage_count = 0;            // |union of delta sets| over Z_n \ {0}
  bool perfect_coverage = false;     // valid and coverage_count == n-1

  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

/// Checks pairwise disjointness of the codewords' delta sets with a single
/// presence map over Z_n (within-codeword collapse is permitted), and fills
/// the coverage statistics. Degenerate codewords surface as errors.
VerifyReport verify(const Code& code);

enum class CodeClass { perfect, quasi_perfect, meets_bound, below_bound, invalid };

std::string to_string(CodeClass c);

struct Classification {
  CodeClass kind = CodeClass::invalid;
  u64 bound = 0;  // size_bound(n, omega)
  u64 size = 0;

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// perfect iff 2(omega-1)|C| + 1 = n; quasi-perfect iff |C| equals the bound
/// and n != 1 (mod 2(omega-1)); meets_bound is retained for totality but
/// unreachable; below_bound otherwise. Throws InvalidCode when verification
/// fails.
Classification classify(const Code& code);

/// Replaces every generator x by min(x, n-x). Validity, size and every delta
/// set are preserved.
Code normalize(const Code& code);

}  // namespace cace
