#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "cace/code.hpp"

namespace cace {

/// One canonical generator per distinct expanded omega-subset among the
/// reflection representatives x <= n/2 (x and n-x carry the same delta set, so
/// quotienting by the reflection loses no maximum code). Ascending and
/// deterministic.
std::vector<u64> enumerate_generators(u64 n, u32 omega);

/// Vertices are the canonical valid codewords of Z_n, edges join pairs whose
/// delta sets intersect. Maximum independent sets are maximum codes.
class ConflictGraph {
 public:
  static ConflictGraph build(u64 n, u32 omega);

  u64 modulus() const noexcept { return modulus_; }
  u32 weight() const noexcept { return weight_; }
  const std::vector<u64>& generators() const noexcept { return generators_; }
  std::size_t order() const noexcept { return generators_.size(); }
  bool adjacent(std::size_t i, std::size_t j) const;

 private:
  u64 modulus_ = 0;
  u32 weight_ = 0;
  std::vector<u64> generators_;
  std::size_t words_ = 0;
  std::vector<u64> adjacency_;  // row-major bitset

  friend struct CliqueSolver;
};

struct SearchResult {
  u64 size = 0;
  Code witness;  // lexicographically smallest maximum code

  SearchResult(u64 s, Code w) : size(s), witness(std::move(w)) {}
};

/// Exact maximum code size over CAC^e(n, omega) by branch and bound on the
/// conflict graph (greedy-coloring bound), plus the lexicographically smallest
/// witness of that size. Throws BudgetExceeded with the best lower bound found
/// when the time budget runs out.
SearchResult max_code_bruteforce(u64 n, u32 omega,
                                 std::chrono::milliseconds budget =
                                     std::chrono::milliseconds(10000));

/// One emitted scan row; `parameter` is mu for the prime-length perfect scan
/// and k for the length-2p quasi-perfect scan. The named condition holds for
/// every emitted record and `code_size` matches the closed-form size.
struct ScanRecord {
  u64 p = 0;
  u64 g = 0;
  u64 parameter = 0;
  u64 code_size = 0;

  friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

/// For each prime p <= p_limit: compute mu, skip unless p = 1 (mod
/// 2*mu*lambda), then emit the first primitive root (ascending) satisfying the
/// index-coverage condition, if any. Ordered by p.
std::vector<ScanRecord> scan_theorem3(u32 omega, u64 p_limit);

/// Emits (p, smallest primitive root, k) for each prime p = 1 (mod 4k) up to
/// p_limit whose parity-coverage condition holds (checking one root suffices;
/// the verdict is root-invariant).
std::vector<ScanRecord> scan_theorem4(u64 k, u64 p_limit);

}  // namespace cace
