#include "cace/search.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cace/prime_constructions.hpp"

namespace cace {

std::vector<u64> enumerate_generators(u64 n, u32 omega) {
  if (n < 2 || omega < 2)
    throw RangeViolation("enumeration requires n >= 2 and omega >= 2");
  std::vector<u64> out;
  std::set<std::vector<u64>> seen;
  for (u64 x = 1; 2 * x <= n; ++x) {
    std::vector<u64> subset{0};
    subset.reserve(omega);
    u64 acc = 0;
    bool degenerate = false;
    for (u32 a = 1; a < omega; ++a) {
      acc += x;
      if (acc >= n) acc -= n;
      if (acc == 0) {
        degenerate = true;
        break;
      }
      subset.push_back(acc);
    }
    if (degenerate) continue;
    std::ranges::sort(subset);
    if (seen.insert(std::move(subset)).second) out.push_back(x);
  }
  return out;
}

ConflictGraph ConflictGraph::build(u64 n, u32 omega) {
  ConflictGraph graph;
  graph.modulus_ = n;
  graph.weight_ = omega;
  graph.generators_ = enumerate_generators(n, omega);

  const std::size_t m = graph.generators_.size();
  graph.words_ = (m + 63) / 64;
  graph.adjacency_.assign(m * graph.words_, 0);

  std::vector<std::vector<u64>> deltas;
  deltas.reserve(m);
  for (u64 x : graph.generators_) deltas.push_back(delta_set({n, x}, omega));

  auto intersects = [](const std::vector<u64>& a, const std::vector<u64>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return true;
      if (a[i] < b[j]) ++i; else ++j;
    }
    return false;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (intersects(deltas[i], deltas[j])) {
        graph.adjacency_[i * graph.words_ + j / 64] |= u64{1} << (j % 64);
        graph.adjacency_[j * graph.words_ + i / 64] |= u64{1} << (i % 64);
      }
  return graph;
}

bool ConflictGraph::adjacent(std::size_t i, std::size_t j) const {
  return (adjacency_[i * words_ + j / 64] >> (j % 64)) & 1;
}

// Maximum independent set = maximum clique of the complement (the
// compatibility graph). Classic branch and bound: candidates are greedily
// colored, vertices leave in reverse color order, and a branch dies when
// |clique| + color can no longer beat the incumbent.
struct CliqueSolver {
  using Clock = std::chrono::steady_clock;

  explicit CliqueSolver(const ConflictGraph& graph, Clock::time_point deadline)
      : g(graph), words(graph.words_), deadline(deadline) {
    const std::size_t m = g.order();
    compat.assign(m * words, 0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (i != j && !g.adjacent(i, j))
          compat[i * words + j / 64] |= u64{1} << (j % 64);
  }

  const ConflictGraph& g;
  std::size_t words;
  Clock::time_point deadline;
  std::vector<u64> compat;

  std::vector<std::size_t> best_clique;
  std::vector<std::size_t> current;
  std::size_t target = 0;      // when nonzero, stop as soon as it is reached
  bool target_reached = false;
  u64 nodes = 0;

  void check_budget(bool force = false) {
    if ((force || (++nodes & 255) == 0) && Clock::now() > deadline) {
      std::vector<u64> gens;
      gens.reserve(best_clique.size());
      for (std::size_t v : best_clique) gens.push_back(g.generators()[v]);
      std::ranges::sort(gens);
      throw BudgetExceeded("search time budget exhausted", best_clique.size(),
                           std::move(gens));
    }
  }

  static bool test_bit(const std::vector<u64>& set, std::size_t v) {
    return (set[v / 64] >> (v % 64)) & 1;
  }
  static void clear_bit(std::vector<u64>& set, std::size_t v) {
    set[v / 64] &= ~(u64{1} << (v % 64));
  }

  std::vector<std::size_t> members(const std::vector<u64>& set) const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words; ++w) {
      u64 bits = set[w];
      while (bits) {
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  // Greedy coloring of the candidate set in ascending vertex order; returns
  // vertices with their color (1-based), colors ascending.
  std::vector<std::pair<std::size_t, std::size_t>> color(const std::vector<u64>& cand) const {
    std::vector<std::pair<std::size_t, std::size_t>> ordered;
    std::vector<u64> uncolored = cand;
    std::size_t color_index = 0;
    auto remaining = members(uncolored);
    while (!remaining.empty()) {
      ++color_index;
      std::vector<u64> cls = uncolored;
      for (std::size_t v : members(cls)) {
        if (!test_bit(cls, v)) continue;
        ordered.emplace_back(v, color_index);
        clear_bit(uncolored, v);
        // remove v's compatibility neighbors from this color class
        for (std::size_t w = 0; w < words; ++w) cls[w] &= ~compat[v * words + w];
        clear_bit(cls, v);
      }
      remaining = members(uncolored);
    }
    return ordered;
  }

  void expand(std::vector<u64>& cand) {
    check_budget();
    auto ordered = color(cand);
    for (std::size_t idx = ordered.size(); idx-- > 0;) {
      auto [v, c] = ordered[idx];
      const std::size_t goal = target != 0 ? target : best_clique.size() + 1;
      if (current.size() + c < goal) return;  // bound: cannot reach goal
      current.push_back(v);
      std::vector<u64> next(words);
      bool any = false;
      for (std::size_t w = 0; w < words; ++w) {
        next[w] = cand[w] & compat[v * words + w];
        any |= next[w] != 0;
      }
      if (current.size() > best_clique.size()) best_clique = current;
      if (target != 0 && current.size() >= target) {
        target_reached = true;
        current.pop_back();
        return;
      }
      if (any) expand(next);
      if (target_reached) {
        current.pop_back();
        return;
      }
      current.pop_back();
      clear_bit(cand, v);
    }
  }

  // Exact maximum clique size.
  std::size_t maximum() {
    target = 0;
    best_clique.clear();
    current.clear();
    check_budget(true);
    std::vector<u64> all((g.order() + 63) / 64, 0);
    for (std::size_t v = 0; v < g.order(); ++v) all[v / 64] |= u64{1} << (v % 64);
    if (g.order() > 0) expand(all);
    return best_clique.size();
  }

  // Does `cand` contain a clique of size `need`?
  bool reaches(const std::vector<u64>& cand, std::size_t need) {
    if (need == 0) return true;
    target = need;
    target_reached = false;
    best_clique.clear();
    current.clear();
    std::vector<u64> scratch = cand;
    expand(scratch);
    return target_reached;
  }
};

SearchResult max_code_bruteforce(u64 n, u32 omega, std::chrono::milliseconds budget) {
  ConflictGraph graph = ConflictGraph::build(n, omega);
  const auto deadline = CliqueSolver::Clock::now() + budget;
  CliqueSolver solver(graph, deadline);

  const std::size_t maximum = solver.maximum();

  // Lexicographically smallest witness: commit each vertex (ascending
  // generator order) whose inclusion still extends to the maximum.
  std::vector<u64> chosen;
  std::vector<u64> cand(solver.words, 0);
  for (std::size_t v = 0; v < graph.order(); ++v) cand[v / 64] |= u64{1} << (v % 64);
  std::size_t have = 0;
  for (std::size_t v = 0; v < graph.order() && have < maximum; ++v) {
    if (!CliqueSolver::test_bit(cand, v)) continue;
    std::vector<u64> next(solver.words);
    for (std::size_t w = 0; w < solver.words; ++w)
      next[w] = cand[w] & solver.compat[v * solver.words + w];
    // keep only candidates after v so the clique stays sorted
    for (std::size_t u = 0; u <= v; ++u) CliqueSolver::clear_bit(next, u);
    if (solver.reaches(next, maximum - have - 1)) {
      chosen.push_back(graph.generators()[v]);
      ++have;
      cand = next;
    } else {
      CliqueSolver::clear_bit(cand, v);
    }
  }

  return SearchResult(maximum, Code(n, omega, std::move(chosen)));
}

std::vector<ScanRecord> scan_theorem3(u32 omega, u64 p_limit) {
  if (omega < 3) throw RangeViolation("scan requires omega >= 3");
  const u64 lambda = omega - 1;
  std::vector<ScanRecord> out;
  for (u64 p = 3; p <= p_limit; p += 2) {
    if (p <= lambda || !is_prime(p)) continue;
    const u64 g0 = smallest_primitive_root(p);
    MuCertificate cert = compute_mu(p, g0, omega);
    if ((p - 1) % (2 * cert.mu * lambda) != 0) continue;
    if (theorem3_condition(cert)) {
      out.push_back({p, g0, cert.mu, (p - 1) / (2 * lambda)});
      continue;
    }
    for (u64 g : primitive_roots(p)) {
      if (g == g0) continue;
      MuCertificate c = compute_mu(p, g, omega);
      if (theorem3_condition(c)) {
        out.push_back({p, g, c.mu, (p - 1) / (2 * lambda)});
        break;
      }
    }
  }
  return out;
}

std::vector<ScanRecord> scan_theorem4(u64 k, u64 p_limit) {
  if (k == 0) throw RangeViolation("scan requires k >= 1");
  std::vector<ScanRecord> out;
  for (u64 p = 5; p <= p_limit; p += 2) {
    if ((p - 1) % (4 * k) != 0 || !is_prime(p)) continue;
    const u64 g = smallest_primitive_root(p);
    if (theorem4_condition(p, g, k)) out.push_back({p, g, k, (p - 1) / (4 * k)});
  }
  return out;
}

}  // namespace cace
