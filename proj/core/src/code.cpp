#include "cace/code.hpp"

#include <algorithm>

namespace cace {

namespace {

// Dense verification keeps an owner entry per residue; cap the modulus so a
// hostile input cannot demand tens of gigabytes.
constexpr u64 kMaxDenseModulus = u64{1} << 26;

void check_shape(u64 modulus, u32 weight) {
  if (modulus < 2) throw RangeViolation("modulus must be at least 2");
  if (weight < 2) throw RangeViolation("weight must be at least 2");
}

}  // namespace

std::vector<u64> expand(const EquiDiffCodeword& word, u32 omega) {
  check_shape(word.modulus, omega);
  if (word.generator == 0 || word.generator >= word.modulus)
    throw GeneratorOutOfRange("generator " + std::to_string(word.generator) +
                              " outside [1, " + std::to_string(word.modulus - 1) + "]");
  std::vector<u64> elements;
  elements.reserve(omega);
  u64 acc = 0;
  for (u32 a = 0; a < omega; ++a) {
    elements.push_back(acc);
    acc += word.generator;
    if (acc >= word.modulus) acc -= word.modulus;
  }
  std::ranges::sort(elements);
  if (std::ranges::adjacent_find(elements) != elements.end())
    throw DegenerateCodeword("generator " + std::to_string(word.generator) +
                             " yields fewer than " + std::to_string(omega) +
                             " distinct elements mod " + std::to_string(word.modulus));
  return elements;
}

std::vector<u64> delta_set(const EquiDiffCodeword& word, u32 omega) {
  check_shape(word.modulus, omega);
  const u64 n = word.modulus;
  std::vector<u64> deltas;
  deltas.reserve(2 * (omega - 1));
  u64 acc = 0;
  for (u32 a = 1; a < omega; ++a) {
    acc += word.generator;
    if (acc >= n) acc -= n;
    if (acc == 0)
      throw DegenerateCodeword("generator " + std::to_string(word.generator) +
                               " is degenerate for weight " + std::to_string(omega) +
                               " mod " + std::to_string(n));
    deltas.push_back(acc);
    deltas.push_back(n - acc);
  }
  std::ranges::sort(deltas);
  auto dup = std::ranges::unique(deltas);
  deltas.erase(dup.begin(), dup.end());
  return deltas;
}

Code::Code(Unchecked, u64 modulus, u32 weight, std::vector<u64> generators)
    : modulus_(modulus), weight_(weight), generators_(std::move(generators)) {
  check_shape(modulus_, weight_);
  std::ranges::sort(generators_);
  for (u64 x : generators_)
    if (x == 0 || x >= modulus_)
      throw GeneratorOutOfRange("generator " + std::to_string(x) + " outside [1, " +
                                std::to_string(modulus_ - 1) + "]");
  if (std::ranges::adjacent_find(generators_) != generators_.end())
    throw DuplicateCodeword("repeated generator");
}

Code::Code(u64 modulus, u32 weight, std::vector<u64> generators)
    : Code(Unchecked{}, modulus, weight, std::move(generators)) {
  std::vector<std::vector<u64>> subsets;
  subsets.reserve(generators_.size());
  for (u64 x : generators_) subsets.push_back(expand({modulus_, x}, weight_));
  std::ranges::sort(subsets);
  if (std::ranges::adjacent_find(subsets) != subsets.end())
    throw DuplicateCodeword("two generators expand to the same subset");
}

Code Code::from_codewords(u32 weight, std::span<const EquiDiffCodeword> words) {
  if (words.empty())
    throw RangeViolation("cannot infer a modulus from zero codewords");
  std::vector<u64> generators;
  generators.reserve(words.size());
  for (const auto& w : words) {
    if (w.modulus != words.front().modulus)
      throw MixedModulus("codeword moduli disagree: " + std::to_string(w.modulus) +
                         " vs " + std::to_string(words.front().modulus));
    generators.push_back(w.generator);
  }
  return Code(words.front().modulus, weight, std::move(generators));
}

Code Code::unchecked(u64 modulus, u32 weight, std::vector<u64> generators) {
  return Code(Unchecked{}, modulus, weight, std::move(generators));
}

std::vector<EquiDiffCodeword> Code::codewords() const {
  std::vector<EquiDiffCodeword> words;
  words.reserve(generators_.size());
  for (u64 x : generators_) words.push_back({modulus_, x});
  return words;
}

u64 size_bound(u64 n, u32 omega) {
  check_shape(n, omega);
  return n / (2 * static_cast<u64>(omega - 1));
}

VerifyReport verify(const Code& code) {
  const u64 n = code.modulus();
  if (n > kMaxDenseModulus)
    throw RangeViolation("modulus too large for dense verification");
  const u32 omega = code.weight();
  const auto& gens = code.generators();

  VerifyReport report;
  std::vector<std::int32_t> owner(n, -1);

  for (std::size_t i = 0; i < gens.size(); ++i) {
    const u64 x = gens[i];
    auto mark = [&](u64 d) {
      if (owner[d] < 0) {
        owner[d] = static_cast<std::int32_t>(i);
        ++report.coverage_count;
      } else if (owner[d] != static_cast<std::int32_t>(i) && !report.conflict) {
        report.conflict = Conflict{gens[static_cast<std::size_t>(owner[d])], x, d};
      }
    };
    u64 acc = 0;
    for (u32 a = 1; a < omega; ++a) {
      acc += x;
      if (acc >= n) acc -= n;
      if (acc == 0)
        throw DegenerateCodeword("generator " + std::to_string(x) +
                                 " is degenerate for weight " + std::to_string(omega) +
                                 " mod " + std::to_string(n));
      mark(acc);
      mark(n - acc);
    }
  }
  report.valid = !report.conflict.has_value();
  report.perfect_coverage = report.valid && report.coverage_count == n - 1;
  return report;
}

std::string to_string(CodeClass c) {
  switch (c) {
    case CodeClass::perfect: return "perfect";
    case CodeClass::quasi_perfect: return "quasi-perfect";
    case CodeClass::meets_bound: return "meets-bound";
    case CodeClass::below_bound: return "below-bound";
    case CodeClass::invalid: return "invalid";
  }
  return "invalid";
}

Classification classify(const Code& code) {
  VerifyReport report = verify(code);
  if (!report.valid) {
    const Conflict& c = *report.conflict;
    throw InvalidCode("delta sets of " + std::to_string(c.generator_a) + " and " +
                      std::to_string(c.generator_b) + " share difference " +
                      std::to_string(c.difference));
  }
  const u64 n = code.modulus();
  const u64 two_lambda = 2 * static_cast<u64>(code.lambda());
  Classification result;
  result.bound = size_bound(n, code.weight());
  result.size = code.size();
  const auto exact = static_cast<unsigned __int128>(two_lambda) * result.size + 1;
  if (exact == n)
    result.kind = CodeClass::perfect;
  else if (result.size == result.bound && n % two_lambda != 1)
    result.kind = CodeClass::quasi_perfect;
  else if (result.size == result.bound)
    result.kind = CodeClass::meets_bound;
  else
    result.kind = CodeClass::below_bound;
  return result;
}

Code normalize(const Code& code) {
  VerifyReport report = verify(code);
  if (!report.valid)
    throw InvalidCode("normalize requires a valid code");
  std::vector<u64> gens;
  gens.reserve(code.size());
  for (u64 x : code.generators()) gens.push_back(std::min(x, code.modulus() - x));
  return Code(code.modulus(), code.weight(), std::move(gens));
}

}  // namespace cace
