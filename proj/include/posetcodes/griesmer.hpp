#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace posetcodes {

// sum_{r=0}^{k-1} ceil(d / 2^r). Requires k >= 1, d >= 1.
std::uint64_t griesmer_sum(unsigned k, std::uint64_t d);

enum class OptimalityKind {
  Griesmer,
  DistanceOptimalByGriesmer,
  AlmostOptimalByGriesmer,
  Unresolved,
};

std::string_view to_string(OptimalityKind k);
// Short CLI/CSV token: griesmer, distance-optimal, almost-optimal, unresolved.
std::string_view to_token(OptimalityKind k);
std::optional<OptimalityKind> parse_token(std::string_view token);

struct OptimalityClass {
  OptimalityKind kind = OptimalityKind::Unresolved;
  std::string rationale;
};

// Optimality certified by the Griesmer bound alone, first match in order
// Griesmer, DistanceOptimal, AlmostOptimal, Unresolved. Throws
// ParameterError if [length, k, d] violates the bound.
OptimalityClass classify(std::uint64_t length, unsigned k, std::uint64_t d);

// One expected-vs-observed check of an optimality family instance.
struct FamilyCheck {
  std::string label;
  unsigned n = 0;
  unsigned m = 0;
  unsigned i = 0;
  unsigned j = 0;  // 0 when the ideal misses chain two
  std::uint64_t length = 0;
  unsigned dimension = 0;
  std::uint64_t min_distance = 0;
  OptimalityKind expected = OptimalityKind::Unresolved;
  OptimalityKind observed = OptimalityKind::Unresolved;
  bool passed = false;
  std::string detail;
};

struct FamilyReport {
  std::vector<FamilyCheck> checks;
  bool passed() const;
};

// Ideal [i] for i = 1, 2, 3 with m = i: Griesmer, distance-optimal and
// almost-optimal codes [2^n-i-1, n, 2^(n-1)-i]. Sub-cases with no legal m
// (i >= n) are skipped. When cross_check is set the distribution is also
// recomputed by the strongest available exhaustive oracle.
FamilyReport verify_chain_one_optimality(unsigned n, bool cross_check = false);

// Ideal [i] u ([j]\[m]) for (m,i,j) = (2,1,3) Griesmer [2^n-4, n, 2^(n-1)-2];
// (2,2,3) distance-optimal of length 2^n-6; (2,2,4) almost-optimal
// [2^n-9, n, 2^(n-1)-6]. The first needs n >= 3, the others n >= 4.
FamilyReport verify_two_chain_optimality(unsigned n, bool cross_check = false);

}  // namespace posetcodes
