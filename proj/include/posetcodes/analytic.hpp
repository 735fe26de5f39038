#pragma once

#include <cstdint>
#include <string_view>

#include "posetcodes/distribution.hpp"
#include "posetcodes/poset.hpp"

namespace posetcodes {

// Which closed form governs the code: ideal [i], [j]\[m], their union, or
// the empty ideal (simplex code).
enum class AnalyticCase { ChainOne, ChainTwo, BothChains, Simplex };

std::string_view to_string(AnalyticCase c);

struct AnalyticCodeParams {
  std::uint64_t length = 0;
  unsigned dimension = 0;
  AnalyticCase which = AnalyticCase::Simplex;

  bool operator==(const AnalyticCodeParams&) const = default;
};

// Length 2^n - |I(P)| and dimension n:
//   [i]            2^n - i - 1
//   [j]\[m]        2^n + m - j - 1
//   [i]u([j]\[m])  2^n + m - i - j - 1 - i(j-m)
//   empty          2^n - 1
AnalyticCodeParams analytic_params(const TwoChainPoset& p, const IdealSpec& ideal);

// Closed-form weight distribution, valid for every n <= kMaxN. Equal
// weights from different (s, t) cells are merged.
WeightDistribution analytic_distribution(const TwoChainPoset& p, const IdealSpec& ideal);

// Weight of the (s, t) cell for the two-chain ideal with heights i and
// a = j - m: 2^(n-1) + s + t + 2st - (s+1)a - (t+1)i.
std::int64_t both_chains_cell_weight(unsigned n, unsigned i, unsigned a, unsigned s, unsigned t);

// Exact binomial coefficient for n <= kMaxN.
std::uint64_t binomial(unsigned n, unsigned k);

}  // namespace posetcodes
