#include "posetcodes/analytic.hpp"

#include <array>
#include <stdexcept>

#include "posetcodes/errors.hpp"

namespace posetcodes {

namespace {

using Table = std::array<std::array<std::uint64_t, kMaxN + 1>, kMaxN + 1>;

constexpr Table make_pascal() {
  Table t{};
  for (unsigned r = 0; r <= kMaxN; ++r) {
    t[r][0] = 1;
    for (unsigned c = 1; c <= r; ++c) t[r][c] = t[r - 1][c - 1] + (c < r ? t[r - 1][c] : 0);
  }
  return t;
}

constexpr Table kPascal = make_pascal();

std::uint64_t pow2(unsigned e) { return 1ULL << e; }

// Rows 0 <= s < h of weight 2^(n-1) - h + s and frequency 2^(n-h) C(h, s),
// then 2^(n-1) with frequency 2^(n-h) - 1, then the zero codeword.
WeightDistribution single_chain_table(unsigned n, unsigned h) {
  WeightDistribution out(n);
  out.add(0, 1);
  for (unsigned s = 0; s < h; ++s) out.add(pow2(n - 1) - h + s, pow2(n - h) * binomial(h, s));
  out.add(pow2(n - 1), pow2(n - h) - 1);
  return out;
}

}  // namespace

std::string_view to_string(AnalyticCase c) {
  switch (c) {
    case AnalyticCase::ChainOne:
      return "chain-one";
    case AnalyticCase::ChainTwo:
      return "chain-two";
    case AnalyticCase::BothChains:
      return "both-chains";
    case AnalyticCase::Simplex:
      return "simplex";
  }
  return "?";
}

std::uint64_t binomial(unsigned n, unsigned k) {
  if (n > kMaxN) throw ParameterError("binomial argument above " + std::to_string(kMaxN));
  return k > n ? 0 : kPascal[n][k];
}

std::int64_t both_chains_cell_weight(unsigned n, unsigned i, unsigned a, unsigned s, unsigned t) {
  const auto S = static_cast<std::int64_t>(s);
  const auto T = static_cast<std::int64_t>(t);
  return static_cast<std::int64_t>(pow2(n - 1)) + S + T + 2 * S * T -
         (S + 1) * static_cast<std::int64_t>(a) - (T + 1) * static_cast<std::int64_t>(i);
}

AnalyticCodeParams analytic_params(const TwoChainPoset& p, const IdealSpec& ideal) {
  ideal.validate(p);
  const unsigned n = p.n();
  const std::uint64_t m = p.m();
  const std::uint64_t i = ideal.chain_one_height();
  const std::uint64_t j = ideal.chain_two_top();
  AnalyticCodeParams out;
  out.dimension = n;
  switch (ideal.kind()) {
    case IdealKind::Empty:
      out.length = pow2(n) - 1;
      out.which = AnalyticCase::Simplex;
      break;
    case IdealKind::ChainOne:
      out.length = pow2(n) - i - 1;
      out.which = AnalyticCase::ChainOne;
      break;
    case IdealKind::ChainTwo:
      out.length = pow2(n) + m - j - 1;
      out.which = AnalyticCase::ChainTwo;
      break;
    case IdealKind::BothChains:
      out.length = pow2(n) + m - i - j - 1 - i * (j - m);
      out.which = AnalyticCase::BothChains;
      break;
  }
  return out;
}

WeightDistribution analytic_distribution(const TwoChainPoset& p, const IdealSpec& ideal) {
  ideal.validate(p);
  const unsigned n = p.n();
  const unsigned i = ideal.chain_one_height();
  const unsigned a = ideal.chain_two_height(p);
  switch (ideal.kind()) {
    case IdealKind::Empty: {
      WeightDistribution out(n);
      out.add(0, 1);
      out.add(pow2(n - 1), pow2(n) - 1);
      return out;
    }
    case IdealKind::ChainOne:
      return single_chain_table(n, i);
    case IdealKind::ChainTwo:
      return single_chain_table(n, a);
    case IdealKind::BothChains:
      break;
  }

  WeightDistribution out(n);
  out.add(0, 1);
  const std::uint64_t scale = pow2(n - i - a);
  for (unsigned s = 0; s <= i; ++s) {
    for (unsigned t = 0; t <= a; ++t) {
      if (s == i && t == a) continue;
      const std::int64_t w = both_chains_cell_weight(n, i, a, s, t);
      if (w < 0) throw std::logic_error("negative cell weight");
      out.add(static_cast<std::uint64_t>(w), scale * binomial(i, s) * binomial(a, t));
    }
  }
  out.add(pow2(n - 1), scale - 1);
  return out;
}

}  // namespace posetcodes
