#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "posetcodes/bits.hpp"

namespace posetcodes {

// The disjoint union of two chains on [n]: 1 < 2 < ... < m and
// m+1 < m+2 < ... < n. Elements from different chains are incomparable.
class TwoChainPoset {
 public:
  // Requires 1 <= m < n <= kMaxN.
  TwoChainPoset(unsigned m, unsigned n);

  unsigned m() const { return m_; }
  unsigned n() const { return n_; }
  unsigned second_chain_size() const { return n_ - m_; }

  // a <= b in the poset order. Throws ParameterError for elements outside [n].
  bool leq(unsigned a, unsigned b) const;

  // Every y below some x in the support of s is in s.
  bool is_down_set(BitVector s) const;

  bool operator==(const TwoChainPoset&) const = default;

 private:
  unsigned m_;
  unsigned n_;
};

TwoChainPoset build_poset(unsigned m, unsigned n);

struct EmptyIdeal {
  bool operator==(const EmptyIdeal&) const = default;
};
// [i]
struct ChainOneIdeal {
  unsigned i;
  bool operator==(const ChainOneIdeal&) const = default;
};
// [j] \ [m]
struct ChainTwoIdeal {
  unsigned j;
  bool operator==(const ChainTwoIdeal&) const = default;
};
// [i] u ([j] \ [m])
struct BothChainsIdeal {
  unsigned i;
  unsigned j;
  bool operator==(const BothChainsIdeal&) const = default;
};

enum class IdealKind { Empty, ChainOne, ChainTwo, BothChains };

// A down-set of the two-chain poset. The nonempty down-sets are exactly
// [i], [j]\[m] and [i] u ([j]\[m]); the empty ideal is admitted as an
// extension and yields the simplex code.
class IdealSpec {
 public:
  using Variant = std::variant<EmptyIdeal, ChainOneIdeal, ChainTwoIdeal, BothChainsIdeal>;

  IdealSpec() = default;
  IdealSpec(const Variant& v);  // NOLINT(google-explicit-constructor)

  static IdealSpec empty() { return {EmptyIdeal{}}; }
  static IdealSpec chain_one(unsigned i) { return {ChainOneIdeal{i}}; }
  static IdealSpec chain_two(unsigned j) { return {ChainTwoIdeal{j}}; }
  static IdealSpec both(unsigned i, unsigned j) { return {BothChainsIdeal{i, j}}; }

  // Builds the spec from optional top elements of each chain.
  static IdealSpec from_tops(unsigned i_or_zero, unsigned j_or_zero);

  IdealKind kind() const { return kind_; }
  Variant variant() const;

  // Height of the ideal within chain one (i, or 0) and within chain two
  // (j - m, or 0).
  unsigned chain_one_height() const { return i_; }
  unsigned chain_two_height(const TwoChainPoset& p) const { return j_ == 0 ? 0 : j_ - p.m(); }
  // Top element of chain two (j), or 0 when the ideal misses chain two.
  unsigned chain_two_top() const { return j_; }

  bool is_valid_for(const TwoChainPoset& p) const;
  // Throws ParameterError naming the violated constraint.
  void validate(const TwoChainPoset& p) const;

  // The ideal itself as a subset of [n].
  BitVector as_set(const TwoChainPoset& p) const;

  std::string to_string() const;

  bool operator==(const IdealSpec&) const = default;

 private:
  IdealKind kind_ = IdealKind::Empty;
  unsigned i_ = 0;
  unsigned j_ = 0;
};

// Every IdealSpec legal for p, ordered lexicographically by (i, j) with a
// missing coordinate sorting first: Empty, ChainTwo(j..), ChainOne(i), Both(i, j..).
std::vector<IdealSpec> all_ideals(const TwoChainPoset& p);

// I(P): the down-sets of p contained in the ideal, eagerly materialized.
// Members are [k] u ([m+l]\[m]) for 0 <= k <= i, 0 <= l <= j-m, in
// that nesting order; there are (i+1)(j-m+1) of them.
std::vector<BitVector> ideal_members(const TwoChainPoset& p, const IdealSpec& ideal);

std::uint64_t ideal_member_count(const TwoChainPoset& p, const IdealSpec& ideal);

// Generating polynomial of I(P) evaluated at x = signs (any integers), via
// the closed forms 1 + sum_k x_1..x_k, its chain-two analogue, and for two
// chains the product (1 + A)(1 + B) of the chain sums. signs.size() == n.
std::int64_t generating_value(const TwoChainPoset& p, const IdealSpec& ideal,
                              std::span<const int> signs);

// Same closed form evaluated at x_k = (-1)^{u_k}, using prefix parities of u.
// The ideal is assumed valid for p (hot path of the char-sum oracle).
std::int64_t generating_value_at(const TwoChainPoset& p, const IdealSpec& ideal, BitVector u);

}  // namespace posetcodes
