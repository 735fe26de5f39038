#include "posetcodes/poset.hpp"

#include <bit>
#include <string>

#include "posetcodes/errors.hpp"

namespace posetcodes {

namespace {

std::uint64_t low_mask(unsigned count) { return count >= 64 ? ~0ULL : (1ULL << count) - 1; }

// Bit k-1 of the result is the parity of bits 0..k-1 of x.
std::uint64_t prefix_parity(std::uint64_t x) {
  x ^= x << 1;
  x ^= x << 2;
  x ^= x << 4;
  x ^= x << 8;
  x ^= x << 16;
  x ^= x << 32;
  return x;
}

// sum_{k=1}^{h} (-1)^{u_1 + ... + u_k} for the chain whose lowest element
// sits at bit 0 of `chain_bits`.
std::int64_t signed_prefix_sum(std::uint64_t chain_bits, unsigned h) {
  const auto odd = std::popcount(prefix_parity(chain_bits) & low_mask(h));
  return static_cast<std::int64_t>(h) - 2 * static_cast<std::int64_t>(odd);
}

}  // namespace

TwoChainPoset::TwoChainPoset(unsigned m, unsigned n) : m_(m), n_(n) {
  if (n > kMaxN)
    throw ParameterError("n must be at most " + std::to_string(kMaxN) + ", got " + std::to_string(n));
  if (m < 1) throw ParameterError("m must be at least 1");
  if (m >= n)
    throw ParameterError("m must be less than n, got m=" + std::to_string(m) + " n=" + std::to_string(n));
}

TwoChainPoset build_poset(unsigned m, unsigned n) { return TwoChainPoset(m, n); }

bool TwoChainPoset::leq(unsigned a, unsigned b) const {
  if (a < 1 || a > n_ || b < 1 || b > n_)
    throw ParameterError("poset element out of range [1, " + std::to_string(n_) + "]");
  const bool same_chain = (a <= m_) == (b <= m_);
  return same_chain && a <= b;
}

bool TwoChainPoset::is_down_set(BitVector s) const {
  if (!s.subset_of(BitVector::interval(1, n_))) return false;
  // In a chain, closure means the support is a prefix of that chain.
  const std::uint64_t one = s.bits() & low_mask(m_);
  const std::uint64_t two = s.bits() >> m_;
  return (one & (one + 1)) == 0 && (two & (two + 1)) == 0;
}

IdealSpec IdealSpec::from_tops(unsigned i_or_zero, unsigned j_or_zero) {
  if (i_or_zero == 0 && j_or_zero == 0) return empty();
  if (j_or_zero == 0) return chain_one(i_or_zero);
  if (i_or_zero == 0) return chain_two(j_or_zero);
  return both(i_or_zero, j_or_zero);
}

IdealSpec::IdealSpec(const Variant& v) : kind_(static_cast<IdealKind>(v.index())) {
  if (const auto* a = std::get_if<ChainOneIdeal>(&v)) i_ = a->i;
  if (const auto* b = std::get_if<ChainTwoIdeal>(&v)) j_ = b->j;
  if (const auto* c = std::get_if<BothChainsIdeal>(&v)) {
    i_ = c->i;
    j_ = c->j;
  }
}

IdealSpec::Variant IdealSpec::variant() const {
  switch (kind_) {
    case IdealKind::Empty:
      return EmptyIdeal{};
    case IdealKind::ChainOne:
      return ChainOneIdeal{i_};
    case IdealKind::ChainTwo:
      return ChainTwoIdeal{j_};
    case IdealKind::BothChains:
      return BothChainsIdeal{i_, j_};
  }
  return EmptyIdeal{};
}

bool IdealSpec::is_valid_for(const TwoChainPoset& p) const {
  const unsigned i = chain_one_height();
  const unsigned j = chain_two_top();
  switch (kind()) {
    case IdealKind::Empty:
      return true;
    case IdealKind::ChainOne:
      return i >= 1 && i <= p.m();
    case IdealKind::ChainTwo:
      return j >= p.m() + 1 && j <= p.n();
    case IdealKind::BothChains:
      return i >= 1 && i <= p.m() && j >= p.m() + 1 && j <= p.n();
  }
  return false;
}

void IdealSpec::validate(const TwoChainPoset& p) const {
  if (is_valid_for(p)) return;
  const std::string m = std::to_string(p.m());
  const std::string n = std::to_string(p.n());
  const unsigned i = chain_one_height();
  const unsigned j = chain_two_top();
  if ((kind() == IdealKind::ChainOne || kind() == IdealKind::BothChains) && (i < 1 || i > p.m()))
    throw ParameterError("ideal requires 1 <= i <= m (m=" + m + "), got i=" + std::to_string(i));
  throw ParameterError("ideal requires m+1 <= j <= n (m=" + m + ", n=" + n + "), got j=" +
                       std::to_string(j));
}

BitVector IdealSpec::as_set(const TwoChainPoset& p) const {
  validate(p);
  const unsigned i = chain_one_height();
  const unsigned j = chain_two_top();
  BitVector s = BitVector::interval(1, i);
  if (j != 0) s = s | BitVector::interval(p.m() + 1, j);
  return s;
}

std::string IdealSpec::to_string() const {
  const std::string i = std::to_string(chain_one_height());
  const std::string j = std::to_string(chain_two_top());
  switch (kind()) {
    case IdealKind::Empty:
      return "empty";
    case IdealKind::ChainOne:
      return "[" + i + "]";
    case IdealKind::ChainTwo:
      return "[" + j + "]\\[m]";
    case IdealKind::BothChains:
      return "[" + i + "] u ([" + j + "]\\[m])";
  }
  return {};
}

std::vector<IdealSpec> all_ideals(const TwoChainPoset& p) {
  std::vector<IdealSpec> out;
  out.reserve((p.m() + 1) * (p.second_chain_size() + 1));
  out.push_back(IdealSpec::empty());
  for (unsigned j = p.m() + 1; j <= p.n(); ++j) out.push_back(IdealSpec::chain_two(j));
  for (unsigned i = 1; i <= p.m(); ++i) {
    out.push_back(IdealSpec::chain_one(i));
    for (unsigned j = p.m() + 1; j <= p.n(); ++j) out.push_back(IdealSpec::both(i, j));
  }
  return out;
}

std::vector<BitVector> ideal_members(const TwoChainPoset& p, const IdealSpec& ideal) {
  ideal.validate(p);
  const unsigned i = ideal.chain_one_height();
  const unsigned a = ideal.chain_two_height(p);
  std::vector<BitVector> out;
  out.reserve((i + 1) * (a + 1));
  for (unsigned k = 0; k <= i; ++k)
    for (unsigned l = 0; l <= a; ++l)
      out.push_back(BitVector::interval(1, k) | BitVector::interval(p.m() + 1, p.m() + l));
  return out;
}

std::uint64_t ideal_member_count(const TwoChainPoset& p, const IdealSpec& ideal) {
  ideal.validate(p);
  return std::uint64_t{ideal.chain_one_height() + 1} * (ideal.chain_two_height(p) + 1);
}

std::int64_t generating_value(const TwoChainPoset& p, const IdealSpec& ideal,
                              std::span<const int> signs) {
  ideal.validate(p);
  if (signs.size() != p.n())
    throw ParameterError("sign vector has " + std::to_string(signs.size()) + " entries, expected " +
                         std::to_string(p.n()));
  // chain_sum(first, h) = sum_{k=1}^{h} x_first * ... * x_{first+k-1}
  auto chain_sum = [&](unsigned first, unsigned h) {
    std::int64_t sum = 0;
    std::int64_t prod = 1;
    for (unsigned k = 0; k < h; ++k) {
      prod *= signs[first - 1 + k];
      sum += prod;
    }
    return sum;
  };
  const std::int64_t a = chain_sum(1, ideal.chain_one_height());
  const std::int64_t b = chain_sum(p.m() + 1, ideal.chain_two_height(p));
  switch (ideal.kind()) {
    case IdealKind::Empty:
      return 1;
    case IdealKind::ChainOne:
      return 1 + a;
    case IdealKind::ChainTwo:
      return 1 + b;
    case IdealKind::BothChains:
      // 1 + sum_k + sum_l + sum_k sum_l, the double sum factoring as a * b.
      return 1 + a + b + a * b;
  }
  return 0;
}

std::int64_t generating_value_at(const TwoChainPoset& p, const IdealSpec& ideal, BitVector u) {
  const std::int64_t a = signed_prefix_sum(u.bits(), ideal.chain_one_height());
  const std::int64_t b = signed_prefix_sum(u.bits() >> p.m(), ideal.chain_two_height(p));
  return (1 + a) * (1 + b);
}

}  // namespace posetcodes
