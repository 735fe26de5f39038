#include "posetcodes/oracle.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "posetcodes/errors.hpp"

namespace posetcodes::oracle {

namespace {

inline constexpr unsigned kCharsumMaxN = kMaterializeMaxN;

void require_direct_cap(unsigned n) {
  if (n > kDirectOracleMaxN)
    throw CapacityError("direct oracle is capped at n <= " + std::to_string(kDirectOracleMaxN) +
                        ", got n=" + std::to_string(n));
}

void require_charsum_cap(unsigned n) {
  if (n > kCharsumMaxN)
    throw CapacityError("char-sum oracle is capped at n <= " + std::to_string(kCharsumMaxN) +
                        ", got n=" + std::to_string(n));
}

std::uint64_t literal_weight(std::uint64_t u, const std::vector<BitVector>& columns) {
  const BitVector msg{u};
  std::uint64_t w = 0;
  for (const BitVector& g : columns) w += msg.dot(g);
  return w;
}

// Bucket k of hist holds weight (offset + k) / divisor.
WeightDistribution from_dense(unsigned n, const std::vector<std::uint64_t>& hist, std::int64_t offset,
                              std::int64_t divisor) {
  WeightDistribution out(n);
  for (std::size_t k = 0; k < hist.size(); ++k) {
    if (!hist[k]) continue;
    const std::int64_t weight = (offset + static_cast<std::int64_t>(k)) / divisor;
    out.add(static_cast<std::uint64_t>(weight), hist[k]);
  }
  return out;
}

}  // namespace

WeightDistribution direct_distribution_serial(const DefiningSet& d) {
  require_direct_cap(d.n);
  WeightDistribution out(d.n);
  const std::uint64_t messages = 1ULL << d.n;
  for (std::uint64_t u = 0; u < messages; ++u) out.add(literal_weight(u, d.vectors), 1);
  return out;
}

WeightDistribution direct_distribution(const DefiningSet& d) {
  require_direct_cap(d.n);
  const auto messages = static_cast<std::int64_t>(1ULL << d.n);
  std::vector<std::uint64_t> hist(d.size() + 1, 0);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(d.size() + 1, 0);
#pragma omp for schedule(static)
    for (std::int64_t u = 0; u < messages; ++u)
      ++local[literal_weight(static_cast<std::uint64_t>(u), d.vectors)];
#pragma omp critical
    for (std::size_t w = 0; w < hist.size(); ++w) hist[w] += local[w];
  }
  return from_dense(d.n, hist, 0, 1);
}

WeightDistribution charsum_distribution_serial(const TwoChainPoset& p, const IdealSpec& ideal) {
  require_charsum_cap(p.n());
  ideal.validate(p);
  const std::uint64_t messages = 1ULL << p.n();
  const auto length = static_cast<std::int64_t>(messages - ideal_member_count(p, ideal));
  WeightDistribution out(p.n());
  out.add(0, 1);
  for (std::uint64_t u = 1; u < messages; ++u) {
    const std::int64_t h = generating_value_at(p, ideal, BitVector{u});
    out.add(static_cast<std::uint64_t>((length + h) / 2), 1);
  }
  return out;
}

WeightDistribution charsum_distribution(const TwoChainPoset& p, const IdealSpec& ideal) {
  require_charsum_cap(p.n());
  ideal.validate(p);
  const auto messages = static_cast<std::int64_t>(1ULL << p.n());
  const auto members = static_cast<std::int64_t>(ideal_member_count(p, ideal));
  const std::int64_t length = messages - members;
  // H ranges over [-members, members]; index H + members.
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(2 * members + 1), 0);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(hist.size(), 0);
#pragma omp for schedule(static)
    for (std::int64_t u = 1; u < messages; ++u) {
      const std::int64_t h = generating_value_at(p, ideal, BitVector{static_cast<std::uint64_t>(u)});
      ++local[static_cast<std::size_t>(h + members)];
    }
#pragma omp critical
    for (std::size_t k = 0; k < hist.size(); ++k) hist[k] += local[k];
  }
  // weight = (length + H) / 2 with H = k - members.
  WeightDistribution out = from_dense(p.n(), hist, length - members, 2);
  out.add(0, 1);
  return out;
}

}  // namespace posetcodes::oracle
