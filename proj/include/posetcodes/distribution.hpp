#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace posetcodes {

// Weight distribution {A_w} of a binary linear code with 2^n messages,
// stored sparsely. Frequencies count messages, so a code of dimension
// k < n has A_0 = 2^(n-k).
class WeightDistribution {
 public:
  using Map = std::map<std::uint64_t, std::uint64_t>;

  WeightDistribution() = default;
  explicit WeightDistribution(unsigned n) : n_(n) {}
  WeightDistribution(unsigned n, Map freq);

  unsigned n() const { return n_; }
  const Map& frequencies() const { return freq_; }

  std::uint64_t frequency(std::uint64_t weight) const;
  // Adds count to A_weight; zero counts are not stored.
  void add(std::uint64_t weight, std::uint64_t count);
  // Merge by addition.
  WeightDistribution& operator+=(const WeightDistribution& other);

  // Sum of all frequencies; equals 2^n for a complete distribution.
  std::uint64_t total() const;
  bool is_complete() const { return total() == (1ULL << n_); }
  std::uint64_t max_weight() const { return freq_.empty() ? 0 : freq_.rbegin()->first; }

  bool operator==(const WeightDistribution&) const = default;

  // "{0:1, 28:4, ...}"
  std::string to_string() const;

 private:
  unsigned n_ = 0;
  Map freq_;
};

// Smallest nonzero weight. Throws DegenerateCodeError when only weight 0
// occurs.
std::uint64_t min_distance(const WeightDistribution& w);

// Number of distinct nonzero weights.
unsigned weight_count(const WeightDistribution& w);

// Dimension of the code implied by A_0 = 2^(n-k).
unsigned dimension_from_distribution(const WeightDistribution& w);

// Weight enumerator text in ascending powers, constant term first:
// "1 + 4z^28 + 16z^29 + ...". A unit coefficient on a nonzero power is
// omitted ("z^32").
std::string render_enumerator(const WeightDistribution& w);

}  // namespace posetcodes
