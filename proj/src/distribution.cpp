#include "posetcodes/distribution.hpp"

#include <bit>
#include <sstream>

#include "posetcodes/errors.hpp"

namespace posetcodes {

WeightDistribution::WeightDistribution(unsigned n, Map freq) : n_(n) {
  for (const auto& [w, f] : freq) add(w, f);
}

std::uint64_t WeightDistribution::frequency(std::uint64_t weight) const {
  const auto it = freq_.find(weight);
  return it == freq_.end() ? 0 : it->second;
}

void WeightDistribution::add(std::uint64_t weight, std::uint64_t count) {
  if (count != 0) freq_[weight] += count;
}

WeightDistribution& WeightDistribution::operator+=(const WeightDistribution& other) {
  for (const auto& [w, f] : other.freq_) add(w, f);
  return *this;
}

std::uint64_t WeightDistribution::total() const {
  std::uint64_t t = 0;
  for (const auto& [w, f] : freq_) t += f;
  return t;
}

std::string WeightDistribution::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [w, f] : freq_) {
    if (!first) os << ", ";
    first = false;
    os << w << ':' << f;
  }
  os << '}';
  return os.str();
}

std::uint64_t min_distance(const WeightDistribution& w) {
  for (const auto& [weight, f] : w.frequencies())
    if (weight > 0 && f > 0) return weight;
  throw DegenerateCodeError("zero code has no minimum distance");
}

unsigned weight_count(const WeightDistribution& w) {
  unsigned count = 0;
  for (const auto& [weight, f] : w.frequencies())
    if (weight > 0 && f > 0) ++count;
  return count;
}

unsigned dimension_from_distribution(const WeightDistribution& w) {
  const std::uint64_t a0 = w.frequency(0);
  if (a0 == 0 || !std::has_single_bit(a0))
    throw ParameterError("A_0 = " + std::to_string(a0) + " is not a power of two");
  const auto log2 = static_cast<unsigned>(std::countr_zero(a0));
  if (log2 > w.n()) throw ParameterError("A_0 exceeds 2^n");
  return w.n() - log2;
}

std::string render_enumerator(const WeightDistribution& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [weight, f] : w.frequencies()) {
    if (!first) os << " + ";
    first = false;
    if (weight == 0) {
      os << f;
      continue;
    }
    if (f != 1) os << f;
    os << 'z';
    if (weight != 1) os << '^' << weight;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace posetcodes
