#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace posetcodes {

// Largest ground-set size: every subset of [n] and every count up to 2^n
// fits a 64-bit word.
inline constexpr unsigned kMaxN = 62;

// An element of F_2^n, identified with its support in [n].
// Poset element k (1-based) is stored at bit position k-1.
class BitVector {
 public:
  constexpr BitVector() = default;
  constexpr explicit BitVector(std::uint64_t bits) : bits_(bits) {}

  static BitVector from_support(std::initializer_list<unsigned> elements);
  // Bits for elements first..last inclusive; empty when first > last.
  static constexpr BitVector interval(unsigned first, unsigned last) {
    if (first > last) return BitVector{};
    const std::uint64_t upto = last >= 64 ? ~0ULL : (1ULL << last) - 1;
    const std::uint64_t below = (1ULL << (first - 1)) - 1;
    return BitVector{upto & ~below};
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(unsigned element) const { return (bits_ >> (element - 1)) & 1U; }
  constexpr unsigned weight() const { return static_cast<unsigned>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(BitVector other) const { return (bits_ & ~other.bits_) == 0; }

  // F_2 inner product.
  constexpr unsigned dot(BitVector other) const {
    return static_cast<unsigned>(std::popcount(bits_ & other.bits_)) & 1U;
  }

  constexpr BitVector operator^(BitVector o) const { return BitVector{bits_ ^ o.bits_}; }
  constexpr BitVector operator|(BitVector o) const { return BitVector{bits_ | o.bits_}; }
  constexpr auto operator<=>(const BitVector&) const = default;

  // Coordinates v_1 ... v_n as a string of '0'/'1'.
  std::string to_string(unsigned n) const;

 private:
  std::uint64_t bits_ = 0;
};

// Fixed-length bit string over F_2, used for codewords and matrix rows.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool get(std::size_t k) const { return (words_[k / 64] >> (k % 64)) & 1U; }
  void set(std::size_t k, bool value) {
    const std::uint64_t mask = 1ULL << (k % 64);
    if (value)
      words_[k / 64] |= mask;
    else
      words_[k / 64] &= ~mask;
  }

  std::size_t weight() const;
  bool any() const;
  // Index of the lowest set bit at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from) const;

  BitString& operator^=(const BitString& other);
  friend BitString operator^(BitString a, const BitString& b) { return a ^= b; }
  bool operator==(const BitString&) const = default;

  std::string to_string() const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace posetcodes
