#include "posetcodes/bits.hpp"

#include <bit>

namespace posetcodes {

BitVector BitVector::from_support(std::initializer_list<unsigned> elements) {
  std::uint64_t bits = 0;
  for (unsigned e : elements) bits |= 1ULL << (e - 1);
  return BitVector{bits};
}

std::string BitVector::to_string(unsigned n) const {
  std::string s(n, '0');
  for (unsigned k = 1; k <= n; ++k)
    if (contains(k)) s[k - 1] = '1';
  return s;
}

std::size_t BitString::weight() const {
  std::size_t w = 0;
  for (std::uint64_t word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

bool BitString::any() const {
  for (std::uint64_t word : words_)
    if (word) return true;
  return false;
}

std::size_t BitString::find_next(std::size_t from) const {
  if (from >= size_) return size_;
  std::size_t w = from / 64;
  std::uint64_t word = words_[w] & (~0ULL << (from % 64));
  while (true) {
    if (word) {
      const std::size_t k = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
      return k < size_ ? k : size_;
    }
    if (++w == words_.size()) return size_;
    word = words_[w];
  }
}

BitString& BitString::operator^=(const BitString& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

std::string BitString::to_string() const {
  std::string s(size_, '0');
  for (std::size_t k = 0; k < size_; ++k)
    if (get(k)) s[k] = '1';
  return s;
}

}  // namespace posetcodes
