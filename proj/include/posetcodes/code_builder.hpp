#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "posetcodes/bits.hpp"
#include "posetcodes/distribution.hpp"
#include "posetcodes/poset.hpp"

namespace posetcodes {

// Materialization cap for D and the character-sum oracle.
inline constexpr unsigned kMaterializeMaxN = 28;
// Cap for the literal inner-product oracle (cost ~ 4^n).
inline constexpr unsigned kDirectOracleMaxN = 14;

// D = F_2^n \ I(P) in ascending integer order of the bit pattern, together
// with the excluded ideal members.
struct DefiningSet {
  unsigned n = 0;
  std::vector<BitVector> vectors;
  std::vector<BitVector> excluded;

  std::size_t size() const { return vectors.size(); }
};

DefiningSet build_defining_set(const TwoChainPoset& p, const IdealSpec& ideal);

// c_u = (u.g_1, ..., u.g_|D|).
BitString codeword(BitVector u, const DefiningSet& d);

// Dense F_2 matrix stored as row bit strings.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols);
  explicit F2Matrix(std::vector<BitString> rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }
  const BitString& row(std::size_t r) const { return rows_[r]; }

  // u times the matrix over F_2, u indexing rows by bit position.
  BitString left_multiply(BitVector u) const;

  bool operator==(const F2Matrix&) const = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitString> rows_;
};

// n x |D| matrix; row r, column k is coordinate r+1 of g_k.
F2Matrix generator_matrix(const DefiningSet& d);

// Rank by Gaussian elimination over F_2.
std::size_t f2_rank(const F2Matrix& m);

// Rank of span(D) computed by streaming D into an XOR basis, without
// materializing D. Equal to f2_rank(generator_matrix(D)).
unsigned defining_set_rank(const TwoChainPoset& p, const IdealSpec& ideal);

}  // namespace posetcodes
