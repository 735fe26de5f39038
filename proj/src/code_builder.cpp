#include "posetcodes/code_builder.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "posetcodes/errors.hpp"

namespace posetcodes {

DefiningSet build_defining_set(const TwoChainPoset& p, const IdealSpec& ideal) {
  if (p.n() > kMaterializeMaxN)
    throw CapacityError("defining set materialization is capped at n <= " +
                        std::to_string(kMaterializeMaxN) + ", got n=" + std::to_string(p.n()));
  DefiningSet d;
  d.n = p.n();
  d.excluded = ideal_members(p, ideal);
  std::sort(d.excluded.begin(), d.excluded.end());

  const std::uint64_t total = 1ULL << p.n();
  d.vectors.reserve(total - d.excluded.size());
  auto skip = d.excluded.begin();
  for (std::uint64_t x = 0; x < total; ++x) {
    if (skip != d.excluded.end() && skip->bits() == x) {
      ++skip;
      continue;
    }
    d.vectors.emplace_back(x);
  }
  return d;
}

BitString codeword(BitVector u, const DefiningSet& d) {
  if (!u.subset_of(BitVector::interval(1, d.n)))
    throw ParameterError("message has bits beyond n=" + std::to_string(d.n));
  BitString c(d.size());
  for (std::size_t k = 0; k < d.size(); ++k) c.set(k, u.dot(d.vectors[k]) != 0);
  return c;
}

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitString(cols)) {}

F2Matrix::F2Matrix(std::vector<BitString> rows)
    : cols_(rows.empty() ? 0 : rows.front().size()), rows_(std::move(rows)) {
  for (const auto& r : rows_)
    if (r.size() != cols_) throw ParameterError("matrix rows have unequal length");
}

BitString F2Matrix::left_multiply(BitVector u) const {
  BitString out(cols_);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (r < 64 && ((u.bits() >> r) & 1U)) out ^= rows_[r];
  return out;
}

F2Matrix generator_matrix(const DefiningSet& d) {
  F2Matrix g(d.n, d.size());
  for (std::size_t k = 0; k < d.size(); ++k) {
    const std::uint64_t col = d.vectors[k].bits();
    for (unsigned r = 0; r < d.n; ++r)
      if ((col >> r) & 1U) g.set(r, k, true);
  }
  return g;
}

std::size_t f2_rank(const F2Matrix& m) {
  std::vector<BitString> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));

  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r].get(col)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

unsigned defining_set_rank(const TwoChainPoset& p, const IdealSpec& ideal) {
  if (p.n() > kMaterializeMaxN)
    throw CapacityError("defining set rank is capped at n <= " + std::to_string(kMaterializeMaxN));
  const auto members = ideal_members(p, ideal);
  // basis[b] has leading bit b, or is zero.
  std::array<std::uint64_t, 64> basis{};
  unsigned rank = 0;
  const std::uint64_t total = 1ULL << p.n();
  for (std::uint64_t x = 1; x < total && rank < p.n(); ++x) {
    if (std::find(members.begin(), members.end(), BitVector{x}) != members.end()) continue;
    std::uint64_t v = x;
    for (int b = 63; b >= 0 && v; --b) {
      if (!((v >> b) & 1U)) continue;
      if (basis[b] == 0) {
        basis[b] = v;
        ++rank;
        v = 0;
      } else {
        v ^= basis[b];
      }
    }
  }
  return rank;
}

}  // namespace posetcodes
