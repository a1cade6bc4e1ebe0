#include "awcd/weight_matrix.hpp"

#include <bit>
#include <stdexcept>

namespace awcd {

WeightMatrix::WeightMatrix(std::size_t n)
    : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {
  for (std::size_t i = 0; i < n_; ++i)
    bits_[i * words_ + (i >> 6)] |= std::uint64_t{1} << (i & 63);
}

WeightMatrix WeightMatrix::all_ones(std::size_t n) {
  WeightMatrix w(n);
  if (n == 0) return w;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t* row = w.bits_.data() + i * w.words_;
    for (std::size_t word = 0; word + 1 < w.words_; ++word) row[word] = ~std::uint64_t{0};
    const unsigned tail = static_cast<unsigned>(n & 63);
    row[w.words_ - 1] = tail ? (~std::uint64_t{0} >> (64 - tail)) : ~std::uint64_t{0};
  }
  return w;
}

void WeightMatrix::set_pair(Vertex i, Vertex j, bool value) {
  if (i == j) throw std::invalid_argument("diagonal entries are fixed at 1");
  const std::uint64_t bi = std::uint64_t{1} << (j & 63);
  const std::uint64_t bj = std::uint64_t{1} << (i & 63);
  if (value) {
    bits_[i * words_ + (j >> 6)] |= bi;
    bits_[j * words_ + (i >> 6)] |= bj;
  } else {
    bits_[i * words_ + (j >> 6)] &= ~bi;
    bits_[j * words_ + (i >> 6)] &= ~bj;
  }
}

VertexSet WeightMatrix::row_members(Vertex i, bool include_self) const {
  VertexSet out;
  const std::uint64_t* row = bits_.data() + std::size_t{i} * words_;
  for (std::size_t word = 0; word < words_; ++word) {
    std::uint64_t bitsleft = row[word];
    while (bitsleft) {
      const unsigned b = static_cast<unsigned>(std::countr_zero(bitsleft));
      bitsleft &= bitsleft - 1;
      const Vertex v = static_cast<Vertex>(word * 64 + b);
      if (include_self || v != i) out.push_back(v);
    }
  }
  return out;
}

std::size_t WeightMatrix::count_disagreements(const WeightMatrix& other) const {
  if (n_ != other.n_) throw std::invalid_argument("dimension mismatch");
  std::size_t count = 0;
  for (std::size_t w = 0; w < bits_.size(); ++w)
    count += static_cast<std::size_t>(std::popcount(bits_[w] ^ other.bits_[w]));
  return count;
}

}  // namespace awcd
