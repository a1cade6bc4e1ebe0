#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "awcd/types.hpp"

namespace awcd {

// Symmetric binary n x n matrix with unit diagonal, bit-packed per row.
// W_ij = 1 asserts that i and j share a community.
class WeightMatrix {
 public:
  WeightMatrix() = default;

  // Identity: unit diagonal, zeros elsewhere.
  explicit WeightMatrix(std::size_t n);

  static WeightMatrix all_ones(std::size_t n);

  std::size_t dim() const { return n_; }

  bool get(Vertex i, Vertex j) const {
    return (bits_[i * words_ + (j >> 6)] >> (j & 63)) & 1u;
  }

  // Sets W_ij and W_ji. The diagonal is fixed at 1; i must differ from j.
  void set_pair(Vertex i, Vertex j, bool value);

  // Row members {j : W_ij = 1}, optionally with i itself removed.
  VertexSet row_members(Vertex i, bool include_self) const;

  // Number of cells (ordered, including diagonal) where the two matrices
  // differ. Symmetric mismatches are counted twice.
  std::size_t count_disagreements(const WeightMatrix& other) const;

  friend bool operator==(const WeightMatrix& a, const WeightMatrix& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;  // 64-bit words per row
  std::vector<std::uint64_t> bits_;
};

// Symmetric n x n matrix of extended nonnegative reals with zero
// diagonal; entries may be +infinity.
class TestMatrix {
 public:
  TestMatrix() = default;
  explicit TestMatrix(std::size_t n) : n_(n), v_(n * n, 0.0) {}

  std::size_t dim() const { return n_; }

  double get(Vertex i, Vertex j) const { return v_[std::size_t{i} * n_ + j]; }

  // Sets T_ij and T_ji; i must differ from j (the diagonal stays 0).
  void set_pair(Vertex i, Vertex j, double value) {
    assert(i != j);
    v_[std::size_t{i} * n_ + j] = value;
    v_[std::size_t{j} * n_ + i] = value;
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> v_;
};

}  // namespace awcd
