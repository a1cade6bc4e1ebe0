#pragma once

#include <span>

#include "awcd/detect.hpp"
#include "awcd/graph.hpp"
#include "awcd/types.hpp"
#include "awcd/weight_matrix.hpp"

namespace awcd {

// Fraction of unordered pairs i < j on which the two weight matrices
// agree. Throws std::invalid_argument on dimension mismatch or n < 2.
double rand_index(const WeightMatrix& w, const WeightMatrix& w_star);

// True iff every entry matches.
bool exact_recovery(const WeightMatrix& w, const WeightMatrix& w_star);

// Connected components of the graph whose edges are the off-diagonal
// 1-entries of w; labels assigned in order of smallest member.
Labeling partition_from_weights(const WeightMatrix& w);

// Newman-Girvan modularity
//   Q = (1/2m) sum_{ij} (A_ij - d_i d_j / 2m) [c_i = c_j]
// over ordered pairs including i = j. Throws std::invalid_argument when
// the graph has no edges (Q undefined) or labels have the wrong length.
double modularity(const Graph& g, const Labeling& labels);

struct TuneResult {
  double lambda = 0.0;
  double modularity_score = 0.0;
};

// Evaluates each lambda on a single shared test matrix, scores the
// component partition of the thresholded weights by modularity on g, and
// returns the argmax; ties break toward smaller lambda. Throws
// std::invalid_argument on an empty grid.
TuneResult tune_lambda(const Graph& g, const Rings& rings, Variant variant,
                       std::span<const double> lambda_grid, unsigned jobs = 0);

// Maximum achievable Rand index over all real thresholds, computed
// exactly by sweeping the sorted finite T values.
double best_rand_over_lambda(const TestMatrix& t, const WeightMatrix& w_star);

}  // namespace awcd
