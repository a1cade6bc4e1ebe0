#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "awcd/detect.hpp"
#include "awcd/sbm.hpp"
#include "awcd/theory.hpp"
#include "awcd/types.hpp"

namespace awcd {

// Linear grid "start:stop:count" (count >= 1; count == 1 yields {start}).
std::vector<double> parse_linear_grid(const std::string& text);

// --- generate ---------------------------------------------------------

struct GenerateOptions {
  SbmSpec spec;
  std::uint64_t seed = 0;
  std::string graph_out;
  std::string labels_out;
};

// Writes the edge-list and labels files; reports the edge count on out.
void run_generate(const GenerateOptions& opt, std::ostream& out);

// --- detect -----------------------------------------------------------

struct DetectOptions {
  std::string graph_path;
  unsigned k = 1;
  double lambda = 0.0;
  Variant variant;
  unsigned iters = 1;
  std::string weights_out;                 // "i j" per off-diagonal 1-entry, i < j
  std::string labels_out;                  // component labels of the final W
  std::optional<std::string> labels_path;  // ground truth; prints rand/exact when set
  std::optional<std::string> test_matrix_out;  // dense CSV of final-iteration T
  unsigned jobs = 1;
};

void run_detect(const DetectOptions& opt, std::ostream& out);

// --- sweep ------------------------------------------------------------

struct SweepOptions {
  std::uint32_t block_size = 0;
  std::uint32_t num_blocks = 2;
  std::vector<double> theta_list;
  std::vector<double> rho_list;
  std::vector<unsigned> k_list;
  std::vector<double> lambda_grid;
  std::uint64_t base_seed = 0;
  unsigned reps = 1;
  Variant variant;
  unsigned jobs = 1;
  bool timings = false;  // off keeps reruns byte-identical
  std::string out_csv;
};

// One CSV row per (theta, rho, k, lambda, seed), parameters ascending,
// replicate seeds derived from the base seed via stream_seed.
void run_sweep(const SweepOptions& opt);

// --- rate -------------------------------------------------------------

struct RateOptions {
  std::vector<std::uint32_t> n_list;  // block sizes
  std::uint32_t num_blocks = 2;
  std::vector<double> theta_grid;
  double quotient = 4.0;  // rho = theta / quotient
  unsigned k = 1;
  Variant variant;
  std::uint64_t base_seed = 0;
  unsigned reps = 10;
  double threshold = 0.95;
  unsigned jobs = 1;
  std::string out_csv;
};

// Per (n, theta): Rand index maximized exactly over the threshold and
// averaged over replicates; per n the minimal theta reaching the
// accuracy threshold; and the least-squares slope of log theta_min
// against log n (omitted with a warning when fewer than two points
// qualify).
void run_rate(const RateOptions& opt, std::ostream& warn);

// Building blocks of run_rate, exposed for direct experiment code.
double rate_point_avg_best_rand(std::uint32_t block_size, std::uint32_t num_blocks,
                                double theta, double rho, unsigned k,
                                Variant variant, std::uint64_t base_seed,
                                unsigned reps, unsigned jobs = 0);

// Least-squares slope of log(y) against log(x); requires >= 2 points.
double fit_log_slope(const std::vector<std::pair<double, double>>& points);

// --- theory -----------------------------------------------------------

enum class TheoryMode { polygon, ak_table, acd };

struct TheoryOptions {
  TheoryMode mode = TheoryMode::polygon;
  VariantTag variant = VariantTag::debiased;
  unsigned k = 1;        // polygon
  double theta = 0.0;    // ak_table / acd
  double rho = 0.0;
  unsigned K = 2;
  unsigned k_max = 1;    // ak_table
  unsigned n = 1;        // acd
  std::string out_csv;
};

void run_theory(const TheoryOptions& opt);

// --- shared file helpers ----------------------------------------------

// One integer label per line.
void write_labels_file(const std::string& path, const Labeling& labels);
Labeling load_labels_file(const std::string& path, std::size_t expected_size);

}  // namespace awcd
