#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "awcd/experiments.hpp"

namespace {

awcd::Variant make_variant(const std::string& tag, const std::string& bias) {
  awcd::Variant v;
  if (tag == "circle") v.tag = awcd::VariantTag::circle;
  else if (tag == "debiased") v.tag = awcd::VariantTag::debiased;
  else if (tag == "plus") v.tag = awcd::VariantTag::plus;
  else throw CLI::ValidationError("--variant", "must be circle, debiased or plus");
  if (bias == "edge") v.bias = awcd::BiasIndicator::edge;
  else if (bias == "diag") v.bias = awcd::BiasIndicator::diag;
  else throw CLI::ValidationError("--bias", "must be edge or diag");
  return v;
}

awcd::VariantTag make_variant_tag(const std::string& tag) {
  return make_variant(tag, "edge").tag;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive-weights community detection on undirected graphs"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Sample a stochastic block model");
  std::uint32_t gen_n = 100, gen_K = 2;
  double gen_theta = 0.5, gen_rho = 0.1;
  std::vector<std::uint32_t> gen_sizes;
  std::vector<double> gen_thetas;
  std::uint64_t gen_seed = 0;
  std::string gen_graph = "graph.txt", gen_labels = "labels.txt";
  gen->add_option("--n", gen_n, "Block size (symmetric model)");
  gen->add_option("--K", gen_K, "Number of blocks (symmetric model)");
  gen->add_option("--theta", gen_theta, "Within-block edge probability");
  gen->add_option("--rho", gen_rho, "Between-block edge probability");
  gen->add_option("--block-sizes", gen_sizes,
                  "Explicit block sizes (general model; overrides --n/--K)");
  gen->add_option("--thetas", gen_thetas,
                  "Per-block within probabilities (requires --block-sizes)");
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--out", gen_graph, "Edge-list output path");
  gen->add_option("--labels-out", gen_labels, "Labels output path");

  // detect
  auto* det = app.add_subcommand("detect", "Run the detection procedure on a graph");
  std::string det_graph, det_weights = "weights.txt", det_labels = "detected_labels.txt";
  std::string det_truth, det_dump;
  unsigned det_k = 1, det_iters = 1, det_jobs = 1;
  double det_lambda = 0.0;
  std::string det_variant = "debiased", det_bias = "edge";
  det->add_option("graph", det_graph, "Edge-list input path")->required();
  det->add_option("--k", det_k, "Neighborhood radius")->check(CLI::PositiveNumber);
  det->add_option("--lambda", det_lambda, "Test threshold")->required();
  det->add_option("--variant", det_variant, "circle, debiased or plus");
  det->add_option("--bias", det_bias, "edge or diag (debiased, k >= 2)");
  det->add_option("--iters", det_iters, "Iteration count")->check(CLI::PositiveNumber);
  det->add_option("--out", det_weights, "Weight-pair output path");
  det->add_option("--labels-out", det_labels, "Derived labels output path");
  det->add_option("--labels", det_truth, "Ground-truth labels for scoring");
  det->add_option("--dump-test-matrix", det_dump, "Write the dense test-statistic CSV");
  det->add_option("--jobs", det_jobs, "Worker threads");

  // sweep
  auto* swp = app.add_subcommand("sweep", "Parameter sweep over an SBM grid");
  awcd::SweepOptions sweep;
  std::vector<double> swp_thetas{0.5}, swp_rhos{0.1};
  std::vector<unsigned> swp_ks{1};
  std::string swp_lambda_grid = "0:10:11";
  std::string swp_variant = "debiased", swp_bias = "edge";
  swp->add_option("--n", sweep.block_size, "Block size")->required();
  swp->add_option("--K", sweep.num_blocks, "Number of blocks");
  swp->add_option("--thetas", swp_thetas, "Within probabilities");
  swp->add_option("--rhos", swp_rhos, "Between probabilities");
  swp->add_option("--ks", swp_ks, "Neighborhood radii");
  swp->add_option("--lambdas", swp_lambda_grid, "Lambda grid start:stop:count");
  swp->add_option("--variant", swp_variant, "circle, debiased or plus");
  swp->add_option("--bias", swp_bias, "edge or diag");
  swp->add_option("--seed", sweep.base_seed, "Base seed");
  swp->add_option("--reps", sweep.reps, "Replicates per grid point")
      ->check(CLI::PositiveNumber);
  swp->add_option("--jobs", sweep.jobs, "Concurrent grid tasks");
  swp->add_flag("--timings", sweep.timings,
                "Record wall time (breaks byte-identical reruns)");
  swp->add_option("--out", sweep.out_csv, "CSV output path")->required();

  // rate
  auto* rate = app.add_subcommand("rate", "Recovery-threshold rate experiment");
  awcd::RateOptions rate_opt;
  std::vector<double> rate_thetas;
  std::string rate_variant = "debiased", rate_bias = "edge";
  rate->add_option("--n-list", rate_opt.n_list, "Block sizes")->required();
  rate->add_option("--K", rate_opt.num_blocks, "Number of blocks");
  rate->add_option("--theta-grid", rate_thetas, "Theta grid values")->required();
  rate->add_option("--quotient", rate_opt.quotient, "theta / rho");
  rate->add_option("--k", rate_opt.k, "Neighborhood radius")->check(CLI::PositiveNumber);
  rate->add_option("--variant", rate_variant, "circle, debiased or plus");
  rate->add_option("--bias", rate_bias, "edge or diag");
  rate->add_option("--seed", rate_opt.base_seed, "Base seed");
  rate->add_option("--reps", rate_opt.reps, "Replicates per point")
      ->check(CLI::PositiveNumber);
  rate->add_option("--threshold", rate_opt.threshold, "Accuracy threshold for theta_min");
  rate->add_option("--jobs", rate_opt.jobs, "Concurrent tasks");
  rate->add_option("--out", rate_opt.out_csv, "CSV output path")->required();

  // theory
  auto* thy = app.add_subcommand("theory", "Consistency polygons and theory constants");
  awcd::TheoryOptions theory;
  std::string thy_variant = "debiased";
  bool thy_ak = false, thy_acd = false;
  thy->add_option("--variant", thy_variant, "circle, debiased or plus");
  thy->add_option("--k", theory.k, "Neighborhood radius")->check(CLI::PositiveNumber);
  thy->add_flag("--ak-table", thy_ak, "Emit the a_k/b_k table instead of a polygon");
  thy->add_flag("--acd", thy_acd, "Emit the k = 1 expectation constants a, c, d");
  thy->add_option("--theta", theory.theta, "Within probability (table modes)");
  thy->add_option("--rho", theory.rho, "Between probability (table modes)");
  thy->add_option("--K", theory.K, "Number of blocks (table modes)");
  thy->add_option("--kmax", theory.k_max, "Largest k in the a_k/b_k table");
  thy->add_option("--n", theory.n, "Block size (--acd)");
  thy->add_option("--out", theory.out_csv, "CSV output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) {
      awcd::GenerateOptions opt;
      if (!gen_sizes.empty()) {
        opt.spec.block_sizes = gen_sizes;
        opt.spec.theta_within =
            gen_thetas.empty() ? std::vector<double>(gen_sizes.size(), gen_theta)
                               : gen_thetas;
        opt.spec.rho_between = gen_rho;
      } else {
        opt.spec = awcd::SbmSpec::symmetric(gen_n, gen_K, gen_theta, gen_rho);
      }
      opt.seed = gen_seed;
      opt.graph_out = gen_graph;
      opt.labels_out = gen_labels;
      awcd::run_generate(opt, std::cout);
    } else if (det->parsed()) {
      awcd::DetectOptions opt;
      opt.graph_path = det_graph;
      opt.k = det_k;
      opt.lambda = det_lambda;
      opt.variant = make_variant(det_variant, det_bias);
      opt.iters = det_iters;
      opt.weights_out = det_weights;
      opt.labels_out = det_labels;
      if (!det_truth.empty()) opt.labels_path = det_truth;
      if (!det_dump.empty()) opt.test_matrix_out = det_dump;
      opt.jobs = det_jobs;
      awcd::run_detect(opt, std::cout);
    } else if (swp->parsed()) {
      sweep.theta_list = swp_thetas;
      sweep.rho_list = swp_rhos;
      sweep.k_list = swp_ks;
      sweep.lambda_grid = awcd::parse_linear_grid(swp_lambda_grid);
      sweep.variant = make_variant(swp_variant, swp_bias);
      awcd::run_sweep(sweep);
    } else if (rate->parsed()) {
      rate_opt.theta_grid = rate_thetas;
      rate_opt.variant = make_variant(rate_variant, rate_bias);
      awcd::run_rate(rate_opt, std::cerr);
    } else if (thy->parsed()) {
      if (thy_ak && thy_acd)
        throw std::invalid_argument("--ak-table and --acd are mutually exclusive");
      theory.mode = thy_ak ? awcd::TheoryMode::ak_table
                           : (thy_acd ? awcd::TheoryMode::acd : awcd::TheoryMode::polygon);
      theory.variant = make_variant_tag(thy_variant);
      awcd::run_theory(theory);
    }
  } catch (const awcd::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const awcd::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
