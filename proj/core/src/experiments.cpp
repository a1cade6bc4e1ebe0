#include "awcd/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "awcd/csv.hpp"
#include "awcd/metrics.hpp"
#include "awcd/rng.hpp"

namespace awcd {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  return out;
}

void close_out(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("write failed for '" + path + "'");
}

const char* variant_name(VariantTag tag) {
  switch (tag) {
    case VariantTag::circle: return "circle";
    case VariantTag::debiased: return "debiased";
    case VariantTag::plus: return "plus";
  }
  return "?";
}

// Runs tasks 0..count-1 on up to `jobs` threads. Each task writes only
// its own output slot, so scheduling cannot change results.
void parallel_tasks(std::size_t count, unsigned jobs,
                    const std::function<void(std::size_t)>& task) {
  unsigned workers = jobs ? jobs : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = static_cast<unsigned>(std::min<std::size_t>(std::max<std::size_t>(count, 1), workers));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      task(i);
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work);
  for (auto& t : threads) t.join();
}

}  // namespace

std::vector<double> parse_linear_grid(const std::string& text) {
  const auto first = text.find(':');
  const auto second = text.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw std::invalid_argument("grid must be 'start:stop:count'");
  auto parse_d = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument("");
      return v;
    } catch (...) {
      throw std::invalid_argument("bad grid number '" + s + "'");
    }
  };
  const double start = parse_d(text.substr(0, first));
  const double stop = parse_d(text.substr(first + 1, second - first - 1));
  const std::string count_str = text.substr(second + 1);
  long count = 0;
  try {
    std::size_t used = 0;
    count = std::stol(count_str, &used);
    if (used != count_str.size()) throw std::invalid_argument("");
  } catch (...) {
    throw std::invalid_argument("bad grid count '" + count_str + "'");
  }
  if (count < 1) throw std::invalid_argument("grid count must be >= 1");

  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count));
  if (count == 1) {
    grid.push_back(start);
  } else {
    for (long i = 0; i < count; ++i)
      grid.push_back(start + (stop - start) * static_cast<double>(i) /
                                 static_cast<double>(count - 1));
  }
  return grid;
}

void write_labels_file(const std::string& path, const Labeling& labels) {
  auto out = open_out(path);
  for (auto l : labels) out << l << '\n';
  close_out(out, path);
}

Labeling load_labels_file(const std::string& path, std::size_t expected_size) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  Labeling labels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    long long value = 0;
    const auto res = std::from_chars(line.data(), line.data() + line.size(), value);
    if (res.ec != std::errc{} || res.ptr != line.data() + line.size() || value < 0)
      throw ParseError(path + ": line " + std::to_string(line_no) +
                       ": expected a nonnegative label");
    labels.push_back(static_cast<std::uint32_t>(value));
  }
  if (labels.size() != expected_size)
    throw ParseError(path + ": expected " + std::to_string(expected_size) +
                     " labels, found " + std::to_string(labels.size()));
  return labels;
}

void run_generate(const GenerateOptions& opt, std::ostream& out) {
  opt.spec.validate();
  auto [g, labels] = sample(opt.spec, opt.seed);
  auto gf = open_out(opt.graph_out);
  write_edge_list(gf, g);
  close_out(gf, opt.graph_out);
  write_labels_file(opt.labels_out, labels);
  out << "edges " << g.num_edges() << '\n';
}

void run_detect(const DetectOptions& opt, std::ostream& out) {
  const Graph g = load_edge_list_file(opt.graph_path);
  AwcdConfig config;
  config.k = opt.k;
  config.lambda = opt.lambda;
  config.l_max = opt.iters;
  config.variant = opt.variant;
  const RunResult result = run(g, config, opt.jobs);

  auto wf = open_out(opt.weights_out);
  const std::size_t n = result.weights.dim();
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (result.weights.get(i, j)) wf << i << ' ' << j << '\n';
  close_out(wf, opt.weights_out);

  write_labels_file(opt.labels_out, partition_from_weights(result.weights));

  if (opt.test_matrix_out) {
    auto tf = open_out(*opt.test_matrix_out);
    const TestMatrix& t = result.stats.back();
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = 0; j < n; ++j) {
        if (j) tf << ',';
        tf << format_double(t.get(i, j));
      }
      tf << '\n';
    }
    close_out(tf, *opt.test_matrix_out);
  }

  if (opt.labels_path) {
    const Labeling truth = load_labels_file(*opt.labels_path, g.num_vertices());
    const WeightMatrix w_star = true_weights(truth);
    out << "rand_index " << format_double(rand_index(result.weights, w_star)) << '\n';
    out << "exact_recovery " << format_bool01(exact_recovery(result.weights, w_star))
        << '\n';
  }
}

namespace {

struct SweepRow {
  double rand = 0.0;
  bool exact = false;
  double modularity_score = 0.0;
  double seconds = 0.0;
};

}  // namespace

void run_sweep(const SweepOptions& opt) {
  if (opt.block_size == 0) throw std::invalid_argument("block size must be positive");
  if (opt.num_blocks == 0) throw std::invalid_argument("block count must be positive");
  if (opt.theta_list.empty() || opt.rho_list.empty() || opt.k_list.empty() ||
      opt.lambda_grid.empty())
    throw std::invalid_argument("sweep lists must be non-empty");
  if (opt.reps == 0) throw std::invalid_argument("reps must be >= 1");

  auto thetas = opt.theta_list;
  auto rhos = opt.rho_list;
  auto ks = opt.k_list;
  auto lambdas = opt.lambda_grid;
  std::sort(thetas.begin(), thetas.end());
  std::sort(rhos.begin(), rhos.end());
  std::sort(ks.begin(), ks.end());
  std::sort(lambdas.begin(), lambdas.end());

  std::vector<std::uint64_t> seeds(opt.reps);
  for (unsigned r = 0; r < opt.reps; ++r) seeds[r] = stream_seed(opt.base_seed, r);

  struct Task {
    std::size_t ti, ri, ki, rep;
  };
  std::vector<Task> tasks;
  for (std::size_t ti = 0; ti < thetas.size(); ++ti)
    for (std::size_t ri = 0; ri < rhos.size(); ++ri)
      for (std::size_t ki = 0; ki < ks.size(); ++ki)
        for (std::size_t rep = 0; rep < opt.reps; ++rep)
          tasks.push_back({ti, ri, ki, rep});

  std::vector<std::vector<SweepRow>> results(tasks.size());
  const unsigned inner_jobs = opt.jobs > 1 ? 1 : 0;

  parallel_tasks(tasks.size(), opt.jobs, [&](std::size_t idx) {
    const Task& task = tasks[idx];
    const auto t0 = std::chrono::steady_clock::now();
    const SbmSpec spec = SbmSpec::symmetric(opt.block_size, opt.num_blocks,
                                            thetas[task.ti], rhos[task.ri]);
    auto [g, labels] = sample(spec, seeds[task.rep]);
    const WeightMatrix w_star = true_weights(labels);
    const Rings rings = make_rings(g, ks[task.ki], inner_jobs);
    const TestMatrix t = test_matrix(g, rings, opt.variant, inner_jobs);

    std::vector<SweepRow> rows;
    rows.reserve(lambdas.size());
    for (double lambda : lambdas) {
      const WeightMatrix w = threshold(t, lambda);
      SweepRow row;
      row.rand = rand_index(w, w_star);
      row.exact = exact_recovery(w, w_star);
      if (g.num_edges() > 0)
        row.modularity_score = modularity(g, partition_from_weights(w));
      else
        row.modularity_score = std::numeric_limits<double>::quiet_NaN();
      rows.push_back(row);
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - t0).count();
    for (auto& row : rows) row.seconds = seconds;
    results[idx] = std::move(rows);
  });

  auto out = open_out(opt.out_csv);
  out << "n,K,theta,rho,k,lambda,seed,rand_index,exact_recovery,modularity,"
         "wall_time_seconds\n";
  for (std::size_t idx = 0; idx < tasks.size(); ++idx) {
    const Task& task = tasks[idx];
    for (std::size_t li = 0; li < lambdas.size(); ++li) {
      const SweepRow& row = results[idx][li];
      out << opt.block_size << ',' << opt.num_blocks << ','
          << format_double(thetas[task.ti]) << ',' << format_double(rhos[task.ri])
          << ',' << ks[task.ki] << ',' << format_double(lambdas[li]) << ','
          << seeds[task.rep] << ',' << format_double(row.rand) << ','
          << format_bool01(row.exact) << ',' << format_double(row.modularity_score)
          << ',' << format_double(opt.timings ? row.seconds : 0.0) << '\n';
    }
  }
  close_out(out, opt.out_csv);
}

double rate_point_avg_best_rand(std::uint32_t block_size, std::uint32_t num_blocks,
                                double theta, double rho, unsigned k,
                                Variant variant, std::uint64_t base_seed,
                                unsigned reps, unsigned jobs) {
  if (reps == 0) throw std::invalid_argument("reps must be >= 1");
  std::vector<double> best(reps, 0.0);
  parallel_tasks(reps, jobs, [&](std::size_t rep) {
    const SbmSpec spec = SbmSpec::symmetric(block_size, num_blocks, theta, rho);
    auto [g, labels] = sample(spec, stream_seed(base_seed, rep));
    const WeightMatrix w_star = true_weights(labels);
    const Rings rings = make_rings(g, k, jobs > 1 ? 1 : 0);
    const TestMatrix t = test_matrix(g, rings, variant, jobs > 1 ? 1 : 0);
    best[rep] = best_rand_over_lambda(t, w_star);
  });
  double sum = 0.0;
  for (double b : best) sum += b;
  return sum / static_cast<double>(reps);
}

double fit_log_slope(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2) throw std::invalid_argument("need at least two points");
  double mx = 0.0, my = 0.0;
  for (const auto& [x, y] : points) {
    mx += std::log(x);
    my += std::log(y);
  }
  mx /= static_cast<double>(points.size());
  my /= static_cast<double>(points.size());
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [x, y] : points) {
    const double dx = std::log(x) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(y) - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("degenerate abscissae");
  return sxy / sxx;
}

void run_rate(const RateOptions& opt, std::ostream& warn) {
  if (opt.n_list.empty() || opt.theta_grid.empty())
    throw std::invalid_argument("rate lists must be non-empty");
  if (!(opt.quotient > 1.0)) throw std::invalid_argument("quotient must exceed 1");
  if (!(opt.threshold >= 0.0 && opt.threshold <= 1.0))
    throw std::invalid_argument("threshold must lie in [0,1]");
  if (opt.reps == 0) throw std::invalid_argument("reps must be >= 1");

  auto ns = opt.n_list;
  auto thetas = opt.theta_grid;
  std::sort(ns.begin(), ns.end());
  std::sort(thetas.begin(), thetas.end());

  struct Task {
    std::size_t ni, ti, rep;
  };
  std::vector<Task> tasks;
  for (std::size_t ni = 0; ni < ns.size(); ++ni)
    for (std::size_t ti = 0; ti < thetas.size(); ++ti)
      for (unsigned rep = 0; rep < opt.reps; ++rep) tasks.push_back({ni, ti, rep});

  std::vector<double> best(tasks.size(), 0.0);
  parallel_tasks(tasks.size(), opt.jobs, [&](std::size_t idx) {
    const Task& task = tasks[idx];
    const double theta = thetas[task.ti];
    const double rho = theta / opt.quotient;
    const SbmSpec spec =
        SbmSpec::symmetric(ns[task.ni], opt.num_blocks, theta, rho);
    auto [g, labels] = sample(spec, stream_seed(opt.base_seed, task.rep));
    const WeightMatrix w_star = true_weights(labels);
    const unsigned inner_jobs = opt.jobs > 1 ? 1 : 0;
    const Rings rings = make_rings(g, opt.k, inner_jobs);
    const TestMatrix t = test_matrix(g, rings, opt.variant, inner_jobs);
    best[idx] = best_rand_over_lambda(t, w_star);
  });

  // Average replicates per (n, theta).
  std::vector<std::vector<double>> avg(ns.size(), std::vector<double>(thetas.size(), 0.0));
  for (std::size_t idx = 0; idx < tasks.size(); ++idx)
    avg[tasks[idx].ni][tasks[idx].ti] += best[idx] / static_cast<double>(opt.reps);

  std::vector<std::pair<double, double>> min_points;  // (n, theta_min)
  std::vector<std::optional<double>> theta_min(ns.size());
  for (std::size_t ni = 0; ni < ns.size(); ++ni) {
    for (std::size_t ti = 0; ti < thetas.size(); ++ti) {
      if (avg[ni][ti] >= opt.threshold) {
        theta_min[ni] = thetas[ti];
        min_points.emplace_back(static_cast<double>(ns[ni]), thetas[ti]);
        break;
      }
    }
  }

  auto out = open_out(opt.out_csv);
  out << "row,n,theta,rho,avg_best_rand,theta_min,slope\n";
  for (std::size_t ni = 0; ni < ns.size(); ++ni)
    for (std::size_t ti = 0; ti < thetas.size(); ++ti)
      out << "point," << ns[ni] << ',' << format_double(thetas[ti]) << ','
          << format_double(thetas[ti] / opt.quotient) << ','
          << format_double(avg[ni][ti]) << ",,\n";
  for (std::size_t ni = 0; ni < ns.size(); ++ni)
    if (theta_min[ni])
      out << "theta_min," << ns[ni] << ",,,," << format_double(*theta_min[ni]) << ",\n";

  if (min_points.size() >= 2) {
    out << "slope,,,,,," << format_double(fit_log_slope(min_points)) << '\n';
  } else {
    warn << "warning: fewer than two feasible theta_min points; slope row omitted\n";
  }
  close_out(out, opt.out_csv);
}

void run_theory(const TheoryOptions& opt) {
  auto out = open_out(opt.out_csv);
  switch (opt.mode) {
    case TheoryMode::polygon: {
      const PolygonSpec spec = consistency_polygon(opt.variant, opt.k);
      out << "variant,k,vertex,x,y,x_float,y_float\n";
      for (std::size_t idx = 0; idx < spec.vertices.size(); ++idx) {
        const auto& [x, y] = spec.vertices[idx];
        out << variant_name(spec.variant) << ',' << spec.k << ',' << idx << ','
            << x.to_string() << ',' << y.to_string() << ','
            << format_double(x.to_double()) << ',' << format_double(y.to_double())
            << '\n';
      }
      break;
    }
    case TheoryMode::ak_table: {
      out << "k,a_k,b_k\n";
      for (unsigned kk = 1; kk <= opt.k_max; ++kk) {
        const auto [a, b] = ak_bk(opt.theta, opt.rho, opt.K, kk);
        out << kk << ',' << format_double(a) << ',' << format_double(b) << '\n';
      }
      break;
    }
    case TheoryMode::acd: {
      const ExpectedCounts counts = expected_counts_k1(opt.theta, opt.rho, opt.K, opt.n);
      out << "a,c,d\n";
      out << format_double(counts.a) << ',' << format_double(counts.c) << ','
          << format_double(counts.d) << '\n';
      break;
    }
  }
  close_out(out, opt.out_csv);
}

}  // namespace awcd
