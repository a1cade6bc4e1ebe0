#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "awcd/csv.hpp"
#include "awcd/experiments.hpp"
#include "awcd/metrics.hpp"

using namespace awcd;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count_lines(const std::string& text) {
  std::size_t n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("awcd_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static int& counter() {
    static int c = 0;
    return c;
  }
  std::string file(const char* name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("format_double is shortest round-trip with inf tokens") {
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
  CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
  const double v = 0.1 + 0.2;
  CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("parse_linear_grid") {
  CHECK(parse_linear_grid("0:10:11") ==
        std::vector<double>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  CHECK(parse_linear_grid("5:9:1") == std::vector<double>{5});
  CHECK(parse_linear_grid("2:4:3") == std::vector<double>{2, 3, 4});
  CHECK_THROWS_AS(parse_linear_grid("1:2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_linear_grid("a:2:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_linear_grid("1:2:0"), std::invalid_argument);
}

TEST_CASE("generate writes deterministic graph and labels files") {
  TempDir dir;
  GenerateOptions opt;
  opt.spec = SbmSpec::symmetric(20, 2, 0.4, 0.1);
  opt.seed = 9;
  opt.graph_out = dir.file("g.txt");
  opt.labels_out = dir.file("l.txt");

  std::ostringstream out1, out2;
  run_generate(opt, out1);
  const std::string graph1 = slurp(opt.graph_out);
  const std::string labels1 = slurp(opt.labels_out);
  run_generate(opt, out2);
  CHECK(graph1 == slurp(opt.graph_out));
  CHECK(labels1 == slurp(opt.labels_out));
  CHECK(out1.str() == out2.str());
  CHECK(out1.str().rfind("edges ", 0) == 0);
  CHECK(count_lines(labels1) == 40);

  // The labels file parses back to the canonical labeling.
  CHECK(load_labels_file(opt.labels_out, 40) == canonical_labels(opt.spec));
}

TEST_CASE("generate with zero probabilities writes no edge lines") {
  TempDir dir;
  GenerateOptions opt;
  opt.spec = SbmSpec::symmetric(5, 2, 0.0, 0.0);
  opt.graph_out = dir.file("g.txt");
  opt.labels_out = dir.file("l.txt");
  std::ostringstream out;
  run_generate(opt, out);
  CHECK(slurp(opt.graph_out) == "10\n");
  CHECK(out.str() == "edges 0\n");
}

TEST_CASE("generate reports unwritable paths") {
  GenerateOptions opt;
  opt.spec = SbmSpec::symmetric(3, 2, 0.1, 0.1);
  opt.graph_out = "/nonexistent_dir_awcd/g.txt";
  opt.labels_out = "/nonexistent_dir_awcd/l.txt";
  std::ostringstream out;
  CHECK_THROWS_WITH_AS(run_generate(opt, out),
                       doctest::Contains("/nonexistent_dir_awcd/g.txt"), IoError);
}

TEST_CASE("detect scores against ground truth and dumps inf tokens") {
  TempDir dir;
  GenerateOptions gen;
  gen.spec = SbmSpec::symmetric(40, 2, 0.6, 0.05);
  gen.seed = 5;
  gen.graph_out = dir.file("g.txt");
  gen.labels_out = dir.file("l.txt");
  std::ostringstream ignore;
  run_generate(gen, ignore);

  DetectOptions det;
  det.graph_path = gen.graph_out;
  det.k = 1;
  det.lambda = 40.0;
  det.weights_out = dir.file("w.txt");
  det.labels_out = dir.file("dl.txt");
  det.labels_path = gen.labels_out;
  det.test_matrix_out = dir.file("t.csv");

  std::ostringstream out;
  run_detect(det, out);
  const std::string report = out.str();
  CHECK(report.find("rand_index ") != std::string::npos);
  CHECK(report.find("exact_recovery ") != std::string::npos);

  // The weight pair list is "i j" ascending with i < j.
  std::istringstream wf(slurp(det.weights_out));
  long prev_i = -1, prev_j = -1;
  long i, j;
  while (wf >> i >> j) {
    CHECK(i < j);
    CHECK((i > prev_i || (i == prev_i && j > prev_j)));
    prev_i = i;
    prev_j = j;
  }

  const std::string t_csv = slurp(*det.test_matrix_out);
  CHECK(count_lines(t_csv) == 80);

  SUBCASE("lambda < 0 writes an empty pair list") {
    det.lambda = -1.0;
    det.test_matrix_out.reset();
    std::ostringstream out2;
    run_detect(det, out2);
    CHECK(slurp(det.weights_out).empty());
    // Every vertex becomes its own component.
    CHECK(count_lines(slurp(det.labels_out)) == 80);
  }
}

TEST_CASE("detect dump contains inf for isolated-pair statistics") {
  TempDir dir;
  {
    std::ofstream g(dir.file("g.txt"));
    g << "4\n0 1\n";  // vertices 2 and 3 isolated
  }
  DetectOptions det;
  det.graph_path = dir.file("g.txt");
  det.k = 1;
  det.lambda = 1.0;
  det.weights_out = dir.file("w.txt");
  det.labels_out = dir.file("dl.txt");
  det.test_matrix_out = dir.file("t.csv");
  std::ostringstream out;
  run_detect(det, out);
  CHECK(slurp(*det.test_matrix_out).find("inf") != std::string::npos);
}

TEST_CASE("detect rejects a missing graph file") {
  DetectOptions det;
  det.graph_path = "/no/such/file.txt";
  det.weights_out = "w.txt";
  det.labels_out = "l.txt";
  std::ostringstream out;
  CHECK_THROWS_AS(run_detect(det, out), IoError);
}

TEST_CASE("sweep emits one row per grid point and seed, byte-identical") {
  TempDir dir;
  SweepOptions opt;
  opt.block_size = 25;
  opt.num_blocks = 2;
  opt.theta_list = {0.5};
  opt.rho_list = {0.1};
  opt.k_list = {1, 2, 3};
  opt.lambda_grid = {0, 5, 10, 15, 20};
  opt.base_seed = 3;
  opt.reps = 2;
  opt.variant = {VariantTag::debiased, BiasIndicator::edge};
  opt.out_csv = dir.file("sweep.csv");

  run_sweep(opt);
  const std::string csv1 = slurp(opt.out_csv);
  CHECK(count_lines(csv1) == 1 + 3 * 5 * 2);
  CHECK(csv1.rfind("n,K,theta,rho,k,lambda,seed,rand_index,exact_recovery,"
                   "modularity,wall_time_seconds\n", 0) == 0);

  run_sweep(opt);
  CHECK(slurp(opt.out_csv) == csv1);

  SUBCASE("parallel jobs keep rows and order identical") {
    opt.jobs = 4;
    opt.out_csv = dir.file("sweep_par.csv");
    run_sweep(opt);
    CHECK(slurp(opt.out_csv) == csv1);
  }

  SUBCASE("single-point grid gives header plus one row") {
    opt.k_list = {1};
    opt.lambda_grid = {5};
    opt.reps = 1;
    opt.out_csv = dir.file("single.csv");
    run_sweep(opt);
    CHECK(count_lines(slurp(opt.out_csv)) == 2);
  }
}

TEST_CASE("rate emits points, theta_min rows and a slope") {
  TempDir dir;
  RateOptions opt;
  opt.n_list = {30, 60};
  opt.theta_grid = {0.05, 0.2, 0.45};
  opt.quotient = 4.0;
  opt.k = 1;
  opt.variant = {VariantTag::debiased, BiasIndicator::edge};
  opt.base_seed = 17;
  opt.reps = 2;
  opt.threshold = 0.9;
  opt.out_csv = dir.file("rate.csv");

  std::ostringstream warn;
  run_rate(opt, warn);
  const std::string csv = slurp(opt.out_csv);
  CHECK(csv.rfind("row,n,theta,rho,avg_best_rand,theta_min,slope\n", 0) == 0);
  CHECK(count_lines(csv) >= 1 + 6);  // header + 6 point rows

  SUBCASE("single n yields no slope row and a warning") {
    opt.n_list = {30};
    opt.out_csv = dir.file("rate1.csv");
    std::ostringstream warn1;
    run_rate(opt, warn1);
    CHECK(slurp(opt.out_csv).find("slope,") == std::string::npos);
    CHECK(warn1.str().find("warning") != std::string::npos);
  }

  SUBCASE("threshold 0 makes the smallest theta qualify everywhere") {
    opt.threshold = 0.0;
    opt.out_csv = dir.file("rate0.csv");
    std::ostringstream warn0;
    run_rate(opt, warn0);
    const std::string csv0 = slurp(opt.out_csv);
    CHECK(csv0.find("theta_min,30,,,,0.05,\n") != std::string::npos);
    CHECK(csv0.find("theta_min,60,,,,0.05,\n") != std::string::npos);
  }
}

TEST_CASE("theory CSV modes") {
  TempDir dir;

  TheoryOptions poly;
  poly.mode = TheoryMode::polygon;
  poly.variant = VariantTag::circle;
  poly.k = 1;
  poly.out_csv = dir.file("poly.csv");
  run_theory(poly);
  const std::string poly_csv = slurp(poly.out_csv);
  CHECK(count_lines(poly_csv) == 5);  // header + 4 vertices
  CHECK(poly_csv.find("circle,1,2,-1/3,-1/9,") != std::string::npos);

  TheoryOptions ak;
  ak.mode = TheoryMode::ak_table;
  ak.theta = 0.5;
  ak.rho = 0.25;
  ak.K = 2;
  ak.k_max = 3;
  ak.out_csv = dir.file("ak.csv");
  run_theory(ak);
  const std::string ak_csv = slurp(ak.out_csv);
  CHECK(ak_csv.rfind("k,a_k,b_k\n", 0) == 0);
  CHECK(ak_csv.find("1,0.5,0.25\n") != std::string::npos);
  CHECK(ak_csv.find("2,0.3125,0.25\n") != std::string::npos);

  TheoryOptions acd;
  acd.mode = TheoryMode::acd;
  acd.theta = 0.5;
  acd.rho = 0.0;
  acd.K = 2;
  acd.n = 10;
  acd.out_csv = dir.file("acd.csv");
  run_theory(acd);
  CHECK(slurp(acd.out_csv) == "a,c,d\n12.5,0,25\n");

  TheoryOptions bad;
  bad.mode = TheoryMode::polygon;
  bad.variant = VariantTag::plus;
  bad.k = 1;
  bad.out_csv = dir.file("bad.csv");
  CHECK_THROWS_AS(run_theory(bad), std::invalid_argument);
}

TEST_CASE("labels file round-trip and validation") {
  TempDir dir;
  const Labeling labels{0, 2, 1, 1};
  write_labels_file(dir.file("l.txt"), labels);
  CHECK(load_labels_file(dir.file("l.txt"), 4) == labels);
  CHECK_THROWS_AS(load_labels_file(dir.file("l.txt"), 5), ParseError);
  {
    std::ofstream bad(dir.file("bad.txt"));
    bad << "0\nx\n";
  }
  CHECK_THROWS_AS(load_labels_file(dir.file("bad.txt"), 2), ParseError);
  CHECK_THROWS_AS(load_labels_file(dir.file("missing.txt"), 2), IoError);
}

#ifdef AWCD_CLI_PATH
namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(AWCD_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("CLI exit codes: 0 success, 1 usage, 2 I/O or parse") {
  TempDir dir;
  const std::string g = dir.file("g.txt");
  const std::string l = dir.file("l.txt");
  CHECK(run_cli("generate --n 10 --K 2 --theta 0.5 --rho 0.1 --seed 1 --out " + g +
                " --labels-out " + l) == 0);
  CHECK(run_cli("nonsense-subcommand") == 1);
  CHECK(run_cli("detect " + g) == 1);  // missing required --lambda
  CHECK(run_cli("detect /no/such/graph.txt --lambda 1 --out " + dir.file("w.txt") +
                " --labels-out " + dir.file("dl.txt")) == 2);
  CHECK(run_cli("--help") == 0);

  {
    std::ofstream bad(dir.file("bad.txt"));
    bad << "3\n0 9\n";
  }
  CHECK(run_cli("detect " + dir.file("bad.txt") + " --lambda 1 --out " +
                dir.file("w.txt") + " --labels-out " + dir.file("dl.txt")) == 2);
}
#endif
