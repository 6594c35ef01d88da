#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "conelab/lab.hpp"

using namespace conelab;

TEST_CASE("quadratic forms symmetrize and evaluate") {
  // Entries {0,2;0,0} symmetrize to {0,1;1,0}: x^T A x = 2 x1 x2.
  QuadraticForm q(2, {0.0, 2.0, 0.0, 0.0});
  CHECK(q.matrix == std::vector<double>{0.0, 1.0, 1.0, 0.0});
  CHECK(q.evaluate(VectorElement{{3.0, 5.0}}) == 30.0);
  CHECK(q.evaluate(VectorElement{{0.0, 7.0}}) == 0.0);
  CHECK_THROWS_AS(q.evaluate(VectorElement{{1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(QuadraticForm(2, {1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(QuadraticForm(0, {}), std::invalid_argument);
}

TEST_CASE("seeded quadratic generation is deterministic") {
  const auto a = make_quadratic(3, 42);
  const auto b = make_quadratic(3, 42);
  const auto c = make_quadratic(3, 43);
  CHECK(a.matrix == b.matrix);
  CHECK(a.matrix != c.matrix);
  for (double e : a.matrix)
    CHECK(std::abs(e) <= 1.0);
}

TEST_CASE("noise models honor their amplitude bound") {
  const VectorElement x{{1.25, -0.5}};
  CHECK(NoiseModel::none()(x) == 0.0);
  CHECK(NoiseModel::constant_offset(-0.75)(x) == -0.75);
  CHECK(NoiseModel::constant_offset(-0.75).amplitude == 0.75);

  const auto sn = NoiseModel::sine(0.3, {1.0, 2.0});
  CHECK(sn(x) == doctest::Approx(0.3 * std::sin(1.25 - 1.0)));
  CHECK(std::abs(sn(x)) <= 0.3);
  CHECK_THROWS_AS(sn(VectorElement{{1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(NoiseModel::sine(-0.1, {1.0}), std::invalid_argument);

  const auto h1 = NoiseModel::seeded_hash(0.2, 9);
  const auto h2 = NoiseModel::seeded_hash(0.2, 10);
  CHECK(h1(x) == h1(x));  // pure function of (point, seed)
  CHECK(h1(x) != h2(x));
  for (double t : {-3.0, -0.5, 0.0, 0.25, 2.0})
    CHECK(std::abs(h1(VectorElement{{t, t}})) <= 0.2);
  CHECK_THROWS_AS(NoiseModel::seeded_hash(-0.1, 0), std::invalid_argument);
}

TEST_CASE("perturbed maps enforce the eps/6 budget") {
  const auto q0 = make_quadratic(2, 17);
  CHECK_THROWS_AS(build_perturbed(q0, NoiseModel::constant_offset(0.2), 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_perturbed(q0, NoiseModel::none(), 0.0),
                  std::invalid_argument);

  const auto f =
      build_perturbed(q0, NoiseModel::seeded_hash(1.0 / 6.0, 3), 1.0);
  CHECK(f.dimension == 2);
  // Budgeted noise keeps the hypothesis valid at scale eps.
  const auto grid = sample_grid(2, 24, 21);
  CHECK(quad_residual(f, default_pairs(f, grid, 512), 1.0).pass);
}

TEST_CASE("sweep output is sorted, complete, and deterministic") {
  SweepConfig cfg;
  cfg.epsilons = {6.0, 0.6};
  cfg.dims = {2, 1};
  cfg.seeds = {2, 1};
  cfg.noises = {NoiseKind::seeded_hash, NoiseKind::sine};
  cfg.n_samples = 16;

  const auto recs = run_sweep(cfg);
  CHECK(recs.size() == 16);
  for (std::size_t i = 1; i < recs.size(); ++i) {
    const auto& a = recs[i - 1];
    const auto& b = recs[i];
    const auto ka = std::tuple(a.epsilon, a.dimension, a.seed, a.noise);
    const auto kb = std::tuple(b.epsilon, b.dimension, b.seed, b.noise);
    CHECK(ka < kb);
  }
  for (const auto& r : recs) {
    CHECK(r.pass);
    CHECK(r.max_gap <= r.bound + cfg.tol);
    CHECK(r.gamma >= 2.0 / 3.0);
  }
  // Re-running the sweep reproduces the report byte for byte.
  CHECK(format_report(recs, "csv") == format_report(run_sweep(cfg), "csv"));
}

TEST_CASE("csv report layout") {
  SweepConfig cfg;
  cfg.epsilons = {1.0};
  cfg.dims = {1};
  cfg.seeds = {5};
  cfg.noises = {NoiseKind::none};
  cfg.n_samples = 8;
  const auto text = format_report(run_sweep(cfg), "csv");

  std::istringstream is(text);
  std::string header, row, extra;
  REQUIRE(std::getline(is, header));
  CHECK(header ==
        "epsilon,dimension,seed,noise,lambda,gamma,iterations,max_gap,bound,"
        "slope,pass");
  REQUIRE(std::getline(is, row));
  CHECK(row.starts_with("1,1,5,none,"));
  CHECK(row.ends_with(",true"));
  CHECK_FALSE(std::getline(is, extra));
  CHECK_THROWS_AS(format_report({}, "xml"), std::invalid_argument);
}

TEST_CASE("jsonl report parses and carries the cell fields") {
  SweepConfig cfg;
  cfg.epsilons = {0.6};
  cfg.dims = {1, 2};
  cfg.seeds = {3};
  cfg.noises = {NoiseKind::sine};
  cfg.n_samples = 8;
  const auto recs = run_sweep(cfg);
  std::istringstream is(format_report(recs, "jsonl"));
  std::string line;
  std::size_t n = 0;
  while (std::getline(is, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.at("epsilon").get<double>() == doctest::Approx(0.6));
    CHECK(j.at("dimension").get<int>() == recs[n].dimension);
    CHECK(j.at("noise").get<std::string>() == "sine");
    CHECK(j.at("pass").get<bool>() == recs[n].pass);
    CHECK(j.at("lambda").is_number());
    ++n;
  }
  CHECK(n == recs.size());
}

TEST_CASE("infinite slopes become JSON nulls") {
  SweepConfig cfg;
  cfg.epsilons = {1.0};
  cfg.dims = {1};
  cfg.seeds = {4};
  cfg.noises = {NoiseKind::none};  // exact quadratic: slope is -inf
  cfg.n_samples = 8;
  const auto recs = run_sweep(cfg);
  REQUIRE(recs.size() == 1);
  CHECK(std::isinf(recs[0].slope));
  const auto j =
      nlohmann::json::parse(format_report(recs, "jsonl"));
  CHECK(j.at("slope").is_null());
}

TEST_CASE("failed cells degrade to NaN rows instead of aborting") {
  SweepConfig cfg;
  cfg.epsilons = {2.0};
  cfg.dims = {1};
  cfg.seeds = {6};
  cfg.noises = {NoiseKind::constant_offset};
  cfg.n_samples = 8;
  cfg.max_iter = 2;  // tail bound cannot reach tol: the cell must fail
  const auto recs = run_sweep(cfg);
  REQUIRE(recs.size() == 1);
  CHECK_FALSE(recs[0].pass);
  CHECK(recs[0].iterations == -1);
  CHECK(std::isnan(recs[0].lambda));
  CHECK(std::isnan(recs[0].max_gap));
}

TEST_CASE("write_report round-trips through the filesystem") {
  SweepConfig cfg;
  cfg.epsilons = {1.0};
  cfg.dims = {1};
  cfg.seeds = {7};
  cfg.noises = {NoiseKind::sine};
  cfg.n_samples = 8;
  const auto recs = run_sweep(cfg);
  const std::string path = "lab_report_test.csv";
  write_report(recs, path, "csv");
  std::ifstream is(path, std::ios::binary);
  std::ostringstream ss;
  ss << is.rdbuf();
  CHECK(ss.str() == format_report(recs, "csv"));
  CHECK_THROWS_AS(write_report(recs, "no/such/dir/report.csv", "csv"),
                  std::runtime_error);
}

TEST_CASE("run_sweep validates its axes") {
  SweepConfig cfg;  // all axes empty
  CHECK_THROWS_AS(run_sweep(cfg), std::invalid_argument);
}
