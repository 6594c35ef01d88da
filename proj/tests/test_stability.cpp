#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>

#include "conelab/stability.hpp"
#include "conelab/topology.hpp"

using namespace conelab;

namespace {

ApproxQuadraticMap map1d(std::function<double(double)> g) {
  ApproxQuadraticMap f;
  f.dimension = 1;
  f.eval = [g = std::move(g)](const VectorElement& x) {
    return ExtendedReal(g(x.coords[0]));
  };
  return f;
}

}  // namespace

TEST_CASE("sample grid shape and determinism") {
  const auto s = sample_grid(2, 10, 99);
  CHECK(s.size() == 1 + 4 * 2 + 10);
  CHECK(s.front() == zero_like(s.front()));
  CHECK(s == sample_grid(2, 10, 99));
  CHECK(s != sample_grid(2, 10, 100));
  CHECK_THROWS_AS(sample_grid(0, 4, 1), std::invalid_argument);
}

TEST_CASE("pair admissibility respects the domain cone") {
  ApproxQuadraticMap f = map1d([](double x) { return x * x; });
  CHECK(pair_admissible(f, VectorElement{{1.0}}, VectorElement{{5.0}}));
  f.domain = DomainKind::nonneg_orthant;
  CHECK(pair_admissible(f, VectorElement{{5.0}}, VectorElement{{1.0}}));
  CHECK_FALSE(pair_admissible(f, VectorElement{{1.0}}, VectorElement{{5.0}}));
}

TEST_CASE("quad residual closed form: constant offset gives 2|c|") {
  // f(x) = x^2 + c: LHS - RHS = 2c for every pair, independent of x, y.
  for (double c : {0.0, 0.5, -1.25, 3.0}) {
    auto f = map1d([c](double x) { return x * x + c; });
    const auto samples = sample_grid(1, 16, 5);
    const auto pairs = default_pairs(f, samples);
    const auto rep = quad_residual(f, pairs, 1000.0);
    CHECK(rep.max_residual == doctest::Approx(2.0 * std::abs(c)).epsilon(1e-12));
    CHECK(rep.pass);
  }
}

TEST_CASE("quad residual closed form: linear term gives |x - y|") {
  auto f = map1d([](double x) { return x * x + x; });
  const std::vector<SamplePair> pairs = {
      {VectorElement{{3.0}}, VectorElement{{-3.0}}},
      {VectorElement{{1.0}}, VectorElement{{0.5}}},
      {VectorElement{{2.0}}, VectorElement{{2.0}}}};
  const auto rep = quad_residual(f, pairs, 100.0);
  CHECK(rep.max_residual == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(rep.worst_x == VectorElement{{3.0}});
  CHECK(rep.worst_y == VectorElement{{-3.0}});
}

TEST_CASE("quad residual gate failures") {
  auto f = map1d([](double x) { return x * x + x; });
  const std::vector<SamplePair> pairs = {
      {VectorElement{{3.0}}, VectorElement{{-3.0}}}};
  CHECK_FALSE(quad_residual(f, pairs, 1.0).pass);
  CHECK(quad_residual(f, pairs, 6.0).pass);  // boundary inclusive
  CHECK_THROWS_AS(quad_residual(f, pairs, 0.0), std::invalid_argument);
}

TEST_CASE("min lambda matches a bisection oracle") {
  // Oracle: bisect the monotone predicate |f0| <= lambda * eps directly.
  auto oracle = [](double f0, double eps) {
    auto ok = [&](double l) {
      return in_symmetric(ExtendedReal(f0), ExtendedReal(0.0),
                          ExtendedReal(l * eps));
    };
    double lo = 0.0, hi = 1.0;
    while (!ok(hi))
      hi *= 2.0;
    if (ok(lo))
      return 0.0;
    for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
      const double mid = 0.5 * (lo + hi);
      (ok(mid) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
  };
  for (double f0 : {0.0, 1.0, -1.0, 2.5, -0.125, 17.0})
    for (double eps : {0.5, 1.0, 2.0, 6.0}) {
      CHECK(min_lambda(ExtendedReal(f0), eps) ==
            doctest::Approx(oracle(f0, eps)).epsilon(1e-10));
    }
  CHECK(min_lambda(ExtendedReal(1.0), 2.0) == 0.5);  // exact
  CHECK(min_lambda(ExtendedReal(0.0), 3.0) == 0.0);
  CHECK_THROWS_AS(min_lambda(ExtendedReal::infinity(), 1.0), StabilizeError);
  CHECK_THROWS_AS(min_lambda(ExtendedReal(1.0), 0.0), std::invalid_argument);
}

TEST_CASE("tail bound frozen values") {
  CHECK(tail_bound(0, 0.5, 2.0) == 1.0);  // 1.5/3 * 2
  CHECK(tail_bound(2, 0.5, 2.0) == 0.0625);
  CHECK(tail_bound(0, 0.0, 3.0) == 1.0);
  CHECK(tail_bound(1, 0.0, 3.0) == 0.25);
  CHECK_THROWS_AS(tail_bound(-1, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("hyers iterate closed form for x^2 + 1") {
  // 4^-n((2^n x)^2 + 1) = x^2 + 4^-n, exactly in doubles.
  auto f = map1d([](double x) { return x * x + 1.0; });
  CHECK(hyers_iterate(f, VectorElement{{2.0}}, 0).value() == 5.0);
  CHECK(hyers_iterate(f, VectorElement{{2.0}}, 3).value() == 4.015625);
  CHECK(hyers_iterate(f, VectorElement{{0.0}}, 5).value() ==
        std::ldexp(1.0, -10));
  CHECK_THROWS_AS(hyers_iterate(f, VectorElement{{1.0}}, 41),
                  std::invalid_argument);
  CHECK_THROWS_AS(hyers_iterate(f, VectorElement{{1.0}}, -1),
                  std::invalid_argument);
}

TEST_CASE("stabilize certifies x^2 + 1 at eps = 2") {
  auto f = map1d([](double x) { return x * x + 1.0; });
  const auto r = stabilize(f, sample_grid(1, 32, 3), 2.0, 1e-9, 40);
  CHECK(r.certificate.lambda == 0.5);
  CHECK(r.certificate.gamma == 5.0 / 6.0);  // (0.5 + 2)/3 rounds identically
  CHECK(r.certificate.iterations == 15);    // first m with 4^-m <= 1e-9
  CHECK(r.certificate.tail == doctest::Approx(std::ldexp(1.0, -30)));
  CHECK(r.certificate.converged);
  CHECK(r.sandwich_ok);
  // Q(x) = x^2, so the gap to f is 1 - 4^-15 at every sample.
  CHECK(r.max_gap == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(r.max_gap <= r.certificate.gamma * 2.0);
  // Successive differences contract by exactly 1/4: slope is -log 4.
  CHECK(r.slope == doctest::Approx(-std::log(4.0)).epsilon(1e-6));
  for (std::size_t i = 0; i < r.samples.size(); ++i) {
    const double x = r.samples[i].coords[0];
    CHECK(std::abs(r.q_values[i].value() - x * x) <= 1e-9);
  }
}

TEST_CASE("stabilize on an exact quadratic is a fixed point") {
  auto f = map1d([](double x) { return 2.0 * x * x; });
  const auto r = stabilize(f, sample_grid(1, 16, 4), 1.0);
  CHECK(r.certificate.lambda == 0.0);
  CHECK(r.certificate.gamma == 2.0 / 3.0);
  CHECK(r.max_gap == 0.0);
  CHECK(r.sandwich_ok);
  CHECK(std::isinf(r.slope));  // no positive residuals to fit
  CHECK(r.slope < 0);
}

TEST_CASE("stabilize rejects a genuinely non-quadratic map") {
  auto f = map1d([](double x) { return x * x + x; });
  try {
    stabilize(f, sample_grid(1, 16, 5), 1.0);
    FAIL("expected HypothesisError");
  } catch (const HypothesisError& e) {
    CHECK_FALSE(e.report.pass);
    CHECK(e.report.max_residual > 1.0);
    CHECK(std::string(e.what()).find("worst pair") != std::string::npos);
  }
}

TEST_CASE("stabilize argument validation") {
  auto f = map1d([](double x) { return x * x; });
  CHECK_THROWS_AS(stabilize(f, {}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(stabilize(f, sample_grid(1, 4, 1), -1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(stabilize(f, sample_grid(1, 4, 1), 1.0, 1e-9, 99),
                  std::invalid_argument);
  // Iteration budget too small for the tolerance.
  CHECK_THROWS_AS(stabilize(map1d([](double x) { return x * x + 1.0; }),
                            sample_grid(1, 4, 1), 2.0, 1e-9, 3),
                  StabilizeError);
}

TEST_CASE("quadratic law verification") {
  const auto samples = sample_grid(1, 16, 6);
  auto exact = [](const VectorElement& x) {
    return ExtendedReal(3.0 * x.coords[0] * x.coords[0]);
  };
  ApproxQuadraticMap fm = map1d([](double x) { return 3.0 * x * x; });
  const auto pairs = default_pairs(fm, samples);
  CHECK(verify_quadratic_laws(exact, samples, pairs, 1e-12).all_pass());

  auto shifted = [](const VectorElement& x) {
    return ExtendedReal(3.0 * x.coords[0] * x.coords[0] + 0.1);
  };
  const auto rep = verify_quadratic_laws(shifted, samples, pairs, 1e-9);
  CHECK_FALSE(rep.all_pass());
  CHECK_FALSE(rep.zero_at_zero);
  CHECK(rep.max_violation >= 0.1);
  CHECK_FALSE(rep.witness.empty());
}

TEST_CASE("uniqueness crosscheck: base-2 vs base-4 schedules") {
  auto f = map1d([](double x) { return x * x + 1.0; });
  const auto samples = sample_grid(1, 16, 7);
  const auto rep = uniqueness_crosscheck(f, 2.0, samples, 1e-9, 40);
  CHECK(rep.pass);
  CHECK(rep.base2_steps == 15);
  CHECK(rep.base4_steps == 8);
  CHECK(rep.max_disagreement <= 2e-9);
}

TEST_CASE("banach case verifier on x^2 + 1") {
  auto f = map1d([](double x) { return x * x + 1.0; });
  const auto samples = sample_grid(1, 16, 8);
  const auto rep = banach_case_verify(f, 2.0, 2.0, samples);
  CHECK(rep.telescoping_ok);
  CHECK(rep.telescoping_worst_margin <= 1e-12);
  CHECK(rep.final_ok);
  // sup |Q - f + f(0)/3| = |4^-15 - 1 + 1/3| -> 2/3.
  CHECK(rep.final_max == doctest::Approx(2.0 / 3.0).epsilon(1e-8));
  CHECK(rep.membership_ok);
  CHECK(rep.pass);
  CHECK_THROWS_AS(banach_case_verify(f, 2.0, 1.0, samples),
                  std::invalid_argument);
  CHECK_THROWS_AS(banach_case_verify(f, 2.0, 0.5, samples),
                  std::invalid_argument);
}

TEST_CASE("banach telescoping is boundary-exact for the pure offset") {
  // For f = x^2 + 1 the telescoping sum hits the bound with equality, so
  // the reported margin sits at rounding scale, not materially below zero.
  auto f = map1d([](double x) { return x * x + 1.0; });
  const auto rep = banach_case_verify(f, 2.0, 2.0, sample_grid(1, 8, 9));
  CHECK(rep.telescoping_worst_margin >= -1e-12);
  CHECK(rep.telescoping_worst_margin <= 1e-12);
}
