#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "conelab/laws.hpp"
#include "conelab/topology.hpp"

using namespace conelab;

TEST_CASE("scale construction guards") {
  CHECK_THROWS_AS(XiScalar(0.0), std::invalid_argument);
  CHECK_THROWS_AS(XiScalar(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(XiScalar(std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
  CHECK_THROWS_AS(UcMultiple<VectorElement>(0.0, ones(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(UcMultiple<VectorElement>(1.0, VectorElement{{0.0, 0.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(UcMultiple<VectorElement>(1.0, VectorElement{{-1.0, 1.0}}),
                  std::invalid_argument);
  CHECK(realize(UcMultiple<VectorElement>(0.5, ones(2)), ones(2)) ==
        VectorElement{{0.5, 0.5}});
  CHECK_THROWS_AS(realize(XiScalar(1.0), ones(2)), std::invalid_argument);
}

TEST_CASE("membership semantics on the extended reals") {
  const ExtendedReal a(2.0), v(0.5);
  CHECK(in_upper(ExtendedReal(2.5), a, v));       // b <= a + v boundary
  CHECK_FALSE(in_upper(ExtendedReal(2.6), a, v));
  CHECK(in_upper(ExtendedReal(-100.0), a, v));    // v(a) is a down-set
  CHECK(in_lower(ExtendedReal(1.5), a, v));       // a <= b + v boundary
  CHECK_FALSE(in_lower(ExtendedReal(1.4), a, v));
  CHECK(in_lower(ExtendedReal::infinity(), a, v));
  CHECK(in_symmetric(ExtendedReal(1.8), a, v));
  CHECK_FALSE(in_symmetric(ExtendedReal(1.4), a, v));
  CHECK_FALSE(in_symmetric(ExtendedReal(2.6), a, v));
  // Scale-typed overloads agree with the realized element.
  CHECK(in_symmetric(ExtendedReal(1.8), a, XiScalar(0.5)));
}

TEST_CASE("neighborhood identity suite on sample cones") {
  const auto lam = std::vector<double>{0.5, 1.0, 2.0};
  {
    auto s = extended_real_samples(8, 11, false);
    std::vector<ExtendedReal> scales;
    for (int k = 0; k <= 4; ++k)
      scales.push_back(realize(XiScalar(std::ldexp(1.0, -k)), s.front()));
    const auto rep = neighborhood_law_suite(s, scales, lam);
    CHECK(rep.entries.size() == 9);
    CHECK(rep.all_pass());
  }
  {
    auto s = vector_samples(2, 8, 11);
    std::vector<VectorElement> scales;
    for (int k = 0; k <= 4; ++k)
      scales.push_back(scale(std::ldexp(1.0, -k), ones(2)));
    CHECK(neighborhood_law_suite(s, scales, lam).all_pass());
  }
}

TEST_CASE("closure over a finite scale ladder") {
  const auto ladder = xi_ladder(ExtendedReal(0.0), 20);
  CHECK(ladder.size() == 21);
  // closure(a) for the upper system is the down-set of a, up to the floor
  // of the ladder (2^-20): strictly larger b is rejected, smaller accepted.
  CHECK(closure_contains(ExtendedReal(1.0), ExtendedReal(1.0), ladder));
  CHECK(closure_contains(ExtendedReal(0.5), ExtendedReal(1.0), ladder));
  CHECK_FALSE(closure_contains(ExtendedReal(1.01), ExtendedReal(1.0), ladder));
  // Below the ladder resolution the semi-decision keeps the point.
  CHECK(closure_contains(ExtendedReal(1.0 + 1e-8), ExtendedReal(1.0), ladder));
  CHECK_THROWS_AS(closure_contains(ExtendedReal(0.0), ExtendedReal(0.0),
                                   std::vector<ExtendedReal>{}),
                  std::invalid_argument);
}

TEST_CASE("separation witnesses") {
  const auto ladder = xi_ladder(ExtendedReal(0.0), 20);
  CHECK_FALSE(separated_witness(ExtendedReal(1.0), ExtendedReal(1.0), ladder)
                  .has_value());
  const auto w = separated_witness(ExtendedReal(1.0), ExtendedReal(2.0), ladder);
  REQUIRE(w.has_value());
  // The witness certifies the failure of the two-sided relation.
  CHECK_FALSE(leq(ExtendedReal(2.0), add(ExtendedReal(1.0), *w)));
  // Distinct but closer than the ladder floor: no witness available.
  CHECK_FALSE(separated_witness(ExtendedReal(1.0), ExtendedReal(1.0 + 1e-8),
                                ladder)
                  .has_value());
}

TEST_CASE("lower_bound_rho finds the least compensating multiple") {
  const ExtendedReal v(1.0);
  CHECK(lower_bound_rho(ExtendedReal(3.0), v) == 0.0);
  CHECK(lower_bound_rho(ExtendedReal(0.0), v) == 0.0);
  CHECK(lower_bound_rho(ExtendedReal::infinity(), v) == 0.0);
  CHECK(lower_bound_rho(ExtendedReal(-5.0), v) == doctest::Approx(5.0).epsilon(1e-8));
  CHECK(lower_bound_rho(ExtendedReal(-0.75), ExtendedReal(0.25)) ==
        doctest::Approx(3.0).epsilon(1e-8));
  // Vector cone with the all-ones generator: rho = max deficit.
  CHECK(lower_bound_rho(VectorElement{{-2.0, -7.0}}, ones(2)) ==
        doctest::Approx(7.0).epsilon(1e-8));
}

TEST_CASE("boundedness and the scalar-limit crosscheck") {
  const auto ladder = xi_ladder(ExtendedReal(0.0), 10);
  {
    const auto r = boundedness_check(ExtendedReal(5.0), ladder);
    CHECK(r.lower);
    CHECK(r.upper);
    CHECK(r.bounded);
    CHECK(r.limit_zero);
    CHECK(r.consistent);
  }
  {
    const auto r = boundedness_check(ExtendedReal(-123.0), ladder);
    CHECK(r.bounded);
    CHECK(r.consistent);
  }
  {
    // +inf is unbounded above and (1/n)(+inf) never enters v(0)v.
    const auto r = boundedness_check(ExtendedReal::infinity(), ladder);
    CHECK(r.lower);
    CHECK_FALSE(r.upper);
    CHECK_FALSE(r.bounded);
    CHECK_FALSE(r.limit_zero);
    CHECK(r.consistent);
  }
  CHECK_THROWS_AS(boundedness_check(ExtendedReal(1.0),
                                    std::vector<ExtendedReal>{}),
                  std::invalid_argument);
}

TEST_CASE("gauge equals the max norm for the all-ones generator") {
  // Oracle: on R^d with w = (1,...,1), the symmetric w-ball is the unit
  // max-norm ball, so the gauge is the max norm.
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> u(-8.0, 8.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 1 + trial % 4;
    VectorElement a{std::vector<double>(static_cast<std::size_t>(d))};
    double norm = 0.0;
    for (auto& c : a.coords) {
      c = u(rng);
      norm = std::max(norm, std::abs(c));
    }
    const auto g = gauge(a, ones(static_cast<std::size_t>(d)));
    CHECK(std::abs(g.value - norm) <= 1e-9);
  }
}

TEST_CASE("gauge corner cases") {
  CHECK(gauge(VectorElement{{0.0, 0.0}}, ones(2)).value == 0.0);
  // Unreachable membership escalates to +inf.
  CHECK(std::isinf(gauge(ExtendedReal::infinity(), ExtendedReal(1.0)).value));
  CHECK_THROWS_AS(gauge(ExtendedReal(1.0), ExtendedReal(1.0), 0.0),
                  std::invalid_argument);
}

TEST_CASE("gauge is a sublinear functional on samples") {
  std::mt19937_64 rng(405);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  const auto w = ones(3);
  for (int trial = 0; trial < 50; ++trial) {
    VectorElement a{{u(rng), u(rng), u(rng)}};
    VectorElement b{{u(rng), u(rng), u(rng)}};
    const double qa = gauge(a, w).value;
    const double qb = gauge(b, w).value;
    CHECK(gauge(scale(2.5, a), w).value ==
          doctest::Approx(2.5 * qa).epsilon(1e-7));
    CHECK(gauge(add(a, b), w).value <= qa + qb + 1e-8);
  }
}
