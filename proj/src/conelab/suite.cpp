#include "conelab/suite.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace conelab {

namespace {

const std::vector<double> kLambdas = {0.5, 1.0, 2.0};

template <class E>
std::vector<E> xi_scales_for(const E& like) {
  std::vector<E> s;
  for (int k = 0; k <= 6; ++k)
    s.push_back(realize(XiScalar(std::ldexp(1.0, -k)), like));
  return s;
}

template <class E>
ConeLawsOutcome run_generic(std::string name, std::vector<E> samples,
                            std::vector<E> scales, std::uint64_t seed,
                            std::size_t nbhd_cap = 8) {
  ConeLawsOutcome out;
  out.cone = std::move(name);
  const auto scalars = dyadic_scalars(8, seed + 1);
  out.axioms = check_cone_axioms(samples, scalars, seed);
  out.order = check_order_laws(samples, scalars, seed);
  if (!scales.empty()) {
    // The quartic convexity loop wants a small sample set.
    std::vector<E> small(samples.begin(),
                         samples.begin() +
                             std::min(nbhd_cap, samples.size()));
    out.neighborhoods = neighborhood_law_suite(small, scales, kLambdas);
  }
  out.pass = out.axioms.all_pass() && out.order.all_pass() &&
             out.neighborhoods.all_pass();
  return out;
}

}  // namespace

ConeLawsOutcome run_cone_laws(const std::string& cone, std::uint64_t seed) {
  if (cone == "extended-real") {
    auto s = extended_real_samples(16, seed, false);
    return run_generic("extended-real", s, xi_scales_for(s.front()), seed);
  }
  if (cone == "nonneg-extended-real") {
    auto s = extended_real_samples(16, seed, true);
    return run_generic("nonneg-extended-real", s, xi_scales_for(s.front()),
                       seed);
  }
  if (cone.rfind("vector-", 0) == 0) {
    const int d = std::atoi(cone.c_str() + 7);
    if (d < 1 || d > 8)
      throw std::invalid_argument("run_cone_laws: vector dimension 1..8");
    auto s = vector_samples(static_cast<std::size_t>(d), 16, seed);
    std::vector<VectorElement> scales;
    const VectorElement w = ones(static_cast<std::size_t>(d));
    for (int k = 0; k <= 6; ++k)
      scales.push_back(
          realize(UcMultiple<VectorElement>(std::ldexp(1.0, -k), w), w));
    return run_generic(cone, s, scales, seed);
  }
  if (cone == "function") {
    auto s = function_samples({"p", "q", "r"}, 16, seed);
    return run_generic("function", s, xi_scales_for(s.front()), seed);
  }
  if (cone == "two-point-pathology") {
    return run_generic<TwoPointPathology>("two-point-pathology",
                                          two_point_samples(), {}, seed);
  }
  throw std::invalid_argument("run_cone_laws: unknown cone '" + cone + "'");
}

std::vector<std::string> known_cones() {
  return {"extended-real", "nonneg-extended-real", "vector-1", "vector-2",
          "vector-3",      "vector-4",             "function", "two-point-pathology"};
}

std::string render_laws(const ConeLawsOutcome& o) {
  std::ostringstream os;
  os << "cone " << o.cone << ": " << (o.pass ? "PASS" : "FAIL") << "\n";
  auto dump = [&os](const char* group, const std::vector<LawEntry>& entries) {
    for (const auto& e : entries) {
      os << "  " << group << " " << e.name << ": "
         << (e.pass ? "pass" : "FAIL");
      if (!e.pass)
        os << "  [" << e.counterexample << "]";
      os << "\n";
    }
  };
  dump("axiom", o.axioms.entries);
  dump("order", o.order.entries);
  dump("nbhd", o.neighborhoods.entries);
  return os.str();
}

}  // namespace conelab
