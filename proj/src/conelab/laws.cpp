#include "conelab/laws.hpp"

namespace conelab {

std::vector<double> dyadic_scalars(std::size_t n_random, std::uint64_t seed) {
  std::vector<double> s = {0.0, 0.25, 0.5, 1.0, 2.0, 4.0};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> k(0, 16);
  for (std::size_t i = 0; i < n_random; ++i)
    s.push_back(k(rng) / 4.0);
  return s;
}

std::vector<ExtendedReal> extended_real_samples(std::size_t n_random,
                                                std::uint64_t seed,
                                                bool nonneg) {
  std::vector<ExtendedReal> s = {ExtendedReal(0.0), ExtendedReal(1.0),
                                 ExtendedReal(2.5), ExtendedReal(0.125),
                                 ExtendedReal::infinity()};
  if (!nonneg) {
    s.push_back(ExtendedReal(-4.0));
    s.push_back(ExtendedReal(-0.5));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> k(nonneg ? 0 : -64, 64);
  std::uniform_int_distribution<int> inf_roll(0, 15);
  for (std::size_t i = 0; i < n_random; ++i) {
    if (inf_roll(rng) == 0)
      s.push_back(ExtendedReal::infinity());
    else
      s.push_back(ExtendedReal(k(rng) / 8.0));
  }
  return s;
}

std::vector<VectorElement> vector_samples(std::size_t dim, std::size_t n_random,
                                          std::uint64_t seed) {
  std::vector<VectorElement> s;
  s.push_back(VectorElement{std::vector<double>(dim, 0.0)});
  s.push_back(VectorElement{std::vector<double>(dim, 1.0)});
  s.push_back(VectorElement{std::vector<double>(dim, -2.0)});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> k(-64, 64);
  for (std::size_t i = 0; i < n_random; ++i) {
    VectorElement v{std::vector<double>(dim)};
    for (auto& c : v.coords)
      c = k(rng) / 8.0;
    s.push_back(std::move(v));
  }
  return s;
}

std::vector<FunctionElement> function_samples(
    const std::vector<std::string>& keys, std::size_t n_random,
    std::uint64_t seed) {
  std::vector<FunctionElement> s;
  FunctionElement zero{keys, std::vector<ExtendedReal>(keys.size(), 0.0)};
  s.push_back(zero);
  FunctionElement one_inf = zero;
  one_inf.values.front() = ExtendedReal::infinity();
  s.push_back(one_inf);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> k(-64, 64);
  std::uniform_int_distribution<int> inf_roll(0, 15);
  for (std::size_t i = 0; i < n_random; ++i) {
    FunctionElement f = zero;
    for (auto& v : f.values)
      v = (inf_roll(rng) == 0) ? ExtendedReal::infinity()
                               : ExtendedReal(k(rng) / 8.0);
    s.push_back(std::move(f));
  }
  return s;
}

std::vector<TwoPointPathology> two_point_samples() {
  return {TwoPointPathology{0}, TwoPointPathology{1}};
}

}  // namespace conelab
