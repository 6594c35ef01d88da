// Perturbation experiments: seeded ground-truth quadratic forms, bounded
// noise models with the eps/6 budget (the residual of the functional
// equation expands to at most 6·sup|δ|), deterministic parameter sweeps,
// and CSV/JSONL reports.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "conelab/stability.hpp"

namespace conelab {

struct QuadraticForm {
  int dimension = 1;
  std::vector<double> matrix;  // row-major symmetric d x d

  // Symmetrizes on construction so A = A^T holds exactly.
  QuadraticForm(int d, std::vector<double> entries);

  double evaluate(const VectorElement& x) const;  // x^T A x
};

QuadraticForm make_quadratic(int dimension, std::uint64_t seed);

enum class NoiseKind { none, constant_offset, sine, seeded_hash };

const char* noise_name(NoiseKind k);

struct NoiseModel {
  NoiseKind kind = NoiseKind::none;
  double amplitude = 0.0;  // sup-norm bound of the noise, by construction
  std::vector<double> frequency;  // sine only
  std::uint64_t seed = 0;         // seeded_hash only

  static NoiseModel none();
  static NoiseModel constant_offset(double c);
  static NoiseModel sine(double amplitude, std::vector<double> frequency);
  static NoiseModel seeded_hash(double amplitude, std::uint64_t seed);

  double operator()(const VectorElement& x) const;
};

// f(x) = Q0(x) + noise(x). Enforces amplitude <= eps/6 and asserts the
// approximate-quadratic hypothesis at scale eps on a validation grid.
ApproxQuadraticMap build_perturbed(const QuadraticForm& q0,
                                   const NoiseModel& noise, double eps);

struct SweepConfig {
  std::vector<double> epsilons;
  std::vector<int> dims;
  std::vector<std::uint64_t> seeds;
  std::vector<NoiseKind> noises;
  double tol = 1e-9;
  int max_iter = 40;
  std::size_t n_samples = 48;
};

struct SweepRecord {
  double epsilon = 0.0;
  int dimension = 0;
  std::uint64_t seed = 0;
  std::string noise;
  double lambda = 0.0;
  double gamma = 0.0;
  int iterations = 0;
  double max_gap = 0.0;  // sup over samples of |Q(x) - f(x)|
  double bound = 0.0;    // gamma * epsilon
  double slope = 0.0;    // log successive-difference fit
  bool pass = false;
};

// One record per (epsilon, dim, seed, noise) cell, sorted by that key.
// Cell failures become pass=false rows with NaN metrics; the sweep itself
// never aborts.
std::vector<SweepRecord> run_sweep(const SweepConfig& cfg);

std::string format_report(std::span<const SweepRecord> records,
                          const std::string& format);  // "csv" or "jsonl"

void write_report(std::span<const SweepRecord> records, const std::string& path,
                  const std::string& format);

}  // namespace conelab
