// Hyers-Ulam stabilization of approximately quadratic maps: hypothesis
// check, the iteration Q(x) = lim 4^-n f(2^n x), certified error sandwich
// with gamma = (lambda+2)/3, quadraticity/uniqueness verification, and the
// Banach-case (normed uc-cone) bounds.
//
// Domain elements are vectors in R^d (or its non-negative orthant);
// codomain values live in the extended reals with the scale system ξ.

#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "conelab/cones.hpp"
#include "conelab/extended_real.hpp"

namespace conelab {

enum class DomainKind { full_space, nonneg_orthant };

struct ApproxQuadraticMap {
  int dimension = 1;
  DomainKind domain = DomainKind::full_space;
  std::function<ExtendedReal(const VectorElement&)> eval;
};

using SamplePair = std::pair<VectorElement, VectorElement>;

struct StabilizeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResidualReport {
  double max_residual = 0.0;  // |L - R| over finite pairs, +inf otherwise
  VectorElement worst_x, worst_y;
  bool pass = true;  // all pairs inside v(f(x)+f(y))v at scale eps
};

// Thrown when the approximate-quadratic hypothesis fails its gate.
struct HypothesisError : StabilizeError {
  ResidualReport report;
  HypothesisError(const std::string& msg, ResidualReport rep)
      : StabilizeError(msg), report(std::move(rep)) {}
};

struct HyersCertificate {
  double epsilon = 0.0;
  double lambda = 0.0;
  double gamma = 0.0;  // (lambda + 2) / 3, exactly
  int iterations = 0;
  double tail = 0.0;  // tail_bound(iterations, lambda, epsilon)
  bool converged = false;
};

struct StabilizationResult {
  HyersCertificate certificate;
  std::vector<VectorElement> samples;
  std::vector<ExtendedReal> q_values;  // parallel to samples
  std::vector<double> residual_log;    // per-step max successive difference
  double max_gap = 0.0;                // sup over samples of |Q(x) - f(x)|
  bool sandwich_ok = false;            // Q(x) ∈ (γv)(f(x))(γv) everywhere
  double slope = 0.0;                  // LS slope of log residual_log
  double tail_ratio_max = 0.0;         // per-point diff / a-priori tail bound
};

struct QuadLawReport {
  bool zero_at_zero = true;
  bool halving = true;   // 4Q(x/2) = Q(x)
  bool doubling = true;  // Q(2x) = 4Q(x)
  bool parallelogram = true;
  double max_violation = 0.0;
  std::string witness;

  bool all_pass() const {
    return zero_at_zero && halving && doubling && parallelogram;
  }
};

struct UniquenessReport {
  double max_disagreement = 0.0;
  int base2_steps = 0;
  int base4_steps = 0;
  bool pass = false;
};

struct BanachReport {
  bool telescoping_ok = false;
  double telescoping_worst_margin = 0.0;  // max of lhs - rhs over (m,n,x)
  bool final_ok = false;                  // |Q - f + f0/3| <= eps/3 + tol
  double final_max = 0.0;
  bool membership_ok = false;  // symmetric membership at radius r*eps/3
  bool pass = false;
};

// x - y must stay in the domain cone.
bool pair_admissible(const ApproxQuadraticMap& f, const VectorElement& x,
                     const VectorElement& y);

// Deterministic grid plus seeded random batch of admissible pairs drawn
// from the sample points.
std::vector<SamplePair> default_pairs(const ApproxQuadraticMap& f,
                                      std::span<const VectorElement> samples,
                                      std::size_t max_pairs = 1024,
                                      std::uint64_t seed = 2026);

// Sample grids for experiments; coordinates clamped to |x| <= 2^10 so that
// 2^n x stays in double range for n <= 40.
std::vector<VectorElement> sample_grid(int dimension, std::size_t n_random,
                                       std::uint64_t seed,
                                       double extent = 3.0);

// Checks 2f((x+y)/2) + 2f((x-y)/2) ∈ v(f(x)+f(y))v over the given pairs.
ResidualReport quad_residual(const ApproxQuadraticMap& f,
                             std::span<const SamplePair> pairs, double eps);

// Least lambda >= 0 with f(0) + lambda*v >= 0 and f(0) <= lambda*v; for the
// extended reals with scale eps this is |f(0)|/eps in closed form.
// Throws StabilizeError when f(0) = +inf.
double min_lambda(const ExtendedReal& f0, double eps);

// (lambda+1) / (3·4^m) · eps, the a-priori distance of iterate m from Q.
double tail_bound(int m, double lambda, double eps);

// 4^-n f(2^n x). n is capped at 40 to keep 2^n x representable.
ExtendedReal hyers_iterate(const ApproxQuadraticMap& f, const VectorElement& x,
                           int n);

StabilizationResult stabilize(const ApproxQuadraticMap& f,
                              std::vector<VectorElement> samples, double eps,
                              double tol = 1e-9, int max_iter = 40,
                              std::span<const SamplePair> validation_pairs = {});

// Q(0)=0, 4Q(x/2)=Q(x), Q(2x)=4Q(x), and the parallelogram law, within tol.
QuadLawReport verify_quadratic_laws(
    const std::function<ExtendedReal(const VectorElement&)>& q,
    std::span<const VectorElement> samples, std::span<const SamplePair> pairs,
    double tol);

// Base-2 schedule 4^-n f(2^n x) against the base-4 subsequence 16^-n f(4^n x);
// both approximate the same limit, so they must agree within 2*tol.
UniquenessReport uniqueness_crosscheck(const ApproxQuadraticMap& f, double eps,
                                       std::span<const VectorElement> samples,
                                       double tol = 1e-9, int max_iter = 40);

// Telescoping bound and the eps/3 corollary for real-valued maps (the
// codomain acting as a normed uc-cone with generator 1). Requires r > 1 and
// finite values everywhere.
BanachReport banach_case_verify(const ApproxQuadraticMap& f, double eps,
                                double r,
                                std::span<const VectorElement> samples,
                                double tol = 1e-9, int mn_max = 8,
                                int max_iter = 40);

}  // namespace conelab
