#include "conelab/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "conelab/topology.hpp"

namespace conelab {

namespace {

constexpr int kIterCap = 40;

double feval(const ApproxQuadraticMap& f, const VectorElement& x,
             const char* where) {
  ExtendedReal v = f.eval(x);
  if (v.is_infinite())
    throw StabilizeError(std::string(where) +
                         ": f evaluates to +inf at " + describe(x));
  return v.value();
}

VectorElement zero_vec(int dim) {
  return VectorElement{std::vector<double>(static_cast<std::size_t>(dim), 0.0)};
}

}  // namespace

bool pair_admissible(const ApproxQuadraticMap& f, const VectorElement& x,
                     const VectorElement& y) {
  if (x.coords.size() != y.coords.size())
    return false;
  if (f.domain == DomainKind::full_space)
    return true;
  for (std::size_t i = 0; i < x.coords.size(); ++i)
    if (x.coords[i] - y.coords[i] < 0)
      return false;
  return true;
}

std::vector<SamplePair> default_pairs(const ApproxQuadraticMap& f,
                                      std::span<const VectorElement> samples,
                                      std::size_t max_pairs,
                                      std::uint64_t seed) {
  std::vector<SamplePair> pairs;
  const std::size_t n = samples.size();
  if (n == 0)
    return pairs;
  if (n * n <= max_pairs) {
    for (const auto& x : samples)
      for (const auto& y : samples)
        if (pair_admissible(f, x, y))
          pairs.emplace_back(x, y);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t k = 0; k < max_pairs; ++k) {
      const auto& x = samples[pick(rng)];
      const auto& y = samples[pick(rng)];
      if (pair_admissible(f, x, y))
        pairs.emplace_back(x, y);
    }
  }
  return pairs;
}

std::vector<VectorElement> sample_grid(int dimension, std::size_t n_random,
                                       std::uint64_t seed, double extent) {
  if (dimension < 1)
    throw std::invalid_argument("sample_grid: dimension must be >= 1");
  extent = std::min(extent, 1024.0);  // keeps 2^40 x finite
  std::vector<VectorElement> s;
  s.push_back(zero_vec(dimension));
  const double axis[] = {extent, -extent, extent / 2, -extent / 2};
  for (int d = 0; d < dimension; ++d)
    for (double a : axis) {
      VectorElement v = zero_vec(dimension);
      v.coords[static_cast<std::size_t>(d)] = a;
      s.push_back(std::move(v));
    }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-extent, extent);
  for (std::size_t k = 0; k < n_random; ++k) {
    VectorElement v = zero_vec(dimension);
    for (auto& c : v.coords)
      c = u(rng);
    s.push_back(std::move(v));
  }
  return s;
}

ResidualReport quad_residual(const ApproxQuadraticMap& f,
                             std::span<const SamplePair> pairs, double eps) {
  if (!(eps > 0))
    throw std::invalid_argument("quad_residual: eps must be positive");
  ResidualReport rep;
  // Boundary cases (residual exactly eps, e.g. x^2 + c at eps = 2c) must
  // not be rejected on the rounding of the midpoint evaluations, so the
  // membership scale carries a relative slack of a few ulps.
  const ExtendedReal v(eps * (1.0 + 1e-12));
  for (const auto& [x, y] : pairs) {
    if (!pair_admissible(f, x, y))
      throw StabilizeError("quad_residual: pair violates x-y ∈ K1: x=" +
                           describe(x) + " y=" + describe(y));
    const ExtendedReal left =
        add(scale(2.0, f.eval(scale(0.5, add(x, y)))),
            scale(2.0, f.eval(scale(0.5, sub(x, y)))));
    const ExtendedReal right = add(f.eval(x), f.eval(y));
    const bool member = in_symmetric(left, right, v);
    double res;
    if (left.is_infinite() && right.is_infinite())
      res = 0.0;  // both sides saturated; membership decides
    else if (left.is_infinite() || right.is_infinite())
      res = std::numeric_limits<double>::infinity();
    else
      res = std::abs(left.value() - right.value());
    if (res >= rep.max_residual) {
      rep.max_residual = res;
      rep.worst_x = x;
      rep.worst_y = y;
    }
    if (!member)
      rep.pass = false;
  }
  return rep;
}

double min_lambda(const ExtendedReal& f0, double eps) {
  if (!(eps > 0))
    throw std::invalid_argument("min_lambda: eps must be positive");
  if (f0.is_infinite())
    throw StabilizeError("min_lambda: f(0) unbounded (+inf)");
  // Closed form for the extended reals under ξ: the two conditions
  // f(0) + λε >= 0 and f(0) <= λε meet at λ = |f(0)| / ε.
  return std::abs(f0.value()) / eps;
}

double tail_bound(int m, double lambda, double eps) {
  if (m < 0 || lambda < 0 || !(eps > 0))
    throw std::invalid_argument("tail_bound: bad arguments");
  return (lambda + 1.0) / (3.0 * std::ldexp(1.0, 2 * m)) * eps;
}

ExtendedReal hyers_iterate(const ApproxQuadraticMap& f, const VectorElement& x,
                           int n) {
  if (n < 0 || n > kIterCap)
    throw std::invalid_argument("hyers_iterate: n out of range [0,40]");
  const VectorElement xn = scale(std::ldexp(1.0, n), x);
  for (double c : xn.coords)
    if (std::isinf(c))
      throw StabilizeError("hyers_iterate: 2^n x overflows");
  return scale(std::ldexp(1.0, -2 * n), f.eval(xn));
}

StabilizationResult stabilize(const ApproxQuadraticMap& f,
                              std::vector<VectorElement> samples, double eps,
                              double tol, int max_iter,
                              std::span<const SamplePair> validation_pairs) {
  if (samples.empty())
    throw std::invalid_argument("stabilize: no sample points");
  if (!(eps > 0) || !(tol > 0))
    throw std::invalid_argument("stabilize: eps and tol must be positive");
  if (max_iter < 0 || max_iter > kIterCap)
    throw std::invalid_argument("stabilize: max_iter out of range [0,40]");

  std::vector<SamplePair> own_pairs;
  if (validation_pairs.empty()) {
    own_pairs = default_pairs(f, samples);
    validation_pairs = own_pairs;
  }
  ResidualReport gate = quad_residual(f, validation_pairs, eps);
  if (!gate.pass)
    throw HypothesisError(
        "stabilize: approximate-quadratic hypothesis fails at scale eps; "
        "worst pair x=" + describe(gate.worst_x) +
            " y=" + describe(gate.worst_y) +
            " residual=" + std::to_string(gate.max_residual),
        gate);

  StabilizationResult r;
  const ExtendedReal f0 = f.eval(zero_vec(f.dimension));
  const double lambda = min_lambda(f0, eps);
  const double gamma = (lambda + 2.0) / 3.0;

  int m = -1;
  for (int k = 0; k <= max_iter; ++k)
    if (tail_bound(k, lambda, eps) <= tol) {
      m = k;
      break;
    }
  if (m < 0)
    throw StabilizeError(
        "stabilize: tail bound does not reach tol within max_iter");

  r.certificate = {eps, lambda, gamma, m, tail_bound(m, lambda, eps), true};

  // Iterate table: per sample, 4^-k f(2^k x) for k = 0..m.
  const std::size_t ns = samples.size();
  std::vector<std::vector<double>> it(ns);
  for (std::size_t s = 0; s < ns; ++s) {
    it[s].resize(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
      const ExtendedReal v = hyers_iterate(f, samples[s], k);
      if (v.is_infinite())
        throw StabilizeError("stabilize: +inf iterate at " +
                             describe(samples[s]));
      it[s][static_cast<std::size_t>(k)] = v.value();
    }
  }

  r.residual_log.assign(static_cast<std::size_t>(std::max(m, 0)), 0.0);
  r.tail_ratio_max = 0.0;
  for (int k = 0; k < m; ++k) {
    double dmax = 0.0;
    const double tb = tail_bound(k, lambda, eps);
    for (std::size_t s = 0; s < ns; ++s) {
      const double d = std::abs(it[s][static_cast<std::size_t>(k) + 1] -
                                it[s][static_cast<std::size_t>(k)]);
      dmax = std::max(dmax, d);
      r.tail_ratio_max = std::max(r.tail_ratio_max, d / tb);
    }
    r.residual_log[static_cast<std::size_t>(k)] = dmax;
  }

  // Least-squares slope of log d(k) vs k over positive entries.
  {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int cnt = 0;
    for (int k = 0; k < m; ++k) {
      const double d = r.residual_log[static_cast<std::size_t>(k)];
      if (d > 0) {
        const double y = std::log(d);
        sx += k;
        sy += y;
        sxx += double(k) * k;
        sxy += k * y;
        ++cnt;
      }
    }
    r.slope = (cnt >= 2 && cnt * sxx - sx * sx > 0)
                  ? (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx)
                  : -std::numeric_limits<double>::infinity();
  }

  r.max_gap = 0.0;
  r.sandwich_ok = true;
  const ExtendedReal gv(gamma * eps);
  r.q_values.reserve(ns);
  for (std::size_t s = 0; s < ns; ++s) {
    const double q = it[s][static_cast<std::size_t>(m)];
    r.q_values.emplace_back(q);
    const double fx = feval(f, samples[s], "stabilize");
    r.max_gap = std::max(r.max_gap, std::abs(q - fx));
    if (!in_symmetric(ExtendedReal(q), ExtendedReal(fx), gv))
      r.sandwich_ok = false;
  }
  r.samples = std::move(samples);
  return r;
}

QuadLawReport verify_quadratic_laws(
    const std::function<ExtendedReal(const VectorElement&)>& q,
    std::span<const VectorElement> samples, std::span<const SamplePair> pairs,
    double tol) {
  if (!(tol > 0))
    throw std::invalid_argument("verify_quadratic_laws: tol must be positive");
  QuadLawReport rep;
  auto val = [&](const VectorElement& x) {
    ExtendedReal v = q(x);
    if (v.is_infinite())
      throw StabilizeError("verify_quadratic_laws: +inf value at " +
                           describe(x));
    return v.value();
  };
  auto note = [&rep, tol](bool& flag, double viol, const std::string& w) {
    if (viol > rep.max_violation)
      rep.max_violation = viol;
    if (flag && viol > tol) {
      flag = false;
      rep.witness = w;
    }
  };

  if (!samples.empty()) {
    const VectorElement z = zero_like(samples.front());
    note(rep.zero_at_zero, std::abs(val(z)), "x=0");
  }
  for (const auto& x : samples) {
    const double qx = val(x);
    note(rep.halving, std::abs(4.0 * val(scale(0.5, x)) - qx),
         "x=" + describe(x));
    note(rep.doubling, std::abs(val(scale(2.0, x)) - 4.0 * qx),
         "x=" + describe(x));
  }
  for (const auto& [x, y] : pairs) {
    const double d = std::abs(val(add(x, y)) + val(sub(x, y)) -
                              2.0 * val(x) - 2.0 * val(y));
    note(rep.parallelogram, d, "x=" + describe(x) + " y=" + describe(y));
  }
  return rep;
}

UniquenessReport uniqueness_crosscheck(const ApproxQuadraticMap& f, double eps,
                                       std::span<const VectorElement> samples,
                                       double tol, int max_iter) {
  const ExtendedReal f0 = f.eval(zero_vec(f.dimension));
  const double lambda = min_lambda(f0, eps);
  int m = -1;
  for (int k = 0; k <= max_iter; ++k)
    if (tail_bound(k, lambda, eps) <= tol) {
      m = k;
      break;
    }
  if (m < 0)
    throw StabilizeError(
        "uniqueness_crosscheck: tail bound does not reach tol");
  const int n4 = (m + 1) / 2;  // base-4 step n sits at base-2 step 2n >= m

  UniquenessReport rep;
  rep.base2_steps = m;
  rep.base4_steps = n4;
  const double inv16n = std::ldexp(1.0, -4 * n4);
  const double four_n = std::ldexp(1.0, 2 * n4);
  for (const auto& x : samples) {
    const ExtendedReal a2 = hyers_iterate(f, x, m);
    if (a2.is_infinite())
      throw StabilizeError("uniqueness: +inf iterate");
    const double a = a2.value();
    const ExtendedReal b4 = f.eval(scale(four_n, x));
    if (b4.is_infinite())
      throw StabilizeError("uniqueness: +inf iterate (base-4)");
    const double b = inv16n * b4.value();
    rep.max_disagreement = std::max(rep.max_disagreement, std::abs(a - b));
  }
  rep.pass = rep.max_disagreement <= 2.0 * tol;
  return rep;
}

BanachReport banach_case_verify(const ApproxQuadraticMap& f, double eps,
                                double r,
                                std::span<const VectorElement> samples,
                                double tol, int mn_max, int max_iter) {
  if (!(r > 1))
    throw std::invalid_argument("banach_case_verify: r must exceed 1");
  if (!(eps > 0) || !(tol > 0))
    throw std::invalid_argument("banach_case_verify: bad eps/tol");

  auto gate_pairs = default_pairs(f, samples);
  ResidualReport gate = quad_residual(f, gate_pairs, eps);
  if (!gate.pass)
    throw HypothesisError("banach_case_verify: hypothesis fails at scale eps",
                          gate);

  const ExtendedReal f0e = f.eval(zero_vec(f.dimension));
  if (f0e.is_infinite())
    throw StabilizeError(
        "banach_case_verify: codomain lacks subtraction (+inf value)");
  const double f0 = f0e.value();

  BanachReport rep;

  // Telescoping inequality over iterate windows [m, n].
  rep.telescoping_worst_margin = -std::numeric_limits<double>::infinity();
  rep.telescoping_ok = true;
  constexpr double kTelescopeSlack = 1e-12;
  for (int m = 0; m <= mn_max; ++m)
    for (int n = m; n <= mn_max; ++n) {
      double s = 0.0;  // sum of 4^-(k+1) for k = m..n
      for (int k = m; k <= n; ++k)
        s += std::ldexp(1.0, -2 * (k + 1));
      for (const auto& x : samples) {
        const double hi = feval(f, scale(std::ldexp(1.0, n + 1), x),
                                "banach_case_verify") *
                          std::ldexp(1.0, -2 * (n + 1));
        const double lo = feval(f, scale(std::ldexp(1.0, m), x),
                                "banach_case_verify") *
                          std::ldexp(1.0, -2 * m);
        const double lhs = std::abs(hi - lo + s * f0);
        const double rhs = eps * s;
        rep.telescoping_worst_margin =
            std::max(rep.telescoping_worst_margin, lhs - rhs);
      }
    }
  rep.telescoping_ok = rep.telescoping_worst_margin <= kTelescopeSlack;

  // Final bound |Q(x) - f(x) + f(0)/3| <= eps/3 + tol, with Q from the
  // iterate whose tail bound is below tol.
  const double lambda = min_lambda(f0e, eps);
  int m_star = -1;
  for (int k = 0; k <= max_iter; ++k)
    if (tail_bound(k, lambda, eps) <= tol) {
      m_star = k;
      break;
    }
  if (m_star < 0)
    throw StabilizeError("banach_case_verify: tail bound does not reach tol");

  rep.final_max = 0.0;
  rep.membership_ok = true;
  const ExtendedReal rv(r * eps / 3.0);
  for (const auto& x : samples) {
    const double qx = hyers_iterate(f, x, m_star).value();
    const double fx = feval(f, x, "banach_case_verify");
    const double lhs = std::abs(qx - fx + f0 / 3.0);
    rep.final_max = std::max(rep.final_max, lhs);
    if (!in_symmetric(ExtendedReal(qx), ExtendedReal(fx - f0 / 3.0), rv))
      rep.membership_ok = false;
  }
  rep.final_ok = rep.final_max <= eps / 3.0 + tol;
  rep.pass = rep.telescoping_ok && rep.final_ok && rep.membership_ok;
  return rep;
}

}  // namespace conelab
