#include "conelab/lab.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <random>
#include <stdexcept>

namespace conelab {

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

QuadraticForm::QuadraticForm(int d, std::vector<double> entries)
    : dimension(d), matrix(std::move(entries)) {
  if (d < 1)
    throw std::invalid_argument("QuadraticForm: dimension must be >= 1");
  const std::size_t n = static_cast<std::size_t>(d);
  if (matrix.size() != n * n)
    throw std::invalid_argument("QuadraticForm: matrix size mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double s = 0.5 * (matrix[i * n + j] + matrix[j * n + i]);
      matrix[i * n + j] = matrix[j * n + i] = s;
    }
}

double QuadraticForm::evaluate(const VectorElement& x) const {
  const std::size_t n = static_cast<std::size_t>(dimension);
  if (x.coords.size() != n)
    throw std::invalid_argument("QuadraticForm: dimension mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      row += matrix[i * n + j] * x.coords[j];
    acc += x.coords[i] * row;
  }
  return acc;
}

QuadraticForm make_quadratic(int dimension, std::uint64_t seed) {
  if (dimension < 1)
    throw std::invalid_argument("make_quadratic: dimension must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const std::size_t n = static_cast<std::size_t>(dimension);
  std::vector<double> m(n * n);
  for (auto& e : m)
    e = u(rng);
  return QuadraticForm(dimension, std::move(m));
}

const char* noise_name(NoiseKind k) {
  switch (k) {
    case NoiseKind::none: return "none";
    case NoiseKind::constant_offset: return "constant_offset";
    case NoiseKind::sine: return "sine";
    case NoiseKind::seeded_hash: return "seeded_hash";
  }
  return "?";
}

NoiseModel NoiseModel::none() { return NoiseModel{}; }

NoiseModel NoiseModel::constant_offset(double c) {
  NoiseModel m;
  m.kind = NoiseKind::constant_offset;
  m.amplitude = std::abs(c);
  m.seed = std::bit_cast<std::uint64_t>(c);  // keeps the sign of c
  return m;
}

NoiseModel NoiseModel::sine(double amplitude, std::vector<double> frequency) {
  if (amplitude < 0)
    throw std::invalid_argument("NoiseModel::sine: negative amplitude");
  NoiseModel m;
  m.kind = NoiseKind::sine;
  m.amplitude = amplitude;
  m.frequency = std::move(frequency);
  return m;
}

NoiseModel NoiseModel::seeded_hash(double amplitude, std::uint64_t seed) {
  if (amplitude < 0)
    throw std::invalid_argument("NoiseModel::seeded_hash: negative amplitude");
  NoiseModel m;
  m.kind = NoiseKind::seeded_hash;
  m.amplitude = amplitude;
  m.seed = seed;
  return m;
}

double NoiseModel::operator()(const VectorElement& x) const {
  switch (kind) {
    case NoiseKind::none:
      return 0.0;
    case NoiseKind::constant_offset:
      return std::bit_cast<double>(seed);
    case NoiseKind::sine: {
      if (frequency.size() != x.coords.size())
        throw std::invalid_argument("NoiseModel: frequency dimension mismatch");
      double phase = 0.0;
      for (std::size_t i = 0; i < x.coords.size(); ++i)
        phase += frequency[i] * x.coords[i];
      return amplitude * std::sin(phase);
    }
    case NoiseKind::seeded_hash: {
      // Pure deterministic function of (point, seed), bounded by amplitude.
      std::uint64_t h = splitmix64(seed);
      for (double c : x.coords)
        h = splitmix64(h ^ std::bit_cast<std::uint64_t>(c));
      const double u = static_cast<double>(h >> 11) * 0x1.0p-53;
      return amplitude * (2.0 * u - 1.0);
    }
  }
  return 0.0;
}

ApproxQuadraticMap build_perturbed(const QuadraticForm& q0,
                                   const NoiseModel& noise, double eps) {
  if (!(eps > 0))
    throw std::invalid_argument("build_perturbed: eps must be positive");
  if (noise.amplitude > eps / 6.0)
    throw std::invalid_argument(
        "build_perturbed: noise amplitude " + fmt17(noise.amplitude) +
        " exceeds the eps/6 budget " + fmt17(eps / 6.0));
  ApproxQuadraticMap f;
  f.dimension = q0.dimension;
  f.eval = [q0, noise](const VectorElement& x) {
    return ExtendedReal(q0.evaluate(x) + noise(x));
  };
  // The budget makes the hypothesis hold everywhere; spot-check it anyway.
  auto grid = sample_grid(q0.dimension, 16, 7, 3.0);
  ResidualReport gate = quad_residual(f, default_pairs(f, grid, 256), eps);
  if (!gate.pass)
    throw HypothesisError("build_perturbed: residual check failed", gate);
  return f;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& cfg) {
  if (cfg.epsilons.empty() || cfg.dims.empty() || cfg.seeds.empty() ||
      cfg.noises.empty())
    throw std::invalid_argument("run_sweep: empty sweep axis");
  const double nan = std::numeric_limits<double>::quiet_NaN();

  std::vector<SweepRecord> out;
  for (double eps : cfg.epsilons)
    for (int d : cfg.dims)
      for (std::uint64_t seed : cfg.seeds)
        for (NoiseKind kind : cfg.noises) {
          SweepRecord rec;
          rec.epsilon = eps;
          rec.dimension = d;
          rec.seed = seed;
          rec.noise = noise_name(kind);
          try {
            const double amp = eps / 6.0;
            NoiseModel noise;
            switch (kind) {
              case NoiseKind::none:
                noise = NoiseModel::none();
                break;
              case NoiseKind::constant_offset:
                noise = NoiseModel::constant_offset(amp);
                break;
              case NoiseKind::sine: {
                // Seeded frequencies in [0.5, 3] per axis.
                std::mt19937_64 rng(splitmix64(seed) ^ 0x5157eefULL);
                std::uniform_real_distribution<double> u(0.5, 3.0);
                std::vector<double> freq(static_cast<std::size_t>(d));
                for (auto& w : freq)
                  w = u(rng);
                noise = NoiseModel::sine(amp, std::move(freq));
                break;
              }
              case NoiseKind::seeded_hash:
                noise = NoiseModel::seeded_hash(amp, splitmix64(seed + 1));
                break;
            }
            QuadraticForm q0 = make_quadratic(d, seed);
            ApproxQuadraticMap f = build_perturbed(q0, noise, eps);
            auto samples =
                sample_grid(d, cfg.n_samples, splitmix64(seed) ^ 0xabcdULL);
            StabilizationResult res =
                stabilize(f, samples, eps, cfg.tol, cfg.max_iter);

            const int m = res.certificate.iterations;
            auto q = [&f, m](const VectorElement& x) {
              return hyers_iterate(f, x, m);
            };
            auto pairs = default_pairs(f, res.samples, 256);
            // The finite iterate satisfies the laws only up to its tail.
            QuadLawReport laws = verify_quadratic_laws(
                q, res.samples, pairs, 8.0 * cfg.tol);

            rec.lambda = res.certificate.lambda;
            rec.gamma = res.certificate.gamma;
            rec.iterations = m;
            rec.max_gap = res.max_gap;
            rec.bound = rec.gamma * eps;
            rec.slope = res.slope;
            rec.pass = (rec.max_gap <= rec.bound + cfg.tol) && laws.all_pass();
          } catch (const std::exception&) {
            rec.lambda = rec.gamma = rec.max_gap = rec.bound = rec.slope = nan;
            rec.iterations = -1;
            rec.pass = false;
          }
          out.push_back(std::move(rec));
        }

  std::sort(out.begin(), out.end(), [](const SweepRecord& a,
                                       const SweepRecord& b) {
    if (a.epsilon != b.epsilon) return a.epsilon < b.epsilon;
    if (a.dimension != b.dimension) return a.dimension < b.dimension;
    if (a.seed != b.seed) return a.seed < b.seed;
    return a.noise < b.noise;
  });
  return out;
}

std::string format_report(std::span<const SweepRecord> records,
                          const std::string& format) {
  std::string out;
  if (format == "csv") {
    out += "epsilon,dimension,seed,noise,lambda,gamma,iterations,max_gap,"
           "bound,slope,pass\n";
    for (const auto& r : records) {
      out += fmt17(r.epsilon) + "," + std::to_string(r.dimension) + "," +
             std::to_string(r.seed) + "," + r.noise + "," + fmt17(r.lambda) +
             "," + fmt17(r.gamma) + "," + std::to_string(r.iterations) + "," +
             fmt17(r.max_gap) + "," + fmt17(r.bound) + "," + fmt17(r.slope) +
             "," + (r.pass ? "true" : "false") + "\n";
    }
  } else if (format == "jsonl") {
    auto num = [](double v) {
      return std::isfinite(v) ? fmt17(v) : std::string("null");
    };
    for (const auto& r : records) {
      out += "{\"epsilon\":" + num(r.epsilon) +
             ",\"dimension\":" + std::to_string(r.dimension) +
             ",\"seed\":" + std::to_string(r.seed) + ",\"noise\":\"" +
             r.noise + "\",\"lambda\":" + num(r.lambda) +
             ",\"gamma\":" + num(r.gamma) +
             ",\"iterations\":" + std::to_string(r.iterations) +
             ",\"max_gap\":" + num(r.max_gap) + ",\"bound\":" + num(r.bound) +
             ",\"slope\":" + num(r.slope) +
             ",\"pass\":" + (r.pass ? "true" : "false") + "}\n";
    }
  } else {
    throw std::invalid_argument("format_report: unknown format '" + format +
                                "' (expected csv or jsonl)");
  }
  return out;
}

void write_report(std::span<const SweepRecord> records, const std::string& path,
                  const std::string& format) {
  const std::string body = format_report(records, format);
  std::ofstream os(path, std::ios::binary);
  if (!os)
    throw std::runtime_error("write_report: cannot open " + path);
  os << body;
  if (!os)
    throw std::runtime_error("write_report: write failed for " + path);
}

}  // namespace conelab
