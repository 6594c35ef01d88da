// Executable law checks for the cone axioms and the order laws, plus the
// natural preorder decision procedures and deterministic sample generators.
//
// Samples are drawn from dyadic grids (k/8 for elements, k/4 for scalars)
// so that every axiom instance is exactly representable in doubles and the
// checks can use exact comparison.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "conelab/cones.hpp"
#include "conelab/extended_real.hpp"

namespace conelab {

struct LawEntry {
  std::string name;
  bool pass = true;
  std::string counterexample;  // empty when pass
};

struct AxiomReport {
  std::vector<LawEntry> entries;  // exactly the eight cone axioms

  bool all_pass() const {
    for (const auto& e : entries)
      if (!e.pass)
        return false;
    return true;
  }
  std::vector<std::string> failing_names() const {
    std::vector<std::string> r;
    for (const auto& e : entries)
      if (!e.pass)
        r.push_back(e.name);
    return r;
  }
};

struct OrderLawReport {
  std::vector<LawEntry> entries;

  bool all_pass() const {
    for (const auto& e : entries)
      if (!e.pass)
        return false;
    return true;
  }
};

// ---------------------------------------------------------------------------
// Natural preorder: a <= b iff a + c = b for some cone element c. For the
// extended reals the witness is taken from the non-negative subcone, which
// makes the relation coincide with the usual order (the full cone's literal
// relation would be coarser because negative witnesses exist).

enum class Tri { yes, no, undecidable };

inline Tri leq_natural(const ExtendedReal& a, const ExtendedReal& b) {
  if (b.is_infinite())
    return Tri::yes;  // c = +inf
  if (a.is_infinite())
    return Tri::no;  // +inf + c = +inf != finite b
  return a.value() <= b.value() ? Tri::yes : Tri::no;
}

inline Tri leq_natural(const VectorElement& a, const VectorElement& b) {
  check_same_dim(a, b, "leq_natural");
  return Tri::yes;  // c = b - a always exists in the vector cone
}

inline Tri leq_natural(const FunctionElement& a, const FunctionElement& b) {
  check_same_domain(a, b, "leq_natural");
  for (std::size_t i = 0; i < a.values.size(); ++i)
    if (leq_natural(a.values[i], b.values[i]) == Tri::no)
      return Tri::no;
  return Tri::yes;
}

inline Tri leq_natural(const TwoPointPathology& a, const TwoPointPathology& b) {
  return leq(a, b) ? Tri::yes : Tri::no;
}

// ---------------------------------------------------------------------------
// Sample generators. Deterministic grid plus a seeded random batch; all
// values dyadic so arithmetic in the law checks stays exact.

std::vector<double> dyadic_scalars(std::size_t n_random, std::uint64_t seed);

std::vector<ExtendedReal> extended_real_samples(std::size_t n_random,
                                                std::uint64_t seed,
                                                bool nonneg);

std::vector<VectorElement> vector_samples(std::size_t dim, std::size_t n_random,
                                          std::uint64_t seed);

std::vector<FunctionElement> function_samples(
    const std::vector<std::string>& keys, std::size_t n_random,
    std::uint64_t seed);

std::vector<TwoPointPathology> two_point_samples();

// ---------------------------------------------------------------------------
// Axiom suite: the three addition laws and five scalar laws.

template <class E>
AxiomReport check_cone_axioms(const std::vector<E>& samples,
                              const std::vector<double>& scalars,
                              std::uint64_t seed = 2026,
                              std::size_t n_random_tuples = 256) {
  AxiomReport rep;
  auto record = [&rep](const std::string& name,
                       const std::optional<std::string>& cex) {
    rep.entries.push_back({name, !cex.has_value(), cex.value_or("")});
  };

  const E zero = zero_like(samples.front());
  const std::size_t n = samples.size();
  // Exhaustive triple loops stay tractable on a prefix; a seeded random
  // batch covers the rest of the sample set.
  const std::size_t t = std::min<std::size_t>(n, 12);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);

  auto triples = [&](auto&& body) {
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < t; ++j)
        for (std::size_t k = 0; k < t; ++k)
          if (!body(samples[i], samples[j], samples[k]))
            return;
    for (std::size_t r = 0; r < n_random_tuples; ++r)
      if (!body(samples[pick(rng)], samples[pick(rng)], samples[pick(rng)]))
        return;
  };

  // (a+b)+c = a+(b+c)
  {
    std::optional<std::string> cex;
    triples([&](const E& a, const E& b, const E& c) {
      if (!(add(add(a, b), c) == add(a, add(b, c)))) {
        cex = "a=" + describe(a) + " b=" + describe(b) + " c=" + describe(c);
        return false;
      }
      return true;
    });
    record("(a+b)+c=a+(b+c)", cex);
  }
  // a+b = b+a
  {
    std::optional<std::string> cex;
    for (std::size_t i = 0; i < n && !cex; ++i)
      for (std::size_t j = 0; j < n && !cex; ++j)
        if (!(add(samples[i], samples[j]) == add(samples[j], samples[i])))
          cex = "a=" + describe(samples[i]) + " b=" + describe(samples[j]);
    record("a+b=b+a", cex);
  }
  // a+0 = a
  {
    std::optional<std::string> cex;
    for (const E& a : samples)
      if (!(add(a, zero) == a)) {
        cex = "a=" + describe(a);
        break;
      }
    record("a+0=a", cex);
  }
  // λ(μa) = (λμ)a
  {
    std::optional<std::string> cex;
    for (double l : scalars)
      for (double m : scalars)
        for (const E& a : samples)
          if (!cex && !(scale(l, scale(m, a)) == scale(l * m, a)))
            cex = "λ=" + std::to_string(l) + " μ=" + std::to_string(m) +
                  " a=" + describe(a);
    record("λ(μa)=(λμ)a", cex);
  }
  // (λ+μ)a = λa+μa
  {
    std::optional<std::string> cex;
    for (double l : scalars)
      for (double m : scalars)
        for (const E& a : samples)
          if (!cex && !(scale(l + m, a) == add(scale(l, a), scale(m, a))))
            cex = "λ=" + std::to_string(l) + " μ=" + std::to_string(m) +
                  " a=" + describe(a);
    record("(λ+μ)a=λa+μa", cex);
  }
  // λ(a+b) = λa+λb
  {
    std::optional<std::string> cex;
    for (double l : scalars)
      for (std::size_t i = 0; i < n && !cex; ++i)
        for (std::size_t j = 0; j < n && !cex; ++j)
          if (!(scale(l, add(samples[i], samples[j])) ==
                add(scale(l, samples[i]), scale(l, samples[j]))))
            cex = "λ=" + std::to_string(l) + " a=" + describe(samples[i]) +
                  " b=" + describe(samples[j]);
    record("λ(a+b)=λa+λb", cex);
  }
  // 1a = a
  {
    std::optional<std::string> cex;
    for (const E& a : samples)
      if (!(scale(1.0, a) == a)) {
        cex = "a=" + describe(a);
        break;
      }
    record("1a=a", cex);
  }
  // 0a = 0
  {
    std::optional<std::string> cex;
    for (const E& a : samples)
      if (!(scale(0.0, a) == zero)) {
        cex = "a=" + describe(a);
        break;
      }
    record("0a=0", cex);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Order laws: reflexivity, transitivity, compatibility with add/scale, and
// the weak cancellation of the preordered-cone proposition.

template <class E>
OrderLawReport check_order_laws(const std::vector<E>& samples,
                                const std::vector<double>& scalars,
                                std::uint64_t seed = 2026,
                                std::size_t n_random_tuples = 256) {
  OrderLawReport rep;
  auto record = [&rep](const std::string& name,
                       const std::optional<std::string>& cex) {
    rep.entries.push_back({name, !cex.has_value(), cex.value_or("")});
  };

  const std::size_t n = samples.size();
  const std::size_t t = std::min<std::size_t>(n, 12);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);

  auto triples = [&](auto&& body) {
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < t; ++j)
        for (std::size_t k = 0; k < t; ++k)
          if (!body(samples[i], samples[j], samples[k]))
            return;
    for (std::size_t r = 0; r < n_random_tuples; ++r)
      if (!body(samples[pick(rng)], samples[pick(rng)], samples[pick(rng)]))
        return;
  };

  // reflexivity
  {
    std::optional<std::string> cex;
    for (const E& a : samples)
      if (!leq(a, a)) {
        cex = "a=" + describe(a);
        break;
      }
    record("a<=a", cex);
  }
  // transitivity
  {
    std::optional<std::string> cex;
    triples([&](const E& a, const E& b, const E& c) {
      if (leq(a, b) && leq(b, c) && !leq(a, c)) {
        cex = "a=" + describe(a) + " b=" + describe(b) + " c=" + describe(c);
        return false;
      }
      return true;
    });
    record("a<=b & b<=c => a<=c", cex);
  }
  // a<=b => a+c<=b+c
  {
    std::optional<std::string> cex;
    triples([&](const E& a, const E& b, const E& c) {
      if (leq(a, b) && !leq(add(a, c), add(b, c))) {
        cex = "a=" + describe(a) + " b=" + describe(b) + " c=" + describe(c);
        return false;
      }
      return true;
    });
    record("a<=b => a+c<=b+c", cex);
  }
  // a<=b => λa<=λb
  {
    std::optional<std::string> cex;
    for (double l : scalars)
      for (std::size_t i = 0; i < n && !cex; ++i)
        for (std::size_t j = 0; j < n && !cex; ++j)
          if (leq(samples[i], samples[j]) &&
              !leq(scale(l, samples[i]), scale(l, samples[j])))
            cex = "λ=" + std::to_string(l) + " a=" + describe(samples[i]) +
                  " b=" + describe(samples[j]);
    record("a<=b => λa<=λb", cex);
  }
  // weak cancellation: a+c<=b+c => a+εc<=b+εc for ε>0
  {
    static const double kEps[] = {0.25, 0.5, 2.0};
    std::optional<std::string> cex;
    triples([&](const E& a, const E& b, const E& c) {
      if (!leq(add(a, c), add(b, c)))
        return true;  // premise fails, vacuously fine
      for (double e : kEps)
        if (!leq(add(a, scale(e, c)), add(b, scale(e, c)))) {
          cex = "a=" + describe(a) + " b=" + describe(b) +
                " c=" + describe(c) + " ε=" + std::to_string(e);
          return false;
        }
      return true;
    });
    record("a+c<=b+c => a+εc<=b+εc", cex);
  }
  return rep;
}

}  // namespace conelab
