// Abstract 0-neighborhood systems over the concrete cones: upper/lower/
// symmetric membership, the six neighborhood identities, closure and
// separation witnesses, boundedness criteria, and the uc-cone gauge.
//
// The infinite system V is approximated by finite scale ladders throughout;
// closure_contains and boundedness_check are semi-decisions over the
// supplied ladder.

#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "conelab/cones.hpp"
#include "conelab/extended_real.hpp"
#include "conelab/laws.hpp"

namespace conelab {

// A scale from the system ξ = {ε > 0} over the extended reals (realized as
// the scalar itself, or pointwise for function cones).
struct XiScalar {
  double eps;

  explicit XiScalar(double e) : eps(e) {
    if (!(e > 0) || std::isinf(e))
      throw std::invalid_argument("XiScalar: eps must be positive and finite");
  }
};

// A positive multiple of a uc-cone generator w with 0 < w.
template <class E>
struct UcMultiple {
  double lambda;
  E generator;

  UcMultiple(double l, E w) : lambda(l), generator(std::move(w)) {
    if (!(l > 0))
      throw std::invalid_argument("UcMultiple: lambda must be positive");
    const E z = zero_like(generator);
    if (!leq(z, generator) || generator == z)
      throw std::invalid_argument("UcMultiple: generator must satisfy 0 < w");
  }
};

inline ExtendedReal realize(const XiScalar& s, const ExtendedReal&) {
  return ExtendedReal(s.eps);
}
inline FunctionElement realize(const XiScalar& s, const FunctionElement& like) {
  FunctionElement r = like;
  for (auto& v : r.values)
    v = ExtendedReal(s.eps);
  return r;
}
inline VectorElement realize(const XiScalar&, const VectorElement&) {
  throw std::invalid_argument(
      "XiScalar is not realizable in a vector cone; use UcMultiple");
}
template <class E>
E realize(const UcMultiple<E>& s, const E&) {
  return scale(s.lambda, s.generator);
}

// ---------------------------------------------------------------------------
// Membership tests. v(a) = {b : b <= a+v}, (a)v = {b : a <= b+v},
// v(a)v = v(a) ∩ (a)v.

template <class E>
bool in_upper(const E& b, const E& a, const E& v) {
  return leq(b, add(a, v));
}
template <class E>
bool in_lower(const E& b, const E& a, const E& v) {
  return leq(a, add(b, v));
}
template <class E>
bool in_symmetric(const E& b, const E& a, const E& v) {
  return in_upper(b, a, v) && in_lower(b, a, v);
}

template <class E, class S>
bool in_upper(const E& b, const E& a, const S& s) {
  return in_upper(b, a, realize(s, a));
}
template <class E, class S>
bool in_lower(const E& b, const E& a, const S& s) {
  return in_lower(b, a, realize(s, a));
}
template <class E, class S>
bool in_symmetric(const E& b, const E& a, const S& s) {
  return in_symmetric(b, a, realize(s, a));
}

// ---------------------------------------------------------------------------
// Neighborhood identity suite. Identities (1)-(3) are checked as membership
// equivalences, (4)-(6) as implications, plus monotone-set and order-convex
// behavior of the three neighborhood kinds.

struct NeighborhoodReport {
  std::vector<LawEntry> entries;

  bool all_pass() const {
    for (const auto& e : entries)
      if (!e.pass)
        return false;
    return true;
  }
};

template <class E>
NeighborhoodReport neighborhood_law_suite(const std::vector<E>& samples,
                                          const std::vector<E>& scales,
                                          const std::vector<double>& lambdas) {
  NeighborhoodReport rep;
  auto record = [&rep](const std::string& name,
                       const std::optional<std::string>& cex) {
    rep.entries.push_back({name, !cex.has_value(), cex.value_or("")});
  };
  auto cex_str = [](const E& x, const E& a, const E& v) {
    return "x=" + describe(x) + " a=" + describe(a) + " v=" + describe(v);
  };

  // (1)-(3): x ∈ λ·N(a) iff x ∈ N(λa) with scale λv, for each kind N.
  {
    std::optional<std::string> c1, c2, c3;
    for (double l : lambdas) {
      const double inv = 1.0 / l;
      for (const E& a : samples)
        for (const E& x : samples)
          for (const E& v : scales) {
            const E la = scale(l, a), lv = scale(l, v), xl = scale(inv, x);
            if (!c1 && in_upper(xl, a, v) != in_upper(x, la, lv))
              c1 = "λ=" + std::to_string(l) + " " + cex_str(x, a, v);
            if (!c2 && in_lower(xl, a, v) != in_lower(x, la, lv))
              c2 = "λ=" + std::to_string(l) + " " + cex_str(x, a, v);
            if (!c3 && in_symmetric(xl, a, v) != in_symmetric(x, la, lv))
              c3 = "λ=" + std::to_string(l) + " " + cex_str(x, a, v);
          }
    }
    record("λv(a)=(λv)(λa)", c1);
    record("λ(a)v=(λa)(λv)", c2);
    record("λv(a)v=(λv)(λa)(λv)", c3);
  }

  // (4)-(6): y ∈ N(a) implies y+b ∈ N(a+b).
  {
    std::optional<std::string> c4, c5, c6;
    for (const E& a : samples)
      for (const E& b : samples)
        for (const E& y : samples)
          for (const E& v : scales) {
            const E yb = add(y, b), ab = add(a, b);
            if (!c4 && in_upper(y, a, v) && !in_upper(yb, ab, v))
              c4 = cex_str(y, a, v) + " b=" + describe(b);
            if (!c5 && in_lower(y, a, v) && !in_lower(yb, ab, v))
              c5 = cex_str(y, a, v) + " b=" + describe(b);
            if (!c6 && in_symmetric(y, a, v) && !in_symmetric(yb, ab, v))
              c6 = cex_str(y, a, v) + " b=" + describe(b);
          }
    record("v(a)+b⊆v(a+b)", c4);
    record("(a)v+b⊆(a+b)v", c5);
    record("v(a)v+b⊆v(a+b)v", c6);
  }

  // v(a) is a decreasing set, (a)v an increasing set.
  {
    std::optional<std::string> cd, ci;
    for (const E& a : samples)
      for (const E& c : samples)
        for (const E& b : samples)
          for (const E& v : scales) {
            if (!cd && in_upper(c, a, v) && leq(b, c) && !in_upper(b, a, v))
              cd = cex_str(c, a, v) + " b=" + describe(b);
            if (!ci && in_lower(c, a, v) && leq(c, b) && !in_lower(b, a, v))
              ci = cex_str(c, a, v) + " b=" + describe(b);
          }
    record("v(a) decreasing", cd);
    record("(a)v increasing", ci);
  }

  // v(a)v is order convex.
  {
    std::optional<std::string> cc;
    for (const E& a : samples)
      for (const E& lo : samples)
        for (const E& hi : samples)
          for (const E& mid : samples)
            for (const E& v : scales)
              if (!cc && in_symmetric(lo, a, v) && in_symmetric(hi, a, v) &&
                  leq(lo, mid) && leq(mid, hi) && !in_symmetric(mid, a, v))
                cc = cex_str(mid, a, v) + " lo=" + describe(lo) +
                     " hi=" + describe(hi);
    record("v(a)v order convex", cc);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Closure and separation, over a finite descending scale ladder.

template <class E>
bool closure_contains(const E& b, const E& a, const std::vector<E>& scales) {
  if (scales.empty())
    throw std::invalid_argument("closure_contains: empty scale ladder");
  for (const E& v : scales)
    if (!in_upper(b, a, v))
      return false;
  return true;
}

// Returns a scale v for which the two-sided relation a <= b+v, b <= a+v
// fails, certifying a and b are topologically distinguishable; nullopt if
// no supplied scale distinguishes them (or a == b).
template <class E>
std::optional<E> separated_witness(const E& a, const E& b,
                                   const std::vector<E>& scales) {
  if (a == b)
    return std::nullopt;
  for (const E& v : scales)
    if (!(leq(a, add(b, v)) && leq(b, add(a, v))))
      return v;
  return std::nullopt;
}

// Geometric ladder ε = 2^0 .. 2^-depth realized in the given cone.
template <class E>
std::vector<E> xi_ladder(const E& like, int depth = 20) {
  std::vector<E> r;
  double e = 1.0;
  for (int k = 0; k <= depth; ++k, e *= 0.5)
    r.push_back(realize(XiScalar(e), like));
  return r;
}

// ---------------------------------------------------------------------------
// Boundedness.

inline constexpr double kSearchCap = 1152921504606846976.0;  // 2^60

// Smallest rho >= 0 with 0 <= a + rho*v, by doubling then bisection.
// Returns +inf if no rho below the cap works.
template <class E>
double lower_bound_rho(const E& a, const E& v, double tol = 1e-9) {
  const E zero = zero_like(a);
  auto ok = [&](double rho) { return leq(zero, add(a, scale(rho, v))); };
  if (ok(0.0))
    return 0.0;
  double hi = 1.0;
  while (!ok(hi)) {
    hi *= 2.0;
    if (hi > kSearchCap)
      return std::numeric_limits<double>::infinity();
  }
  double lo = (hi == 1.0) ? 0.0 : hi / 2.0;  // ok(lo) is false by construction
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    double mid = 0.5 * (lo + hi);
    (ok(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

struct BoundednessReport {
  bool lower = false;       // exists rho with 0 <= a + rho*v, per scale
  bool upper = false;       // exists lambda with a <= lambda*v, per scale
  bool bounded = false;     // lower && upper
  bool limit_zero = false;  // (1/n)a -> 0 in the symmetric topology
  bool consistent = false;  // bounded == limit_zero (Cauchy-scalar lemma)
};

template <class E>
BoundednessReport boundedness_check(const E& a, const std::vector<E>& scales,
                                    int n_limit = 64) {
  if (scales.empty())
    throw std::invalid_argument("boundedness_check: empty scale ladder");
  BoundednessReport r;
  const E zero = zero_like(a);
  r.lower = true;
  r.upper = true;
  for (const E& v : scales) {
    if (std::isinf(lower_bound_rho(a, v)))
      r.lower = false;
    bool up = false;
    for (double l = 1.0; l <= kSearchCap; l *= 2.0)
      if (leq(a, scale(l, v))) {
        up = true;
        break;
      }
    if (!up)
      r.upper = false;
  }
  r.bounded = r.lower && r.upper;

  r.limit_zero = true;
  for (const E& v : scales) {
    // (1/n)a must eventually stay in v(0)v; probe a geometric subsequence
    // n = 2^k so even very small scales are reached within the budget.
    bool entered = false;
    for (int k = 0; k <= n_limit; ++k)
      if (in_symmetric(scale(std::ldexp(1.0, -k), a), zero, v)) {
        entered = true;
        break;
      }
    if (!entered)
      r.limit_zero = false;
  }
  r.consistent = (r.bounded == r.limit_zero);
  return r;
}

// ---------------------------------------------------------------------------
// uc-cone gauge q(a) = inf{mu > 0 : a/mu ∈ w(0)w}, by bisection of the
// monotone membership predicate.

struct GaugeResult {
  double value = 0.0;          // +inf when membership fails at the cap
  double bracket_width = 0.0;  // achieved bisection bracket
};

template <class E>
GaugeResult gauge(const E& a, const E& w, double tol = 1e-9) {
  if (!(tol > 0))
    throw std::invalid_argument("gauge: tol must be positive");
  const E zero = zero_like(a);
  auto member = [&](double mu) {
    return in_symmetric(scale(1.0 / mu, a), zero, w);
  };
  const double mu_min = 1.0 / kSearchCap;
  if (member(mu_min))
    return {0.0, mu_min};  // infimum at or below the floor of the bracket
  double hi = mu_min;
  while (!member(hi)) {
    hi *= 2.0;
    if (hi > kSearchCap)
      return {std::numeric_limits<double>::infinity(), 0.0};
  }
  double lo = hi / 2.0;
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    double mid = 0.5 * (lo + hi);
    (member(mid) ? hi : lo) = mid;
  }
  return {0.5 * (lo + hi), hi - lo};
}

}  // namespace conelab
