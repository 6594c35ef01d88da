// Concrete cone families beyond the extended reals: finite-dimensional
// vector cones, finite function cones F(X, R̄), and the two-element
// pathology that breaks exactly the 0a=0 axiom.

#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "conelab/extended_real.hpp"

namespace conelab {

// ---------------------------------------------------------------------------
// R^d as a cone (actually a vector space; it also supports true subtraction).

struct VectorElement {
  std::vector<double> coords;

  friend bool operator==(const VectorElement&, const VectorElement&) = default;
};

inline void check_same_dim(const VectorElement& a, const VectorElement& b,
                           const char* op) {
  if (a.coords.size() != b.coords.size())
    throw std::invalid_argument(std::string(op) +
                                ": mismatched vector dimensions");
}

inline VectorElement add(const VectorElement& a, const VectorElement& b) {
  check_same_dim(a, b, "add");
  VectorElement r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i)
    r.coords[i] += b.coords[i];
  return r;
}

inline VectorElement scale(double lambda, const VectorElement& a) {
  if (std::isnan(lambda))
    throw std::domain_error("scale: lambda is NaN");
  if (lambda < 0)
    throw std::domain_error("scale: lambda < 0");
  VectorElement r = a;
  for (double& c : r.coords) {
    c *= lambda;
    if (c == 0.0)
      c = 0.0;
  }
  return r;
}

inline bool leq(const VectorElement& a, const VectorElement& b) {
  check_same_dim(a, b, "leq");
  for (std::size_t i = 0; i < a.coords.size(); ++i)
    if (!(a.coords[i] <= b.coords[i]))
      return false;
  return true;
}

// True vector-space difference; not a cone operation, provided because the
// functional equation needs x - y on the domain side.
inline VectorElement sub(const VectorElement& a, const VectorElement& b) {
  check_same_dim(a, b, "sub");
  VectorElement r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i)
    r.coords[i] -= b.coords[i];
  return r;
}

inline VectorElement zero_like(const VectorElement& a) {
  return VectorElement{std::vector<double>(a.coords.size(), 0.0)};
}

inline VectorElement ones(std::size_t dim) {
  return VectorElement{std::vector<double>(dim, 1.0)};
}

inline std::string describe(const VectorElement& a) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < a.coords.size(); ++i)
    os << (i ? "," : "") << a.coords[i];
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// Finite function cone F(X, R̄): fixed ordered key set, pointwise operations.

struct FunctionElement {
  std::vector<std::string> domain;  // ordered key set, fixed per cone instance
  std::vector<ExtendedReal> values;  // parallel to domain

  friend bool operator==(const FunctionElement&, const FunctionElement&) = default;
};

inline void check_same_domain(const FunctionElement& a, const FunctionElement& b,
                              const char* op) {
  if (a.domain != b.domain)
    throw std::invalid_argument(std::string(op) +
                                ": mismatched function domains");
}

inline FunctionElement add(const FunctionElement& a, const FunctionElement& b) {
  check_same_domain(a, b, "add");
  FunctionElement r = a;
  for (std::size_t i = 0; i < r.values.size(); ++i)
    r.values[i] = add(a.values[i], b.values[i]);
  return r;
}

inline FunctionElement scale(double lambda, const FunctionElement& a) {
  FunctionElement r = a;
  for (auto& v : r.values)
    v = scale(lambda, v);
  return r;
}

inline bool leq(const FunctionElement& a, const FunctionElement& b) {
  check_same_domain(a, b, "leq");
  for (std::size_t i = 0; i < a.values.size(); ++i)
    if (!leq(a.values[i], b.values[i]))
      return false;
  return true;
}

inline FunctionElement zero_like(const FunctionElement& a) {
  FunctionElement r = a;
  for (auto& v : r.values)
    v = ExtendedReal(0.0);
  return r;
}

inline std::string describe(const FunctionElement& a) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < a.domain.size(); ++i)
    os << (i ? "," : "") << a.domain[i] << ":" << describe(a.values[i]);
  os << "}";
  return os.str();
}

// ---------------------------------------------------------------------------
// The two-element set {0,1} with 1+1=1 and lambda·a = a for all lambda >= 0.
// Every cone axiom holds except 0a=0 (here 0·1 = 1).

struct TwoPointPathology {
  int value = 0;  // 0 or 1

  friend bool operator==(const TwoPointPathology&, const TwoPointPathology&) = default;
};

inline TwoPointPathology add(const TwoPointPathology& a,
                             const TwoPointPathology& b) {
  return TwoPointPathology{(a.value || b.value) ? 1 : 0};
}

inline TwoPointPathology scale(double lambda, const TwoPointPathology& a) {
  if (std::isnan(lambda))
    throw std::domain_error("scale: lambda is NaN");
  if (lambda < 0)
    throw std::domain_error("scale: lambda < 0");
  return a;  // the deliberate pathology
}

// Natural preorder: a <= b iff some c has a+c=b, i.e. everything except 1 <= 0.
inline bool leq(const TwoPointPathology& a, const TwoPointPathology& b) {
  return !(a.value == 1 && b.value == 0);
}

inline TwoPointPathology zero_like(const TwoPointPathology&) {
  return TwoPointPathology{0};
}

inline std::string describe(const TwoPointPathology& a) {
  return std::to_string(a.value);
}

}  // namespace conelab
