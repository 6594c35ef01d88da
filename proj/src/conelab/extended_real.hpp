// Element of the extended real line R ∪ {+inf} with cone arithmetic.
// The scalar rule 0·(+inf) = 0 overrides native IEEE semantics (which
// would give NaN), and scaling is only defined for non-negative lambda.

#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace conelab {

class ExtendedReal {
public:
  ExtendedReal() : v_(0.0) {}

  // Finite values only; +inf goes through infinity(). NaN and -inf are
  // not elements of the cone.
  ExtendedReal(double v) : v_(v) {
    if (std::isnan(v))
      throw std::invalid_argument("ExtendedReal: NaN is not an element");
    if (std::isinf(v) && v < 0)
      throw std::invalid_argument("ExtendedReal: -inf is not an element");
    if (v_ == 0.0)
      v_ = 0.0;  // normalize -0
  }

  static ExtendedReal infinity() {
    ExtendedReal r;
    r.v_ = std::numeric_limits<double>::infinity();
    return r;
  }

  bool is_infinite() const { return std::isinf(v_); }

  // Raw value; +inf when infinite.
  double value() const { return v_; }

  double finite_value() const {
    if (is_infinite())
      throw std::domain_error("ExtendedReal: finite_value() of +inf");
    return v_;
  }

  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const ExtendedReal& a, const ExtendedReal& b) {
    return !(a == b);
  }

private:
  double v_;
};

// Cone sum; saturates to +inf (float overflow included).
inline ExtendedReal add(const ExtendedReal& a, const ExtendedReal& b) {
  if (a.is_infinite() || b.is_infinite())
    return ExtendedReal::infinity();
  double s = a.value() + b.value();
  if (std::isinf(s))
    return ExtendedReal::infinity();
  return ExtendedReal(s);
}

// lambda >= 0 required; 0·(+inf) = 0, lambda·(+inf) = +inf for lambda > 0.
inline ExtendedReal scale(double lambda, const ExtendedReal& a) {
  if (std::isnan(lambda))
    throw std::domain_error("scale: lambda is NaN");
  if (lambda < 0)
    throw std::domain_error("scale: lambda < 0");
  if (lambda == 0.0)
    return ExtendedReal(0.0);
  if (a.is_infinite())
    return ExtendedReal::infinity();
  double p = lambda * a.value();
  if (std::isinf(p))
    return ExtendedReal::infinity();
  return ExtendedReal(p);
}

// Usual order on the extended line; +inf is the top element.
inline bool leq(const ExtendedReal& a, const ExtendedReal& b) {
  return a.value() <= b.value();
}

inline ExtendedReal zero_like(const ExtendedReal&) { return ExtendedReal(0.0); }

inline std::string describe(const ExtendedReal& a) {
  if (a.is_infinite())
    return "+inf";
  return std::to_string(a.value());
}

}  // namespace conelab
