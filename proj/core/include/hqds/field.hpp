#pragma once

#include <cmath>
#include <cstdlib>
#include <optional>

#include "hqds/rational.hpp"

namespace hqds {

// Scalar policy used by the generic linear algebra and the classifier
// branch logic. ExactField decides equalities exactly; NumericField uses a
// tolerance so the same code can run on floating-point data.
struct ExactField {
  using S = Rational;
  static constexpr bool exact = true;

  bool is_zero(const S& x) const { return sgn(x) == 0; }
  bool eq(const S& a, const S& b) const { return a == b; }
  bool lt(const S& a, const S& b) const { return a < b; }
  S abs(const S& x) const { return ::abs(x); }
  S from_int(long n, long d = 1) const { return S(n, d); }
  std::optional<S> sqrt_nonneg(const S& x) const { return exact_sqrt(x); }
  double to_double(const S& x) const { return x.get_d(); }
};

struct NumericField {
  using S = double;
  static constexpr bool exact = false;
  double tol = 1e-9;

  bool is_zero(double x) const { return std::fabs(x) <= tol; }
  bool eq(double a, double b) const {
    return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)});
  }
  bool lt(double a, double b) const { return a < b && !eq(a, b); }
  double abs(double x) const { return std::fabs(x); }
  double from_int(long n, long d = 1) const {
    return static_cast<double>(n) / static_cast<double>(d);
  }
  std::optional<double> sqrt_nonneg(double x) const {
    if (x < -tol) return std::nullopt;
    return std::sqrt(std::max(x, 0.0));
  }
  double to_double(double x) const { return x; }
};

}  // namespace hqds
