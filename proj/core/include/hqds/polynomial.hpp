#pragma once

#include <optional>
#include <vector>

#include "hqds/linalg.hpp"

namespace hqds {

// Dense univariate polynomial over the rationals; c[i] is the coefficient
// of t^i, trailing zeros trimmed (zero polynomial has empty c).
struct Polynomial {
  std::vector<Rational> c;

  static Polynomial zero() { return {}; }
  static Polynomial from(std::vector<Rational> coeffs);

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const Rational& lead() const { return c.back(); }

  Polynomial derivative() const;
  Polynomial monic() const;
  Rational eval(const Rational& x) const;
  Mat3Q eval(const Mat3Q& m) const;

  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
};

// Remainder of a by b (b nonzero).
Polynomial poly_rem(const Polynomial& a, const Polynomial& b);
// Quotient of a by b when it divides headwise (plain long division quotient).
Polynomial poly_quot(const Polynomial& a, const Polynomial& b);
// Monic gcd via the Euclidean algorithm; gcd(0,0) = 0.
Polynomial poly_gcd(Polynomial a, Polynomial b);

bool is_squarefree(const Polynomial& p);

// Monic characteristic polynomial det(tI - M).
Polynomial char_poly(const Mat3Q& m);
// Monic minimal polynomial: first linear dependency among I, M, M^2, M^3.
Polynomial minimal_polynomial(const Mat3Q& m);
// A matrix is semisimple iff its minimal polynomial is squarefree.
bool is_semisimple(const Mat3Q& m);

// All rational roots, with multiplicity, for degree <= 3. Exact for the
// quadratic part; the cubic case with nonzero constant term uses
// double-precision root estimates reconstructed and verified exactly.
std::vector<Rational> rational_roots(const Polynomial& p);

struct RationalEigen {
  std::vector<Rational> eigenvalues;            // distinct
  std::vector<std::vector<Vec3Q>> eigenspaces;  // kernel bases of M - lambda I
  bool diagonalizable = false;
};

// nullopt when the spectrum is not rational (callers may fall back to
// floating point).
std::optional<RationalEigen> rational_eigen_decomposition(const Mat3Q& m);

}  // namespace hqds
