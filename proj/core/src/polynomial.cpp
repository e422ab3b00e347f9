#include "hqds/polynomial.hpp"

#include <cmath>
#include <complex>

namespace hqds {

namespace {
void trim(std::vector<Rational>& c) {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}
}  // namespace

Polynomial Polynomial::from(std::vector<Rational> coeffs) {
  trim(coeffs);
  return Polynomial{std::move(coeffs)};
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c.size(); ++i)
    d.push_back(c[i] * Rational(static_cast<long>(i)));
  return from(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> d = c;
  for (auto& x : d) x /= c.back();
  return from(std::move(d));
}

Rational Polynomial::eval(const Rational& x) const {
  Rational r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

Mat3Q Polynomial::eval(const Mat3Q& m) const {
  Mat3Q r = Mat3Q::zero();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    r = r * m;
    for (int i = 0; i < 3; ++i) r.a[i][i] += *it;
  }
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return zero();
  std::vector<Rational> r(c.size() + o.c.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
  return from(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<Rational> r(std::max(c.size(), o.c.size()), Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i) r[i] += c[i];
  for (std::size_t i = 0; i < o.c.size(); ++i) r[i] -= o.c[i];
  return from(std::move(r));
}

Polynomial poly_rem(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> r = a.c;
  int db = b.degree();
  while (static_cast<int>(r.size()) - 1 >= db) {
    trim(r);
    if (static_cast<int>(r.size()) - 1 < db) break;
    Rational factor = r.back() / b.lead();
    int shift = static_cast<int>(r.size()) - 1 - db;
    for (int i = 0; i <= db; ++i) r[i + shift] -= factor * b.c[i];
    trim(r);
    if (r.empty()) break;
  }
  return Polynomial::from(std::move(r));
}

Polynomial poly_quot(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> r = a.c;
  int db = b.degree();
  int dq = a.degree() - db;
  if (dq < 0) return Polynomial::zero();
  std::vector<Rational> q(dq + 1, Rational(0));
  trim(r);
  while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
    Rational factor = r.back() / b.lead();
    int shift = static_cast<int>(r.size()) - 1 - db;
    q[shift] = factor;
    for (int i = 0; i <= db; ++i) r[i + shift] -= factor * b.c[i];
    trim(r);
  }
  return Polynomial::from(std::move(q));
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool is_squarefree(const Polynomial& p) {
  if (p.is_zero()) return false;
  if (p.degree() == 0) return true;
  Polynomial g = poly_gcd(p, p.derivative());
  return g.degree() == 0;
}

Polynomial char_poly(const Mat3Q& m) {
  // det(tI - M) = t^3 - tr t^2 + c1 t - det, c1 the sum of principal 2x2 minors.
  Rational tr = m.trace();
  Rational c1 = (m.a[0][0] * m.a[1][1] - m.a[0][1] * m.a[1][0]) +
                (m.a[0][0] * m.a[2][2] - m.a[0][2] * m.a[2][0]) +
                (m.a[1][1] * m.a[2][2] - m.a[1][2] * m.a[2][1]);
  Rational d = m.det();
  return Polynomial::from({-d, c1, -tr, Rational(1)});
}

Polynomial minimal_polynomial(const Mat3Q& m) {
  // Flatten I, M, M^2, M^3 and find the first linear dependency.
  ExactField f;
  std::vector<Mat3Q> pows;
  pows.push_back(Mat3Q::identity());
  for (int k = 1; k <= 3; ++k) pows.push_back(pows.back() * m);
  for (int deg = 1; deg <= 3; ++deg) {
    // Solve pows[deg] = sum_{i<deg} x_i pows[i].
    MatX<Rational> sys(9, deg);
    std::vector<Rational> rhs(9);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        int row = r * 3 + c;
        for (int i = 0; i < deg; ++i) sys.at(row, i) = pows[i].a[r][c];
        rhs[row] = pows[deg].a[r][c];
      }
    // Augment and compare ranks.
    MatX<Rational> aug(9, deg + 1);
    for (int row = 0; row < 9; ++row) {
      for (int i = 0; i < deg; ++i) aug.at(row, i) = sys.at(row, i);
      aug.at(row, deg) = rhs[row];
    }
    int r1 = rank_of(sys, f);
    MatX<Rational> aug2 = aug;
    int r2 = rref(aug2, f);
    if (r1 != r2) continue;  // inconsistent: no dependency at this degree
    // Back out the solution from the echelon form of the augmented system.
    std::vector<Rational> x(deg, Rational(0));
    int row = 0;
    for (int c = 0; c < deg && row < r2; ++c) {
      if (sgn(aug2.at(row, c)) != 0) {
        x[c] = aug2.at(row, deg);
        ++row;
      }
    }
    std::vector<Rational> coeffs(deg + 1);
    for (int i = 0; i < deg; ++i) coeffs[i] = -x[i];
    coeffs[deg] = 1;
    return Polynomial::from(std::move(coeffs));
  }
  return char_poly(m);  // unreachable for 3x3
}

bool is_semisimple(const Mat3Q& m) {
  return is_squarefree(minimal_polynomial(m));
}

namespace {

// Exact rational roots of a quadratic (degree must be 2).
std::vector<Rational> quadratic_roots(const Polynomial& p) {
  Rational a = p.c[2], b = p.c[1], c = p.c[0];
  Rational disc = b * b - 4 * a * c;
  auto s = exact_sqrt(disc);
  if (!s) return {};
  Rational r1 = (-b + *s) / (2 * a);
  Rational r2 = (-b - *s) / (2 * a);
  if (*s == 0) return {r1, r1};
  return {r1, r2};
}

// Real roots of a cubic in double precision (Cardano / companion-free).
std::vector<double> cubic_roots_double(double a, double b, double c, double d) {
  // a t^3 + b t^2 + c t + d, a != 0.
  b /= a; c /= a; d /= a;
  double p = c - b * b / 3.0;
  double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
  double shift = -b / 3.0;
  double disc = q * q / 4.0 + p * p * p / 27.0;
  std::vector<double> roots;
  if (disc > 1e-18) {
    double s = std::sqrt(disc);
    double u = std::cbrt(-q / 2.0 + s);
    double v = std::cbrt(-q / 2.0 - s);
    roots.push_back(u + v + shift);
  } else {
    double r = std::sqrt(std::max(-p * p * p / 27.0, 0.0));
    double phi = std::acos(std::clamp(-q / (2.0 * std::max(r, 1e-300)), -1.0, 1.0));
    double m = 2.0 * std::cbrt(r);
    for (int k = 0; k < 3; ++k)
      roots.push_back(m * std::cos((phi + 2.0 * M_PI * k) / 3.0) + shift);
  }
  return roots;
}

std::optional<Rational> verified_root(const Polynomial& p, double est) {
  for (unsigned long bound : {1000000UL, 1000000000000UL}) {
    for (double tol : {1e-9, 1e-6}) {
      auto cand = reconstruct_rational(est, bound, tol);
      if (cand && sgn(p.eval(*cand)) == 0) return cand;
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& p) {
  if (p.is_zero() || p.degree() == 0) return {};
  Polynomial q = p.monic();
  if (q.degree() == 1) return {-q.c[0]};
  if (q.degree() == 2) return quadratic_roots(q);
  // Cubic: factor out roots at 0 first, then remaining structure.
  std::vector<Rational> roots;
  while (q.degree() >= 1 && sgn(q.c[0]) == 0) {
    roots.push_back(Rational(0));
    q.c.erase(q.c.begin());
  }
  if (q.degree() == 0) return roots;
  if (q.degree() == 1) {
    roots.push_back(-q.c[0]);
    return roots;
  }
  if (q.degree() == 2) {
    for (auto& r : quadratic_roots(q)) roots.push_back(r);
    return roots;
  }
  // Full cubic with nonzero constant term: double estimates, exact verify.
  auto est = cubic_roots_double(q.c[3].get_d(), q.c[2].get_d(), q.c[1].get_d(),
                                q.c[0].get_d());
  for (double e : est) {
    auto r = verified_root(q, e);
    if (r) {
      roots.push_back(*r);
      // Deflate and finish with the exact quadratic.
      Polynomial lin = Polynomial::from({-*r, Rational(1)});
      Polynomial rest = poly_quot(q, lin);
      for (auto& rr : rational_roots(rest)) roots.push_back(rr);
      return roots;
    }
  }
  return roots;
}

std::optional<RationalEigen> rational_eigen_decomposition(const Mat3Q& m) {
  Polynomial p = char_poly(m);
  std::vector<Rational> roots = rational_roots(p);
  if (roots.size() != 3) return std::nullopt;
  RationalEigen out;
  ExactField f;
  std::vector<Rational> distinct;
  for (auto& r : roots) {
    bool seen = false;
    for (auto& d : distinct)
      if (d == r) seen = true;
    if (!seen) distinct.push_back(r);
  }
  int total = 0;
  for (auto& lambda : distinct) {
    MatX<Rational> shifted(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        shifted.at(r, c) = m.a[r][c] - (r == c ? lambda : Rational(0));
    auto kb = kernel_basis(shifted, f);
    std::vector<Vec3Q> space;
    for (auto& v : kb) space.push_back(Vec3Q{{v[0], v[1], v[2]}});
    total += static_cast<int>(space.size());
    out.eigenvalues.push_back(lambda);
    out.eigenspaces.push_back(std::move(space));
  }
  out.diagonalizable = (total == 3);
  return out;
}

}  // namespace hqds
