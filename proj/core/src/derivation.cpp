#include "hqds/derivation.hpp"

#include <algorithm>
#include <random>

namespace hqds {

namespace {
constexpr unsigned long long kSweepSeed = 0x9E3779B97F4A7C15ULL;
constexpr int kSweepCount = 64;

bool mat_is_zero(const Mat3Q& m) {
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (sgn(m.a[r][c]) != 0) return false;
  return true;
}

int kernel_dim(const Mat3Q& m) {
  ExactField f;
  MatX<Rational> x(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) x.at(r, c) = m.a[r][c];
  return 3 - rank_of(x, f);
}
}  // namespace

MatX<Rational> leibniz_system(const StructureTensorQ& t) {
  MatX<Rational> sys(18, 9);
  int row = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      for (int m = 0; m < 3; ++m, ++row) {
        // D(e_i e_j)_m = sum_k t_ij^k D_{mk}
        for (int k = 0; k < 3; ++k)
          sys.at(row, 3 * k + m) += t.prod(i, j)[k];
        // -(D(e_i) e_j)_m = -sum_r D_{ri} t_rj^m
        for (int r = 0; r < 3; ++r)
          sys.at(row, 3 * i + r) -= t.prod(r, j)[m];
        // -(e_i D(e_j))_m = -sum_r D_{rj} t_ir^m
        for (int r = 0; r < 3; ++r)
          sys.at(row, 3 * j + r) -= t.prod(i, r)[m];
      }
  return sys;
}

std::vector<Mat3Q> derivation_algebra(const StructureTensorQ& t) {
  ExactField f;
  auto kb = kernel_basis(leibniz_system(t), f);
  std::vector<Mat3Q> out;
  for (auto& v : kb) {
    Mat3Q d;
    for (int c = 0; c < 3; ++c)
      for (int r = 0; r < 3; ++r) d.a[r][c] = v[3 * c + r];
    out.push_back(d);
  }
  return out;
}

bool is_derivation(const StructureTensorQ& t, const Mat3Q& d) {
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      Vec3<Rational> ei, ej;
      ei[i] = 1;
      ej[j] = 1;
      Vec3Q lhs = d * t.prod(i, j);
      Vec3Q rhs = t.multiply(d.col(i), ej) + t.multiply(ei, d.col(j));
      Vec3Q diff = lhs - rhs;
      if (!(sgn(diff[0]) == 0 && sgn(diff[1]) == 0 && sgn(diff[2]) == 0))
        return false;
    }
  return true;
}

Mat3Q semisimple_part(const Mat3Q& m) {
  Polynomial p = minimal_polynomial(m);
  Polynomial g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) return m;  // already semisimple
  Polynomial psf = poly_quot(p, g).monic();
  Mat3Q s = m;
  ExactField f;
  for (int iter = 0; iter < 8; ++iter) {
    Mat3Q val = psf.eval(s);
    if (mat_is_zero(val)) return s;
    auto inv = inverse(psf.derivative().eval(s), f);
    if (!inv) return m;  // should not happen; fall back to input
    s = s - (*inv) * val;
  }
  return s;
}

int constraint_solution_dimension(const Rational& omega) {
  // D = diag(1, omega, 0) fixed; unknowns are the 18 structure constants.
  Rational w[3] = {1, omega, 0};
  ExactField f;
  MatX<Rational> sys(18, 18);
  int row = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      for (int m = 0; m < 3; ++m, ++row) {
        int pij = StructureTensorQ::pair_index(i, j);
        // D diagonal: D(e_i e_j)_m = w_m t_ij^m, D(e_i) = w_i e_i.
        sys.at(row, 3 * pij + m) += w[m];
        sys.at(row, 3 * pij + m) -= w[i];
        sys.at(row, 3 * pij + m) -= w[j];
      }
  return 18 - rank_of(sys, f);
}

bool check_constraint_pattern(const StructureTensorQ& t,
                              const Rational& omega) {
  Mat3Q d;
  d.a[0][0] = 1;
  d.a[1][1] = omega;
  d.a[2][2] = 0;
  return is_derivation(t, d);
}

namespace {

// Coefficients of the cubic lambda -> det(M + lambda N) by interpolation.
Polynomial pencil_det(const Mat3Q& m, const Mat3Q& n) {
  auto eval = [&](long l) {
    Mat3Q x = m + n.scaled(Rational(l));
    return x.det();
  };
  Rational d0 = eval(0), d1 = eval(1), dm1 = eval(-1), d2 = eval(2);
  Rational c0 = d0;
  Rational c2 = (d1 + dm1) / 2 - c0;
  Rational sum13 = (d1 - dm1) / 2;                 // c1 + c3
  Rational c3 = ((d2 - c0 - 4 * c2) / 2 - sum13) / 3;
  Rational c1 = sum13 - c3;
  return Polynomial::from({c0, c1, c2, c3});
}

struct Acceptor {
  const StructureTensorQ& t;
  DerivationSearchResult result;

  bool try_accept(const Mat3Q& cand) {
    if (mat_is_zero(cand)) return false;
    Mat3Q s = is_semisimple(cand) ? cand : semisimple_part(cand);
    if (!(is_derivation(t, s))) return false;
    if (kernel_dim(s) != 1) return false;
    Polynomial cp = char_poly(s);  // t^3 + b t^2 + c t (det = 0)
    Rational b = cp.c[2], c = cp.c[1];
    if (sgn(c) == 0) return false;  // zero eigenvalue not simple
    Rational disc = b * b - 4 * c;
    if (exact_sqrt(disc)) {
      result.found = true;
      result.d = s;
      result.rational_spectrum = true;
      result.quad_b = b;
      result.quad_c = c;
      return true;
    }
    // Complex or irrational pair mu, mu': mu(mu + b) = -c for both roots,
    // so S^2 + bS has rational spectrum (-c, -c, 0). Usable when it is
    // still a derivation (it is whenever Der A is closed under this
    // polynomial, e.g. full matrix blocks).
    Mat3Q e = s * s + s.scaled(b);
    if (!mat_is_zero(e) && is_derivation(t, e) && kernel_dim(e) == 1 &&
        is_semisimple(e)) {
      Polynomial cpe = char_poly(e);
      Rational be = cpe.c[2], ce = cpe.c[1];
      if (sgn(ce) != 0 && exact_sqrt(be * be - 4 * ce)) {
        result.found = true;
        result.d = e;
        result.rational_spectrum = true;
        result.quad_b = be;
        result.quad_c = ce;
        return true;
      }
    }
    if (sgn(disc) > 0 && !result.have_irrational_fallback) {
      result.have_irrational_fallback = true;
      result.irrational_fallback = s;
    }
    return false;
  }
};

}  // namespace

DerivationSearchResult find_semisimple_onedim_kernel(
    const StructureTensorQ& t) {
  Acceptor acc{t, {}};
  auto basis = derivation_algebra(t);
  if (basis.empty()) return acc.result;

  std::vector<Mat3Q> candidates;
  for (auto& b : basis) candidates.push_back(b);
  static const long pair_coeffs[] = {1, -1, 2, -2};
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      for (long c : pair_coeffs)
        candidates.push_back(basis[i] + basis[j].scaled(Rational(c)));
  std::mt19937_64 rng(kSweepSeed);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (int k = 0; k < kSweepCount; ++k) {
    Mat3Q m = Mat3Q::zero();
    for (auto& b : basis) m = m + b.scaled(Rational(dist(rng)));
    candidates.push_back(m);
  }

  // First pass: singular candidates directly.
  std::vector<Mat3Q> nonsingular;
  for (auto& m : candidates) {
    if (mat_is_zero(m)) continue;
    int k = kernel_dim(m);
    if (k == 1) {
      if (acc.try_accept(m)) return acc.result;
    } else if (k == 0) {
      nonsingular.push_back(m);
    }
  }
  // Second pass: force a zero eigenvalue along pencil directions.
  for (auto& m : nonsingular) {
    for (auto& b : basis) {
      Polynomial det_poly = pencil_det(m, b);
      if (det_poly.is_zero()) continue;
      auto roots = rational_roots(det_poly);
      std::sort(roots.begin(), roots.end());
      for (auto& lambda : roots) {
        Mat3Q cand = m + b.scaled(lambda);
        if (mat_is_zero(cand)) continue;
        if (kernel_dim(cand) == 1 && acc.try_accept(cand))
          return acc.result;
      }
    }
  }
  return acc.result;
}

}  // namespace hqds
