#include "hqds/classifier.hpp"

#include <cmath>
#include <utility>

#include "hqds/polynomial.hpp"

namespace hqds {

namespace {

enum class Kind { Ok, Gap, NeedNumeric };

template <class S>
struct BranchOutcome {
  Kind kind = Kind::Gap;
  Family fam = Family::A1;
  std::vector<S> params;
  Mat3<S> Q;  // change of basis from the adapted (eigen) basis
  std::string note;
};

template <class F>
struct PairHit {
  Family fam;
  std::vector<typename F::S> params;
  typename F::S ta, tb;  // target pair as the canonical table emits it
};

// Families with products e1e2=e3 (optional), e3^2=e3, e1e3=a e1, e2e3=b e2;
// symmetric under swapping e1 and e2.
template <class F>
PairHit<F> lookup_T1(const F& f, const typename F::S& a,
                     const typename F::S& b) {
  using S = typename F::S;
  const S zero = f.from_int(0), h = f.from_int(1, 2);
  bool a0 = f.is_zero(a), b0 = f.is_zero(b);
  bool ah = f.eq(a, h), bh = f.eq(b, h);
  if (a0 && b0) return {Family::A1, {}, zero, zero};
  if ((a0 && bh) || (ah && b0)) return {Family::A2, {}, zero, h};
  if (ah && bh) return {Family::A3, {}, h, h};
  if (a0) return {Family::A4, {b}, b, zero};
  if (b0) return {Family::A4, {a}, a, zero};
  if (ah) return {Family::A5, {b}, b, h};
  if (bh) return {Family::A5, {a}, a, h};
  if (f.eq(a, b)) return {Family::A6, {a}, a, a};
  S lo = a, hi = b;
  if (f.lt(hi, lo)) std::swap(lo, hi);
  return {Family::A7, {lo, hi}, lo, hi};
}

template <class F>
PairHit<F> lookup_T2(const F& f, const typename F::S& a,
                     const typename F::S& b) {
  using S = typename F::S;
  const S zero = f.from_int(0), h = f.from_int(1, 2);
  bool a0 = f.is_zero(a), b0 = f.is_zero(b);
  bool ah = f.eq(a, h), bh = f.eq(b, h);
  if (a0 && b0) return {Family::A8, {}, zero, zero};
  if ((a0 && bh) || (ah && b0)) return {Family::A9, {}, zero, h};
  if (ah && bh) return {Family::A10, {}, h, h};
  if (a0) return {Family::A11, {b}, zero, b};
  if (b0) return {Family::A11, {a}, zero, a};
  if (ah) return {Family::A12, {b}, h, b};
  if (bh) return {Family::A12, {a}, h, a};
  if (f.eq(a, b)) return {Family::A13, {a}, a, a};
  S lo = a, hi = b;
  if (f.lt(hi, lo)) std::swap(lo, hi);
  return {Family::A14, {lo, hi}, lo, hi};
}

// Eigenvector of the 2x2 matrix [[m00,m01],[m10,m11]] for eigenvalue lam.
template <class F>
std::pair<typename F::S, typename F::S> eigvec2(
    const F& f, const typename F::S& m00, const typename F::S& m01,
    const typename F::S& m10, const typename F::S& m11,
    const typename F::S& lam) {
  if (!f.is_zero(m01)) return {m01, lam - m00};
  if (!f.is_zero(m10)) return {lam - m11, m10};
  if (f.eq(m00, lam)) return {f.from_int(1), f.from_int(0)};
  return {f.from_int(0), f.from_int(1)};
}

// Branch logic on the adapted tensor: the input rewritten in an eigenbasis
// of a semisimple derivation with spectrum proportional to (1, omega, 0).
// Only structure constants whose weights balance survive; everything else
// is exactly zero (up to tol in the numeric field).
template <class F>
BranchOutcome<typename F::S> branch_classify(
    const StructureTensor<typename F::S>& a, const typename F::S& omega,
    const F& f) {
  using S = typename F::S;
  BranchOutcome<S> out;
  const S zero = f.from_int(0), one = f.from_int(1), two = f.from_int(2);
  const S h = f.from_int(1, 2);
  const S j = a.prod(2, 2)[2];   // e3^2 = j e3
  const S p = a.prod(0, 2)[0];   // e1e3 = p e1 (+ q e2 when omega = 1)
  const S tt = a.prod(1, 2)[1];  // e2e3 = t e2 (+ s e1 when omega = 1)
  const S n = a.prod(0, 1)[2];   // e1e2 = n e3 (omega = -1)
  const S b2 = a.prod(0, 0)[1];  // e1^2 = b e2 (omega = 2)
  const S q = a.prod(0, 2)[1];
  const S sC = a.prod(1, 2)[0];

  auto E = [&](int i) {
    Vec3<S> v;
    v[i] = one;
    return v;
  };
  auto mk = [&](const Vec3<S>& c0, const Vec3<S>& c1, const Vec3<S>& c2) {
    Mat3<S> m;
    m.set_col(0, c0);
    m.set_col(1, c1);
    m.set_col(2, c2);
    return m;
  };
  auto lift = [&](const S& x, const S& y) {
    Vec3<S> v;
    v[0] = x;
    v[1] = y;
    return v;
  };
  auto ok = [&](Family fam, std::vector<S> ps, const Mat3<S>& Q) {
    out.kind = Kind::Ok;
    out.fam = fam;
    out.params = std::move(ps);
    out.Q = Q;
  };
  auto gap = [&](const std::string& note) {
    out.kind = Kind::Gap;
    out.note = note;
  };

  // e1e2 = e3-multiple present, e3 idempotent-scaled: full table with both.
  auto finish_T1 = [&]() {
    S alpha = p / j, beta = tt / j;
    S lambda = one / (n * j);  // makes f1 f2 = f3 after f3 = e3 / j
    auto L = lookup_T1(f, alpha, beta);
    bool noswap = f.eq(alpha, L.ta) && f.eq(beta, L.tb);
    Vec3<S> f3 = E(2) * (one / j);
    ok(L.fam, L.params,
       noswap ? mk(E(0) * lambda, E(1), f3) : mk(E(1), E(0) * lambda, f3));
  };

  auto finish_T2 = [&](const S& alpha, const S& beta, const Vec3<S>& w1,
                       const Vec3<S>& w2, const Vec3<S>& f3) {
    auto L = lookup_T2(f, alpha, beta);
    bool noswap = f.eq(alpha, L.ta) && f.eq(beta, L.tb);
    ok(L.fam, L.params, noswap ? mk(w1, w2, f3) : mk(w2, w1, f3));
  };

  // e1e2 = n e3, e3 square-free: scaling moves (u1,u2) = (np, nt) by a
  // common factor; the swap exchanges the two slots.
  auto finish_T3 = [&]() {
    S u1 = n * p, u2 = n * tt;
    bool z1 = f.is_zero(u1), z2 = f.is_zero(u2);
    if (z1 && z2) {
      ok(Family::A15, {}, mk(E(2) * n, E(0), E(1)));
      return;
    }
    if (z1) {
      S c = one / u2;
      ok(Family::A16, {}, mk(E(0) * c, E(1), E(2) * (c * n)));
      return;
    }
    if (z2) {
      S c = one / u1;
      ok(Family::A16, {}, mk(E(1) * c, E(0), E(2) * (c * n)));
      return;
    }
    if (f.eq(u1, u2)) {
      S c = one / u1;
      ok(Family::A17, {}, mk(E(0) * c, E(1), E(2) * (c * n)));
      return;
    }
    S r1 = u2 / u1;
    if (!f.lt(f.abs(r1), one)) {
      S c = one / u1;
      ok(Family::A18, {r1}, mk(E(0) * c, E(1), E(2) * (c * n)));
    } else {
      S c = one / u2;
      ok(Family::A18, {u1 / u2}, mk(E(1) * c, E(0), E(2) * (c * n)));
    }
  };

  // Only e1e3, e2e3 eigen-actions left: the e3 scale moves (alpha,beta) by
  // a common factor; the swap exchanges them.
  auto finish_T4 = [&](const S& alpha, const S& beta, const Vec3<S>& w1,
                       const Vec3<S>& w2, const Vec3<S>& e3col) {
    bool z1 = f.is_zero(alpha), z2 = f.is_zero(beta);
    if (z1 && z2) {
      gap("adapted tensor vanished");
      return;
    }
    if (z1) {
      ok(Family::A19, {}, mk(w1, w2, e3col * (one / beta)));
      return;
    }
    if (z2) {
      ok(Family::A19, {}, mk(w2, w1, e3col * (one / alpha)));
      return;
    }
    if (f.eq(alpha, beta)) {
      ok(Family::A20, {}, mk(w1, w2, e3col * (one / alpha)));
      return;
    }
    S r1 = beta / alpha;
    if (!f.lt(f.abs(r1), one)) {
      ok(Family::A21, {r1}, mk(w1, w2, e3col * (one / alpha)));
    } else {
      ok(Family::A21, {alpha / beta}, mk(w2, w1, e3col * (one / beta)));
    }
  };

  // Squarer weight pattern with idempotent direction: e1^2 = b e2 in the
  // adapted order; the canonical table puts the squaring vector second.
  auto finish_T6 = [&]() {
    S alpha = tt / j, beta = p / j;
    Mat3<S> Q = mk(E(1) * b2, E(0), E(2) * (one / j));
    bool a0 = f.is_zero(alpha), b0 = f.is_zero(beta);
    bool ah = f.eq(alpha, h), bh = f.eq(beta, h);
    if (a0 && b0) ok(Family::A25, {}, Q);
    else if (a0 && bh) ok(Family::A26, {}, Q);
    else if (a0) ok(Family::A24, {beta}, Q);
    else if (b0)
      gap("no catalog class: squarer weight pattern with idempotent, "
          "eigen-action only on the squared vector");
    else if (ah && bh) ok(Family::A30, {}, Q);
    else if (bh) ok(Family::A29, {alpha}, Q);
    else if (ah) ok(Family::A31, {beta}, Q);
    else if (f.eq(alpha, beta)) ok(Family::A28, {alpha}, Q);
    else ok(Family::A27, {alpha, beta}, Q);
  };

  auto finish_T7 = [&]() {
    bool pz = f.is_zero(p), tz = f.is_zero(tt);
    if (pz && tz) {
      ok(Family::A32, {}, mk(E(0), E(1) * b2, E(2)));
      return;
    }
    if (pz) {
      gap("no catalog class: squarer weight pattern without idempotent, "
          "eigen-action only on the squared vector");
      return;
    }
    S r = tt / p;
    Mat3<S> Q = mk(E(0), E(1) * b2, E(2) * (one / p));
    if (f.eq(r, one)) ok(Family::A34, {}, Q);
    else if (f.is_zero(r)) ok(Family::A35, {}, Q);
    else ok(Family::A33, {r}, Q);
  };

  if (f.eq(omega, f.from_int(-1))) {
    if (!f.is_zero(j) && !f.is_zero(n)) finish_T1();
    else if (!f.is_zero(j)) finish_T2(p / j, tt / j, E(0), E(1), E(2) * (one / j));
    else if (!f.is_zero(n)) finish_T3();
    else finish_T4(p, tt, E(0), E(1), E(2));
    return out;
  }

  if (f.eq(omega, one)) {
    // L_{e3} acts on the two-dimensional eigenspace by M = [[p,s],[q,t]];
    // any basis change there is allowed, so the class is the (scaled)
    // conjugacy class of M.
    S m00 = p, m01 = sC, m10 = q, m11 = tt;
    Vec3<S> f3 = E(2);
    if (!f.is_zero(j)) {
      m00 = m00 / j;
      m01 = m01 / j;
      m10 = m10 / j;
      m11 = m11 / j;
      f3 = E(2) * (one / j);
      S tr = m00 + m11, det = m00 * m11 - m01 * m10;
      S disc = tr * tr - f.from_int(4) * det;
      bool diag = f.is_zero(m01) && f.is_zero(m10) && f.eq(m00, m11);
      if (f.is_zero(disc)) {
        S lam = tr / two;
        if (diag) {
          finish_T2(lam, lam, E(0), E(1), f3);
        } else if (f.is_zero(lam)) {
          // Nilpotent action next to an idempotent.
          std::pair<S, S> v =
              (!f.is_zero(m00) || !f.is_zero(m10)) ? std::pair<S, S>{one, zero}
                                                   : std::pair<S, S>{zero, one};
          Vec3<S> w2 = lift(v.first, v.second);
          Vec3<S> w1 = lift(m00 * v.first + m01 * v.second,
                            m10 * v.first + m11 * v.second);
          ok(Family::A22, {}, mk(w1, w2, f3));
        } else {
          gap("no catalog class: idempotent whose multiplication acts as a "
              "Jordan block with repeated nonzero eigenvalue");
        }
      } else if (f.lt(zero, disc)) {
        auto sq = f.sqrt_nonneg(disc);
        if (!sq) {
          out.kind = Kind::NeedNumeric;
          return out;
        }
        S l1 = (tr - *sq) / two, l2 = (tr + *sq) / two;
        auto va = eigvec2(f, m00, m01, m10, m11, l1);
        auto vb = eigvec2(f, m00, m01, m10, m11, l2);
        finish_T2(l1, l2, lift(va.first, va.second), lift(vb.first, vb.second),
                  f3);
      } else {
        // Complex pair a +/- bi: real rotation-scaling normal form.
        S aC = tr / two;
        auto sq = f.sqrt_nonneg(det - aC * aC);
        if (!sq) {
          out.kind = Kind::NeedNumeric;
          return out;
        }
        S bC = *sq;
        Vec3<S> w1 = lift(one, zero);
        Vec3<S> w2 = lift((aC - m00) / bC, zero - m10 / bC);
        ok(Family::A23, {aC, bC}, mk(w1, w2, f3));
      }
      return out;
    }
    // j = 0: M is only defined up to a global scale as well.
    S tr = m00 + m11, det = m00 * m11 - m01 * m10;
    S disc = tr * tr - f.from_int(4) * det;
    bool diag = f.is_zero(m01) && f.is_zero(m10) && f.eq(m00, m11);
    if (f.is_zero(disc)) {
      S lam = tr / two;
      if (diag) {
        if (f.is_zero(lam)) gap("adapted tensor vanished");
        else finish_T4(lam, lam, E(0), E(1), E(2));
      } else if (f.is_zero(lam)) {
        std::pair<S, S> v =
            (!f.is_zero(m00) || !f.is_zero(m10)) ? std::pair<S, S>{one, zero}
                                                 : std::pair<S, S>{zero, one};
        Vec3<S> w2 = lift(v.first, v.second);
        Vec3<S> w1 = lift(m00 * v.first + m01 * v.second,
                          m10 * v.first + m11 * v.second);
        ok(Family::A15, {}, mk(w1, w2, E(2)));
      } else {
        gap("no catalog class: square-free direction acting as a Jordan "
            "block with repeated nonzero eigenvalue");
      }
    } else if (f.lt(zero, disc)) {
      auto sq = f.sqrt_nonneg(disc);
      if (!sq) {
        out.kind = Kind::NeedNumeric;
        return out;
      }
      S l1 = (tr - *sq) / two, l2 = (tr + *sq) / two;
      auto va = eigvec2(f, m00, m01, m10, m11, l1);
      auto vb = eigvec2(f, m00, m01, m10, m11, l2);
      finish_T4(l1, l2, lift(va.first, va.second), lift(vb.first, vb.second),
                E(2));
    } else {
      gap("no catalog class: square-free direction acting with complex "
          "eigenvalues");
    }
    return out;
  }

  if (f.eq(omega, two)) {
    if (!f.is_zero(b2) && !f.is_zero(j)) finish_T6();
    else if (!f.is_zero(b2)) finish_T7();
    else if (!f.is_zero(j)) finish_T2(p / j, tt / j, E(0), E(1), E(2) * (one / j));
    else finish_T4(p, tt, E(0), E(1), E(2));
    return out;
  }

  // Generic spectrum: only the always-surviving constants j, p, t remain.
  if (!f.is_zero(j)) finish_T2(p / j, tt / j, E(0), E(1), E(2) * (one / j));
  else finish_T4(p, tt, E(0), E(1), E(2));
  return out;
}

double vec_norm2(const Vec3D& v) {
  return v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
}

Vec3D cross(const Vec3D& a, const Vec3D& b) {
  return Vec3D{{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                a[0] * b[1] - a[1] * b[0]}};
}

// Direction of the (one-dimensional) kernel of a rank-2 matrix.
Vec3D kernel_direction(const Mat3D& m) {
  Vec3D rows[3];
  for (int r = 0; r < 3; ++r)
    rows[r] = Vec3D{{m.a[r][0], m.a[r][1], m.a[r][2]}};
  Vec3D best{};
  double bn = -1;
  for (int i = 0; i < 3; ++i)
    for (int k = i + 1; k < 3; ++k) {
      Vec3D c = cross(rows[i], rows[k]);
      double n2 = vec_norm2(c);
      if (n2 > bn) {
        bn = n2;
        best = c;
      }
    }
  double mx = std::max({std::fabs(best[0]), std::fabs(best[1]),
                        std::fabs(best[2])});
  if (mx > 0)
    for (int i = 0; i < 3; ++i) best[i] /= mx;
  return best;
}

double max_abs(const StructureTensorD& t) {
  double m = 0;
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < 3; ++k) m = std::max(m, std::fabs(t.p[i][k]));
  return m;
}

double max_abs_diff(const StructureTensorD& x, const StructureTensorD& y) {
  double m = 0;
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < 3; ++k)
      m = std::max(m, std::fabs(x.p[i][k] - y.p[i][k]));
  return m;
}

// Numeric tail shared by the two float entry points: run the branch logic
// on the adapted double tensor and verify the witness within tolerance.
void run_numeric_branch(const StructureTensorQ& input,
                        const StructureTensorD& adapted, double omega,
                        const Mat3D& P0, double tol,
                        ClassificationResult& res) {
  NumericField f;
  f.tol = tol;
  auto bo = branch_classify(adapted, omega, f);
  if (bo.kind == Kind::Gap) {
    res.status = ClassifyStatus::NotClassifiable;
    res.note = bo.note + " (numeric)";
    return;
  }
  if (bo.kind == Kind::NeedNumeric) {
    res.status = ClassifyStatus::Failure;
    res.note = "internal: numeric branch requested another numeric fallback";
    return;
  }
  Mat3D P = P0 * bo.Q;
  StructureTensorD canon = emit_canonical_num(bo.fam, bo.params);
  auto conj = conjugate_tensor(to_double(input), P, f);
  if (!conj) {
    res.status = ClassifyStatus::Failure;
    res.note = "numeric witness is singular";
    return;
  }
  double scale = std::max(1.0, max_abs(canon));
  if (max_abs_diff(*conj, canon) > kNumericVerifyTol * scale) {
    res.status = ClassifyStatus::Failure;
    res.note = "numeric canonical-form witness check failed";
    return;
  }
  res.status = ClassifyStatus::Classified;
  res.family = bo.fam;
  res.params.clear();
  res.params_num = bo.params;
  res.numeric = true;
  res.witness_num = P;
  res.omega_num = omega;
}

// Exact derivation with irrational (real) spectrum: diagonalize in doubles.
void run_numeric_from_derivation(const StructureTensorQ& input,
                                 const Mat3Q& dq, double tol,
                                 ClassificationResult& res) {
  res.has_derivation = true;
  res.derivation = dq;
  Polynomial cp = char_poly(dq);  // t (t^2 + b t + c)
  double b = cp.c[2].get_d(), c = cp.c[1].get_d();
  double disc = b * b - 4 * c;
  if (!(disc > 0)) {
    res.status = ClassifyStatus::Failure;
    res.note = "internal: irrational-spectrum fallback is not real-split";
    return;
  }
  double sq = std::sqrt(disc);
  double la = (-b - sq) / 2, lb = (-b + sq) / 2;
  Mat3D dd = to_double(dq);
  Vec3D va = kernel_direction(dd - Mat3D::identity().scaled(la));
  Vec3D vb = kernel_direction(dd - Mat3D::identity().scaled(lb));
  Vec3D w0 = kernel_direction(dd);
  NumericField f;
  f.tol = tol;
  double omega;
  Vec3D v1, v2;
  double r = lb / la;
  if (f.eq(r, -1) || f.eq(r, 2) || std::fabs(r) >= 1) {
    omega = f.eq(r, -1) ? -1 : r;
    v1 = va;
    v2 = vb;
  } else if (f.eq(r, 0.5)) {
    omega = 2;
    v1 = vb;
    v2 = va;
  } else {
    omega = la / lb;
    v1 = vb;
    v2 = va;
  }
  Mat3D P0;
  P0.set_col(0, v1);
  P0.set_col(1, v2);
  P0.set_col(2, w0);
  if (std::fabs(P0.det()) < 1e-9) {
    res.status = ClassifyStatus::Failure;
    res.note = "numeric eigenbasis is singular";
    return;
  }
  auto adapted = conjugate_tensor(to_double(input), P0, f);
  if (!adapted) {
    res.status = ClassifyStatus::Failure;
    res.note = "numeric eigenbasis is singular";
    return;
  }
  run_numeric_branch(input, *adapted, omega, P0, tol, res);
  if (res.status == ClassifyStatus::Classified)
    res.note = "irrational derivation spectrum; numeric pipeline";
}

void run_exact(const StructureTensorQ& t, const Mat3Q& d, double tol,
               ClassificationResult& res) {
  res.has_derivation = true;
  res.derivation = d;
  auto eig = rational_eigen_decomposition(d);
  if (!eig || !eig->diagonalizable) {
    res.status = ClassifyStatus::Failure;
    res.note = "internal: derivation is not rationally diagonalizable";
    return;
  }
  Vec3Q w0;
  std::vector<std::pair<Rational, Vec3Q>> nz;
  for (std::size_t i = 0; i < eig->eigenvalues.size(); ++i) {
    if (sgn(eig->eigenvalues[i]) == 0) {
      w0 = eig->eigenspaces[i][0];
    } else {
      for (const auto& v : eig->eigenspaces[i])
        nz.emplace_back(eig->eigenvalues[i], v);
    }
  }
  if (nz.size() != 2) {
    res.status = ClassifyStatus::Failure;
    res.note = "internal: derivation kernel is not one-dimensional";
    return;
  }
  Rational la = nz[0].first, lb = nz[1].first;
  Vec3Q va = nz[0].second, vb = nz[1].second;
  Rational omega;
  Vec3Q v1, v2;
  if (la == lb) {
    omega = 1;
    v1 = va;
    v2 = vb;
  } else {
    Rational r = lb / la;
    if (r == -1 || r == 2 || r > 1 || r < -1) {
      omega = r;
      v1 = va;
      v2 = vb;
    } else {
      // Includes r = 1/2, normalized to omega = 2 by swapping.
      omega = la / lb;
      v1 = vb;
      v2 = va;
    }
  }
  Mat3Q P0;
  P0.set_col(0, v1);
  P0.set_col(1, v2);
  P0.set_col(2, w0);
  ExactField F;
  auto adapted = conjugate_tensor(t, P0, F);
  if (!adapted) {
    res.status = ClassifyStatus::Failure;
    res.note = "internal: eigenbasis is singular";
    return;
  }
  if (!check_constraint_pattern(*adapted, omega)) {
    res.status = ClassifyStatus::Failure;
    res.note = "internal: adapted tensor violates the weight pattern";
    return;
  }
  auto bo = branch_classify(*adapted, omega, F);
  res.omega = omega;
  res.omega_num = omega.get_d();
  if (bo.kind == Kind::Gap) {
    res.status = ClassifyStatus::NotClassifiable;
    res.note = bo.note;
    return;
  }
  if (bo.kind == Kind::NeedNumeric) {
    run_numeric_branch(t, to_double(*adapted), omega.get_d(), to_double(P0),
                       tol, res);
    if (res.status == ClassifyStatus::Classified)
      res.note = "irrational class parameters; numeric branch";
    return;
  }
  Mat3Q P = P0 * bo.Q;
  auto em = emit_canonical(bo.fam, bo.params, true);
  bool oor = false;
  if (!em.ok) {
    oor = true;
    em = emit_canonical(bo.fam, bo.params, false);
  }
  auto conj = conjugate_tensor(t, P, F);
  if (!em.ok || !conj || !(*conj == em.tensor)) {
    res.status = ClassifyStatus::Failure;
    res.note = "internal: canonical-form witness check failed";
    return;
  }
  res.status = ClassifyStatus::Classified;
  res.family = bo.fam;
  res.params = bo.params;
  res.params_num.clear();
  for (const auto& x : bo.params) res.params_num.push_back(x.get_d());
  res.numeric = false;
  res.out_of_declared_range = oor;
  res.witness = P;
  res.witness_num = to_double(P);
}

}  // namespace

std::string status_name(ClassifyStatus s) {
  switch (s) {
    case ClassifyStatus::Classified: return "classified";
    case ClassifyStatus::NullAlgebra: return "null-algebra";
    case ClassifyStatus::NotClassifiable: return "not-classifiable";
    case ClassifyStatus::Failure: return "failure";
  }
  return "?";
}

ClassificationResult classify(const StructureTensorQ& t, double tol) {
  ClassificationResult res;
  if (is_zero_tensor(t)) {
    res.status = ClassifyStatus::NullAlgebra;
    res.note = "zero structure tensor: every point is an equilibrium";
    return res;
  }
  auto search = find_semisimple_onedim_kernel(t);
  if (search.found) {
    run_exact(t, search.d, tol, res);
  } else if (search.have_irrational_fallback) {
    run_numeric_from_derivation(t, search.irrational_fallback, tol, res);
  } else {
    res.status = ClassifyStatus::NotClassifiable;
    res.note =
        "no semisimple derivation with one-dimensional kernel and usable "
        "spectrum found";
  }
  return res;
}

ClassificationResult classify_numeric(const StructureTensorD& t, double tol) {
  StructureTensorQ tq;
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < 3; ++k) {
      auto r = reconstruct_rational(t.p[i][k], 1000000, tol);
      if (!r) {
        ClassificationResult res;
        res.status = ClassifyStatus::Failure;
        res.note =
            "structure constant not recognizably rational (denominator "
            "limit 10^6); exact derivation search unavailable";
        return res;
      }
      tq.p[i][k] = *r;
    }
  ClassificationResult res = classify(tq, tol);
  if (!res.note.empty()) res.note += "; ";
  res.note += "input snapped to rationals";
  return res;
}

AlgebraInvariants algebra_invariants(const StructureTensorQ& t) {
  AlgebraInvariants inv;
  inv.dim_der = static_cast<int>(derivation_algebra(t).size());
  inv.dim_ann = static_cast<int>(annihilator(t).size());
  inv.dim_sq = static_cast<int>(squared_subalgebra(t).size());
  return inv;
}

}  // namespace hqds
