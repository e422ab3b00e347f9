#pragma once

#include <array>
#include <cassert>
#include <optional>
#include <vector>

#include "hqds/field.hpp"

namespace hqds {

template <class S>
struct Vec3 {
  std::array<S, 3> v{};

  S& operator[](int i) { return v[i]; }
  const S& operator[](int i) const { return v[i]; }

  Vec3 operator+(const Vec3& o) const {
    Vec3 r;
    for (int i = 0; i < 3; ++i) r[i] = v[i] + o[i];
    return r;
  }
  Vec3 operator-(const Vec3& o) const {
    Vec3 r;
    for (int i = 0; i < 3; ++i) r[i] = v[i] - o[i];
    return r;
  }
  Vec3 operator*(const S& c) const {
    Vec3 r;
    for (int i = 0; i < 3; ++i) r[i] = v[i] * c;
    return r;
  }
};

template <class S>
struct Mat3 {
  // a[r][c], row r, column c.
  std::array<std::array<S, 3>, 3> a{};

  static Mat3 identity() {
    Mat3 m;
    for (int i = 0; i < 3; ++i) m.a[i][i] = S(1);
    return m;
  }
  static Mat3 zero() { return Mat3{}; }

  S& operator()(int r, int c) { return a[r][c]; }
  const S& operator()(int r, int c) const { return a[r][c]; }

  Vec3<S> col(int c) const {
    Vec3<S> v;
    for (int r = 0; r < 3; ++r) v[r] = a[r][c];
    return v;
  }
  void set_col(int c, const Vec3<S>& v) {
    for (int r = 0; r < 3; ++r) a[r][c] = v[r];
  }

  bool operator==(const Mat3& o) const {
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        if (!(a[r][c] == o.a[r][c])) return false;
    return true;
  }

  Mat3 operator+(const Mat3& o) const {
    Mat3 m;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) m.a[r][c] = a[r][c] + o.a[r][c];
    return m;
  }
  Mat3 operator-(const Mat3& o) const {
    Mat3 m;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) m.a[r][c] = a[r][c] - o.a[r][c];
    return m;
  }
  Mat3 operator*(const Mat3& o) const {
    Mat3 m;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        S s{};
        for (int k = 0; k < 3; ++k) s += a[r][k] * o.a[k][c];
        m.a[r][c] = s;
      }
    return m;
  }
  Vec3<S> operator*(const Vec3<S>& x) const {
    Vec3<S> y;
    for (int r = 0; r < 3; ++r) {
      S s{};
      for (int c = 0; c < 3; ++c) s += a[r][c] * x[c];
      y[r] = s;
    }
    return y;
  }
  Mat3 scaled(const S& c) const {
    Mat3 m;
    for (int r = 0; r < 3; ++r)
      for (int k = 0; k < 3; ++k) m.a[r][k] = a[r][k] * c;
    return m;
  }
  S trace() const { return a[0][0] + a[1][1] + a[2][2]; }
  S det() const {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  }
  Mat3 adjugate() const {
    Mat3 m;
    m.a[0][0] = a[1][1] * a[2][2] - a[1][2] * a[2][1];
    m.a[0][1] = a[0][2] * a[2][1] - a[0][1] * a[2][2];
    m.a[0][2] = a[0][1] * a[1][2] - a[0][2] * a[1][1];
    m.a[1][0] = a[1][2] * a[2][0] - a[1][0] * a[2][2];
    m.a[1][1] = a[0][0] * a[2][2] - a[0][2] * a[2][0];
    m.a[1][2] = a[0][2] * a[1][0] - a[0][0] * a[1][2];
    m.a[2][0] = a[1][0] * a[2][1] - a[1][1] * a[2][0];
    m.a[2][1] = a[0][1] * a[2][0] - a[0][0] * a[2][1];
    m.a[2][2] = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    return m;
  }
};

template <class F>
std::optional<Mat3<typename F::S>> inverse(const Mat3<typename F::S>& m,
                                           const F& f) {
  using S = typename F::S;
  S d = m.det();
  if (f.is_zero(d)) return std::nullopt;
  Mat3<S> adj = m.adjugate();
  Mat3<S> inv;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) inv.a[r][c] = adj.a[r][c] / d;
  return inv;
}

// Dense row-major matrix of arbitrary (small) size.
template <class S>
struct MatX {
  int rows = 0, cols = 0;
  std::vector<S> a;

  MatX() = default;
  MatX(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  S& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const S& at(int r, int c) const {
    return a[static_cast<std::size_t>(r) * cols + c];
  }
};

// Reduced row echelon form in place; first-nonzero pivoting in column order
// so the result is deterministic. Returns the rank.
template <class F>
int rref(MatX<typename F::S>& m, const F& f) {
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int piv = -1;
    for (int r = rank; r < m.rows; ++r)
      if (!f.is_zero(m.at(r, c))) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int k = 0; k < m.cols; ++k) std::swap(m.at(piv, k), m.at(rank, k));
    typename F::S inv_p = m.at(rank, c);
    for (int k = 0; k < m.cols; ++k) m.at(rank, k) = m.at(rank, k) / inv_p;
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank) continue;
      typename F::S factor = m.at(r, c);
      if (f.is_zero(factor)) continue;
      for (int k = 0; k < m.cols; ++k)
        m.at(r, k) = m.at(r, k) - factor * m.at(rank, k);
    }
    ++rank;
  }
  return rank;
}

template <class F>
int rank_of(MatX<typename F::S> m, const F& f) {
  return rref(m, f);
}

// Kernel basis from the reduced echelon form; one vector per free column,
// emitted in column order.
template <class F>
std::vector<std::vector<typename F::S>> kernel_basis(MatX<typename F::S> m,
                                                     const F& f) {
  using S = typename F::S;
  int rank = rref(m, f);
  std::vector<int> pivot_col(rank, -1);
  std::vector<bool> is_pivot(m.cols, false);
  int r = 0;
  for (int c = 0; c < m.cols && r < rank; ++c) {
    if (!f.is_zero(m.at(r, c))) {
      pivot_col[r] = c;
      is_pivot[c] = true;
      ++r;
    }
  }
  std::vector<std::vector<S>> basis;
  for (int c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<S> v(m.cols, S{});
    v[c] = S(1);
    for (int rr = 0; rr < rank; ++rr) v[pivot_col[rr]] = -m.at(rr, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

using Vec3Q = Vec3<Rational>;
using Mat3Q = Mat3<Rational>;
using Vec3D = Vec3<double>;
using Mat3D = Mat3<double>;

inline Mat3D to_double(const Mat3Q& m) {
  Mat3D d;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) d.a[r][c] = m.a[r][c].get_d();
  return d;
}

inline Vec3D to_double(const Vec3Q& v) {
  return Vec3D{{v[0].get_d(), v[1].get_d(), v[2].get_d()}};
}

}  // namespace hqds
