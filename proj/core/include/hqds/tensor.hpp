#pragma once

#include <optional>
#include <vector>

#include "hqds/linalg.hpp"

namespace hqds {

// Symmetric structure tensor of a commutative algebra on R^3: stores the
// products e_i e_j for i <= j; multiply() extends bilinearly. The associated
// quadratic differential system is x' = x * x.
template <class S>
struct StructureTensor {
  // Pair order: (0,0) (0,1) (0,2) (1,1) (1,2) (2,2).
  std::array<Vec3<S>, 6> p{};

  static int pair_index(int i, int j) {
    if (i > j) std::swap(i, j);
    static constexpr int idx[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
    return idx[i][j];
  }

  Vec3<S>& prod(int i, int j) { return p[pair_index(i, j)]; }
  const Vec3<S>& prod(int i, int j) const { return p[pair_index(i, j)]; }

  Vec3<S> multiply(const Vec3<S>& u, const Vec3<S>& v) const {
    Vec3<S> r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const Vec3<S>& pij = prod(i, j);
        S w = u[i] * v[j];
        for (int k = 0; k < 3; ++k) r[k] += pij[k] * w;
      }
    return r;
  }

  Vec3<S> vector_field(const Vec3<S>& x) const { return multiply(x, x); }

  Mat3<S> left_multiplication(const Vec3<S>& u) const {
    Mat3<S> L;
    for (int j = 0; j < 3; ++j) {
      Vec3<S> ej;
      ej[j] = S(1);
      Vec3<S> col = multiply(u, ej);
      L.set_col(j, col);
    }
    return L;
  }

  bool operator==(const StructureTensor& o) const {
    for (int i = 0; i < 6; ++i)
      for (int k = 0; k < 3; ++k)
        if (!(p[i][k] == o.p[i][k])) return false;
    return true;
  }
};

// Change of basis: columns of P are the new basis vectors in old coordinates;
// the new tensor satisfies (u o v) = P^-1 (Pu * Pv).
template <class F>
std::optional<StructureTensor<typename F::S>> conjugate_tensor(
    const StructureTensor<typename F::S>& t, const Mat3<typename F::S>& P,
    const F& f) {
  using S = typename F::S;
  auto Pinv = inverse(P, f);
  if (!Pinv) return std::nullopt;
  StructureTensor<S> r;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      Vec3<S> w = t.multiply(P.col(i), P.col(j));
      r.prod(i, j) = (*Pinv) * w;
    }
  return r;
}

using StructureTensorQ = StructureTensor<Rational>;
using StructureTensorD = StructureTensor<double>;

inline StructureTensorD to_double(const StructureTensorQ& t) {
  StructureTensorD d;
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < 3; ++k) d.p[i][k] = t.p[i][k].get_d();
  return d;
}

bool is_zero_tensor(const StructureTensorQ& t);
bool is_nilpotent_element(const StructureTensorQ& t, const Vec3Q& u);
bool is_idempotent_element(const StructureTensorQ& t, const Vec3Q& u);

// Kernel of u -> (u e1, u e2, u e3).
std::vector<Vec3Q> annihilator(const StructureTensorQ& t);
// Basis of span{e_i e_j}.
std::vector<Vec3Q> squared_subalgebra(const StructureTensorQ& t);

// Subspace queries for the span of the given vectors.
bool is_subalgebra(const StructureTensorQ& t, const std::vector<Vec3Q>& basis);
bool is_ideal(const StructureTensorQ& t, const std::vector<Vec3Q>& basis);

// s maps algebra 1 onto algebra 2: s(u *1 v) = s(u) *2 s(v), s invertible.
bool is_isomorphism(const StructureTensorQ& t1, const StructureTensorQ& t2,
                    const Mat3Q& s);
bool is_automorphism(const StructureTensorQ& t, const Mat3Q& s);

// Deterministic invertible rational matrix with entries in {-3..3};
// seed 0 yields the identity.
Mat3Q random_conjugation(unsigned long long seed);

}  // namespace hqds
