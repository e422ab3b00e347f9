#include "hqds/tensor.hpp"

#include <random>

namespace hqds {

namespace {
bool vec_is_zero(const Vec3Q& v) {
  return sgn(v[0]) == 0 && sgn(v[1]) == 0 && sgn(v[2]) == 0;
}

// Membership of v in the span of basis (exact).
bool in_span(const std::vector<Vec3Q>& basis, const Vec3Q& v) {
  ExactField f;
  MatX<Rational> m(static_cast<int>(basis.size()), 3);
  for (int r = 0; r < static_cast<int>(basis.size()); ++r)
    for (int c = 0; c < 3; ++c) m.at(r, c) = basis[r][c];
  int r1 = rank_of(m, f);
  MatX<Rational> m2(static_cast<int>(basis.size()) + 1, 3);
  for (int r = 0; r < static_cast<int>(basis.size()); ++r)
    for (int c = 0; c < 3; ++c) m2.at(r, c) = basis[r][c];
  for (int c = 0; c < 3; ++c) m2.at(static_cast<int>(basis.size()), c) = v[c];
  return rank_of(m2, f) == r1;
}
}  // namespace

bool is_zero_tensor(const StructureTensorQ& t) {
  for (int i = 0; i < 6; ++i)
    if (!vec_is_zero(t.p[i])) return false;
  return true;
}

bool is_nilpotent_element(const StructureTensorQ& t, const Vec3Q& u) {
  if (vec_is_zero(u)) return false;
  return vec_is_zero(t.multiply(u, u));
}

bool is_idempotent_element(const StructureTensorQ& t, const Vec3Q& u) {
  if (vec_is_zero(u)) return false;
  Vec3Q d = t.multiply(u, u) - u;
  return vec_is_zero(d);
}

std::vector<Vec3Q> annihilator(const StructureTensorQ& t) {
  // u is annihilating iff L_{e_j} u = 0 for the three basis multiplications
  // read column-wise: stack the maps u -> u e_j.
  ExactField f;
  MatX<Rational> m(9, 3);
  for (int j = 0; j < 3; ++j) {
    // Row block j: component k of u*e_j = sum_i u_i (e_i e_j)_k.
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i) m.at(j * 3 + k, i) = t.prod(i, j)[k];
  }
  auto kb = kernel_basis(m, f);
  std::vector<Vec3Q> out;
  for (auto& v : kb) out.push_back(Vec3Q{{v[0], v[1], v[2]}});
  return out;
}

std::vector<Vec3Q> squared_subalgebra(const StructureTensorQ& t) {
  ExactField f;
  MatX<Rational> m(6, 3);
  for (int i = 0; i < 6; ++i)
    for (int c = 0; c < 3; ++c) m.at(i, c) = t.p[i][c];
  int rank = rref(m, f);
  std::vector<Vec3Q> out;
  for (int r = 0; r < rank; ++r)
    out.push_back(Vec3Q{{m.at(r, 0), m.at(r, 1), m.at(r, 2)}});
  return out;
}

bool is_subalgebra(const StructureTensorQ& t, const std::vector<Vec3Q>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j)
      if (!in_span(basis, t.multiply(basis[i], basis[j]))) return false;
  return true;
}

bool is_ideal(const StructureTensorQ& t, const std::vector<Vec3Q>& basis) {
  for (const auto& u : basis)
    for (int j = 0; j < 3; ++j) {
      Vec3Q ej;
      ej[j] = 1;
      if (!in_span(basis, t.multiply(u, ej))) return false;
    }
  return true;
}

bool is_isomorphism(const StructureTensorQ& t1, const StructureTensorQ& t2,
                    const Mat3Q& s) {
  ExactField f;
  if (f.is_zero(s.det())) return false;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      Vec3Q ei, ej;
      ei[i] = 1;
      ej[j] = 1;
      Vec3Q lhs = s * t1.multiply(ei, ej);
      Vec3Q rhs = t2.multiply(s * ei, s * ej);
      Vec3Q d = lhs - rhs;
      if (!(sgn(d[0]) == 0 && sgn(d[1]) == 0 && sgn(d[2]) == 0)) return false;
    }
  return true;
}

bool is_automorphism(const StructureTensorQ& t, const Mat3Q& s) {
  return is_isomorphism(t, t, s);
}

Mat3Q random_conjugation(unsigned long long seed) {
  if (seed == 0) return Mat3Q::identity();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Mat3Q m;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) m.a[r][c] = dist(rng);
    if (sgn(m.det()) != 0) return m;
  }
  return Mat3Q::identity();
}

}  // namespace hqds
