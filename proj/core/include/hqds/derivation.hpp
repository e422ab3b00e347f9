#pragma once

#include <optional>
#include <vector>

#include "hqds/polynomial.hpp"
#include "hqds/tensor.hpp"

namespace hqds {

// 18x9 linear system expressing D(e_i e_j) = D(e_i) e_j + e_i D(e_j) on the
// six basis pairs; unknowns are the entries of D in column-major order
// (x[3c + r] = D_{rc}).
MatX<Rational> leibniz_system(const StructureTensorQ& t);

// Basis of Der A (kernel of the Leibniz system), deterministic order.
std::vector<Mat3Q> derivation_algebra(const StructureTensorQ& t);

bool is_derivation(const StructureTensorQ& t, const Mat3Q& d);

// Jordan-Chevalley semisimple part (a polynomial in m, computed by Newton
// iteration against the squarefree part of the minimal polynomial).
Mat3Q semisimple_part(const Mat3Q& m);

// Dimension of the space of structure tensors compatible with the diagonal
// derivation diag(1, omega, 0), computed as the kernel dimension of the
// Leibniz system with the tensor as unknown.
int constraint_solution_dimension(const Rational& omega);

// The 18 structure constants of a tensor, in pair order; convenience view
// used when reading off an adapted basis.
struct AdaptedConstants {
  StructureTensorQ tensor;  // tensor rewritten in the eigenbasis
  Rational omega;           // spectrum (1, omega, 0)
  Mat3Q basis;              // columns: eigenvectors for 1, omega, 0
};

// True when the tensor satisfies the vanishing pattern forced by the
// derivation diag(1, omega, 0).
bool check_constraint_pattern(const StructureTensorQ& t, const Rational& omega);

struct DerivationSearchResult {
  bool found = false;
  Mat3Q d;                       // semisimple, one-dimensional kernel
  bool rational_spectrum = false;
  // Char poly of d is t (t^2 + b t + c); spectrum data for callers.
  Rational quad_b, quad_c;
  // Best non-rational fallback (real irrational spectrum), if any.
  bool have_irrational_fallback = false;
  Mat3Q irrational_fallback;
};

// Searches Der A for a semisimple derivation whose kernel is exactly
// one-dimensional and whose spectrum is rational. Deterministic: basis
// elements, small pair combinations, a fixed-seed integer sweep, singular
// pencil roots, Jordan-Chevalley semisimple parts, and a quadratic trick
// that converts a complex or irrational spectrum pair into a rational
// equal-eigenvalue derivation when the result still satisfies Leibniz.
DerivationSearchResult find_semisimple_onedim_kernel(const StructureTensorQ& t);

}  // namespace hqds
