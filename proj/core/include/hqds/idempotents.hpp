#pragma once

#include <vector>

#include "hqds/tensor.hpp"

namespace hqds {

// Nonzero solution of u*u = u found by Newton iteration, deduplicated.
struct IdempotentHit {
  Vec3D point;
  double residual = 0;      // max-norm of u*u - u at the numeric point
  bool exact_verified = false;
  Vec3Q exact;              // set when the point snapped to a rational
                            // idempotent verified exactly
};

struct IdempotentSearchOptions {
  double grid_radius = 3.0;   // integer grid [-r, r]^3 of Newton starts
  double grid_step = 1.0;
  int max_iterations = 50;
  double residual_tol = 1e-12;
  double dedup_tol = 1e-8;
  unsigned long snap_max_den = 1000000;
};

// Newton search for idempotents of the algebra: F(u) = u*u - u, with
// Jacobian 2 L_u - I. Converged nonzero points are deduplicated and then
// snapped to rationals and re-verified exactly where possible.
std::vector<IdempotentHit> find_idempotents(
    const StructureTensorQ& t, const IdempotentSearchOptions& opt = {});

}  // namespace hqds
