#pragma once

#include <vector>

#include "hqds/tensor.hpp"

namespace hqds {

// Classical RK4 for x' = x * x.
Vec3D rk4_step(const StructureTensorD& t, const Vec3D& x, double dt);

struct Trajectory {
  std::vector<Vec3D> points;  // includes the initial point
  bool blew_up = false;       // stopped early on |x|_inf > blowup_bound
};

Trajectory integrate(const StructureTensorD& t, const Vec3D& x0, double dt,
                     int steps, double blowup_bound = 1e9);

// Max-norm of the vector field at x (zero iff x is an equilibrium; nilpotent
// algebra elements are exactly the nonzero equilibria).
double equilibrium_residual(const StructureTensorD& t, const Vec3D& x);

// For an idempotent u the ray x(s) = c(s) u solves the system with
// c(s) = c0 / (1 - c0 s). Returns the max deviation of the integrated
// trajectory from the closed form over the integration window.
double ray_solution_error(const StructureTensorD& t, const Vec3D& u, double c0,
                          double dt, int steps);

// Max over the trajectory of |det[x', x'', x''']| / |x'|^3 with
// x'' = 2 x x' and x''' = 2 x' x' + 2 x x''; near zero when the orbit stays
// planar. Points with |x'| < 1e-12 are skipped.
double planarity_statistic(const StructureTensorD& t, const Vec3D& x0,
                           double dt, int steps);

// Max relative distance of the trajectory from span(basis) when started
// inside it; the span of an ideal (or subalgebra) is invariant under the
// flow.
double invariant_set_drift(const StructureTensorD& t,
                           const std::vector<Vec3D>& basis, const Vec3D& x0,
                           double dt, int steps);

}  // namespace hqds
