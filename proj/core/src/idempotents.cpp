#include "hqds/idempotents.hpp"

#include <cmath>

namespace hqds {

namespace {

double max_abs(const Vec3D& v) {
  return std::max({std::fabs(v[0]), std::fabs(v[1]), std::fabs(v[2])});
}

}  // namespace

std::vector<IdempotentHit> find_idempotents(const StructureTensorQ& t,
                                            const IdempotentSearchOptions& opt) {
  StructureTensorD td = to_double(t);
  NumericField f;
  std::vector<IdempotentHit> hits;

  auto already_found = [&](const Vec3D& u) {
    for (const auto& h : hits)
      if (max_abs(Vec3D{{u[0] - h.point[0], u[1] - h.point[1],
                         u[2] - h.point[2]}}) < opt.dedup_tol)
        return true;
    return false;
  };

  for (double x = -opt.grid_radius; x <= opt.grid_radius; x += opt.grid_step)
    for (double y = -opt.grid_radius; y <= opt.grid_radius; y += opt.grid_step)
      for (double z = -opt.grid_radius; z <= opt.grid_radius;
           z += opt.grid_step) {
        Vec3D u{{x, y, z}};
        bool converged = false;
        for (int it = 0; it < opt.max_iterations; ++it) {
          Vec3D fu = td.multiply(u, u) - u;
          if (max_abs(fu) < opt.residual_tol) {
            converged = true;
            break;
          }
          // Jacobian of u -> u*u - u is 2 L_u - I.
          Mat3D jac = td.left_multiplication(u).scaled(2.0) -
                      Mat3D::identity();
          auto inv = inverse(jac, f);
          if (!inv) break;
          u = u - (*inv) * fu;
          if (max_abs(u) > 1e9) break;
        }
        if (!converged || max_abs(u) < 1e-6) continue;
        if (already_found(u)) continue;
        IdempotentHit hit;
        hit.point = u;
        hit.residual = max_abs(td.multiply(u, u) - u);
        Vec3Q snapped;
        bool all_rational = true;
        for (int i = 0; i < 3; ++i) {
          auto r = reconstruct_rational(u[i], opt.snap_max_den, 1e-7);
          if (!r) {
            all_rational = false;
            break;
          }
          snapped[i] = *r;
        }
        if (all_rational && is_idempotent_element(t, snapped)) {
          hit.exact_verified = true;
          hit.exact = snapped;
        }
        hits.push_back(hit);
      }
  return hits;
}

}  // namespace hqds
