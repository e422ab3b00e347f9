#include "hqds/dynamics.hpp"

#include <cmath>

namespace hqds {

namespace {

double norm_inf(const Vec3D& v) {
  return std::max({std::fabs(v[0]), std::fabs(v[1]), std::fabs(v[2])});
}

double norm2(const Vec3D& v) {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

double dot(const Vec3D& a, const Vec3D& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

double det3(const Vec3D& a, const Vec3D& b, const Vec3D& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) -
         a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

}  // namespace

Vec3D rk4_step(const StructureTensorD& t, const Vec3D& x, double dt) {
  Vec3D k1 = t.vector_field(x);
  Vec3D k2 = t.vector_field(x + k1 * (dt / 2));
  Vec3D k3 = t.vector_field(x + k2 * (dt / 2));
  Vec3D k4 = t.vector_field(x + k3 * dt);
  return x + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (dt / 6);
}

Trajectory integrate(const StructureTensorD& t, const Vec3D& x0, double dt,
                     int steps, double blowup_bound) {
  Trajectory tr;
  tr.points.reserve(static_cast<std::size_t>(steps) + 1);
  Vec3D x = x0;
  tr.points.push_back(x);
  for (int i = 0; i < steps; ++i) {
    x = rk4_step(t, x, dt);
    if (norm_inf(x) > blowup_bound || !std::isfinite(norm_inf(x))) {
      tr.blew_up = true;
      break;
    }
    tr.points.push_back(x);
  }
  return tr;
}

double equilibrium_residual(const StructureTensorD& t, const Vec3D& x) {
  return norm_inf(t.vector_field(x));
}

double ray_solution_error(const StructureTensorD& t, const Vec3D& u, double c0,
                          double dt, int steps) {
  Vec3D x = u * c0;
  double err = 0;
  for (int i = 1; i <= steps; ++i) {
    x = rk4_step(t, x, dt);
    double s = i * dt;
    double denom = 1 - c0 * s;
    if (std::fabs(denom) < 1e-6) break;  // finite-time blow-up approaching
    Vec3D ref = u * (c0 / denom);
    err = std::max(err, norm_inf(x - ref));
  }
  return err;
}

double planarity_statistic(const StructureTensorD& t, const Vec3D& x0,
                           double dt, int steps) {
  double stat = 0;
  Trajectory tr = integrate(t, x0, dt, steps);
  for (const auto& x : tr.points) {
    Vec3D d1 = t.vector_field(x);
    double n1 = norm2(d1);
    if (n1 < 1e-12) continue;
    Vec3D d2 = t.multiply(x, d1) * 2.0;
    Vec3D d3 = t.multiply(d1, d1) * 2.0 + t.multiply(x, d2) * 2.0;
    stat = std::max(stat, std::fabs(det3(d1, d2, d3)) / (n1 * n1 * n1));
  }
  return stat;
}

double invariant_set_drift(const StructureTensorD& t,
                           const std::vector<Vec3D>& basis, const Vec3D& x0,
                           double dt, int steps) {
  // Orthonormalize the span.
  std::vector<Vec3D> q;
  for (const auto& b : basis) {
    Vec3D v = b;
    for (const auto& e : q) v = v - e * dot(v, e);
    double n = norm2(v);
    if (n > 1e-12) q.push_back(v * (1.0 / n));
  }
  double drift = 0;
  Trajectory tr = integrate(t, x0, dt, steps);
  for (const auto& x : tr.points) {
    Vec3D r = x;
    for (const auto& e : q) r = r - e * dot(r, e);
    drift = std::max(drift, norm2(r) / std::max(1.0, norm2(x)));
  }
  return drift;
}

}  // namespace hqds
