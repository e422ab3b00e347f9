// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances and time budgets are pinned here.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hqds/catalog.hpp"
#include "hqds/classifier.hpp"
#include "hqds/derivation.hpp"
#include "hqds/dynamics.hpp"
#include "hqds/idempotents.hpp"
#include "hqds/tensor.hpp"

using namespace hqds;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Rational r(long n, long d = 1) { return Rational(n, d); }

std::vector<std::vector<Rational>> samples_of(const CatalogEntry& e) {
  if (e.sample_params.empty()) return {{}};
  return e.sample_params;
}

struct Criterion {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

// --- 1: exact derivation dimensions -----------------------------------------

Criterion criterion_derivation_dimensions() {
  Criterion c;
  auto t0 = Clock::now();
  for (const auto& e : catalog()) {
    for (const auto& ps : samples_of(e)) {
      StructureTensorQ t = emit_canonical(e.family, ps).tensor;
      int dim = static_cast<int>(derivation_algebra(t).size());
      if (dim != e.dim_der)
        c.fail(e.name + ": dim Der = " + std::to_string(dim) + ", expected " +
               std::to_string(e.dim_der));
    }
  }
  const std::pair<Family, int> anchors[] = {
      {Family::A1, 1}, {Family::A2, 1},  {Family::A3, 1},  {Family::A4, 1},
      {Family::A5, 1}, {Family::A6, 1},  {Family::A7, 1},  {Family::A8, 4},
      {Family::A10, 6}, {Family::A13, 4}, {Family::A15, 4}, {Family::A32, 5},
      {Family::A30, 3}};
  for (const auto& [fam, want] : anchors)
    if (catalog_entry(fam).dim_der != want)
      c.fail(family_name(fam) + ": anchor expects dim Der " +
             std::to_string(want));
  double dt = seconds_since(t0);
  if (dt >= 5.0) c.fail("runtime " + std::to_string(dt) + "s >= 5s");
  return c;
}

// --- 2: constraint dimension counts -----------------------------------------

int weight_count_oracle(const Rational& omega) {
  // Independent count: diagonal derivation with weights (1, omega, 0) allows
  // exactly the structure constants t_ij^m with w_m = w_i + w_j.
  Rational w[3] = {Rational(1), omega, Rational(0)};
  int n = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      for (int m = 0; m < 3; ++m)
        if (w[m] == w[i] + w[j]) ++n;
  return n;
}

Criterion criterion_constraint_dimensions() {
  Criterion c;
  const std::pair<Rational, int> cases[] = {
      {r(-1), 4}, {r(1), 5}, {r(2), 4}, {r(3), 3}};
  for (const auto& [omega, want] : cases) {
    int got = constraint_solution_dimension(omega);
    if (got != want)
      c.fail("omega=" + format_rational(omega) + ": got " +
             std::to_string(got) + ", expected " + std::to_string(want));
    if (got != weight_count_oracle(omega))
      c.fail("omega=" + format_rational(omega) +
             ": disagrees with brute-force weight count");
  }
  return c;
}

// --- 3: classifier round trip ------------------------------------------------

Criterion criterion_round_trip() {
  Criterion c;
  auto t0 = Clock::now();
  for (const auto& e : catalog()) {
    for (const auto& ps : samples_of(e)) {
      auto res = classify(emit_canonical(e.family, ps).tensor);
      if (res.status != ClassifyStatus::Classified || res.family != e.family ||
          res.numeric || res.params != ps)
        c.fail(e.name + ": round trip failed");
    }
  }
  double dt = seconds_since(t0);
  if (dt >= 10.0) c.fail("runtime " + std::to_string(dt) + "s >= 10s");
  return c;
}

// --- 4: conjugation invariance -----------------------------------------------

Criterion criterion_conjugation_invariance() {
  Criterion c;
  auto t0 = Clock::now();
  ExactField f;
  unsigned long long seed = 1000;
  for (const auto& e : catalog()) {
    for (const auto& ps : samples_of(e)) {
      StructureTensorQ canonical = emit_canonical(e.family, ps).tensor;
      for (int k = 0; k < 25; ++k) {
        auto input = conjugate_tensor(canonical, random_conjugation(++seed), f);
        if (!input) {
          c.fail(e.name + ": conjugation not invertible");
          continue;
        }
        auto res = classify(*input);
        if (res.status != ClassifyStatus::Classified ||
            res.family != e.family || res.numeric || res.params != ps) {
          c.fail(e.name + ": conjugate #" + std::to_string(k) +
                 " misclassified");
          break;
        }
      }
    }
  }
  double dt = seconds_since(t0);
  if (dt >= 60.0) c.fail("runtime " + std::to_string(dt) + "s >= 60s");
  return c;
}

// --- 5: fingerprint separation -----------------------------------------------

Criterion criterion_fingerprints() {
  Criterion c;
  struct Fingerprint {
    int dd, da, ds;
    IdempotentLocus locus;
    std::string label;
    std::string params;
  };
  std::vector<Fingerprint> fps;
  std::vector<std::string> owners;
  for (const auto& e : catalog()) {
    for (const auto& ps : samples_of(e)) {
      StructureTensorQ t = emit_canonical(e.family, ps).tensor;
      AlgebraInvariants inv = algebra_invariants(t);
      if (inv.dim_der != e.dim_der || inv.dim_ann != e.dim_ann ||
          inv.dim_sq != e.dim_sq)
        c.fail(e.name + ": invariants differ from catalog");
      auto res = classify(t);
      if (res.status != ClassifyStatus::Classified) {
        c.fail(e.name + ": unclassifiable canonical tensor");
        continue;
      }
      std::string pstr;
      for (const auto& p : res.params) pstr += format_rational(p) + ",";
      fps.push_back({inv.dim_der, inv.dim_ann, inv.dim_sq, e.locus,
                     family_name(res.family), pstr});
      owners.push_back(e.name + "(" + pstr + ")");
    }
  }
  for (std::size_t i = 0; i < fps.size(); ++i)
    for (std::size_t j = i + 1; j < fps.size(); ++j) {
      const auto& a = fps[i];
      const auto& b = fps[j];
      bool same = a.dd == b.dd && a.da == b.da && a.ds == b.ds &&
                  a.locus == b.locus && a.label == b.label &&
                  a.params == b.params;
      if (same) c.fail(owners[i] + " and " + owners[j] + " collide");
    }
  return c;
}

// --- 6: printed systems vs tables --------------------------------------------

Criterion criterion_printed_systems() {
  Criterion c;
  std::set<Family> mismatched;
  for (const auto& e : catalog()) {
    std::vector<Rational> ps = samples_of(e)[0];
    if (!(printed_system_tensor(e.family, ps) ==
          emit_canonical(e.family, ps).tensor))
      mismatched.insert(e.family);
  }
  std::set<Family> documented;
  for (const auto& er : printed_system_errata()) documented.insert(er.family);
  if (mismatched != documented) {
    std::string got;
    for (Family f : mismatched) got += family_name(f) + " ";
    c.fail("mismatch set {" + got + "} differs from documented errata");
  }
  if (documented != std::set<Family>{Family::A5, Family::A11, Family::A23,
                                     Family::A32})
    c.fail("documented errata set changed unexpectedly");
  return c;
}

// --- 7: idempotent oracle ----------------------------------------------------

Criterion criterion_idempotent_oracle() {
  Criterion c;
  struct Case {
    Family fam;
    std::vector<Rational> ps;
    // Locus membership predicate for the numeric hits.
    bool (*on_locus)(const Vec3D&);
  };
  auto is_e3 = [](const Vec3D& p) {
    return std::abs(p[0]) < 1e-7 && std::abs(p[1]) < 1e-7 &&
           std::abs(p[2] - 1) < 1e-7;
  };
  auto on_locus_a6 = [](const Vec3D& p) {
    // e3 plus the curve x e1 - (1/x) e2 + 2 e3 (at parameter a = 1/4)
    bool point = std::abs(p[0]) < 1e-7 && std::abs(p[1]) < 1e-7 &&
                 std::abs(p[2] - 1) < 1e-7;
    bool curve = std::abs(p[2] - 2) < 1e-7 &&
                 std::abs(p[0] * p[1] + 1) < 1e-7;
    return point || curve;
  };
  auto on_curve_a17 = [](const Vec3D& p) {
    // idempotent curve x e1 + (1/(4x)) e2 + (1/2) e3
    return std::abs(p[2] - 0.5) < 1e-7 &&
           std::abs(p[0] * p[1] - 0.25) < 1e-7;
  };
  auto on_curve_a26 = [](const Vec3D& p) {
    // idempotent curve (y^2) e1 + y e2 + e3
    return std::abs(p[2] - 1) < 1e-7 &&
           std::abs(p[0] - p[1] * p[1]) < 1e-7;
  };
  const Case cases[] = {
      {Family::A1, {}, +is_e3},   {Family::A6, {r(1, 4)}, +on_locus_a6},
      {Family::A10, {}, nullptr}, {Family::A17, {}, +on_curve_a17},
      {Family::A26, {}, +on_curve_a26},
  };
  for (const auto& cs : cases) {
    StructureTensorQ t = emit_canonical(cs.fam, cs.ps).tensor;
    auto hits = find_idempotents(t);
    if (hits.empty()) {
      c.fail(family_name(cs.fam) + ": no idempotents found");
      continue;
    }
    bool found_e3 = false;
    for (const auto& h : hits) {
      if (h.residual >= 1e-10)
        c.fail(family_name(cs.fam) + ": residual " +
               std::to_string(h.residual));
      if (h.exact_verified && !is_idempotent_element(t, h.exact))
        c.fail(family_name(cs.fam) + ": exact verification inconsistent");
      if (cs.on_locus && !cs.on_locus(h.point))
        c.fail(family_name(cs.fam) + ": hit off the expected locus");
      if (std::abs(h.point[0]) < 1e-7 && std::abs(h.point[1]) < 1e-7 &&
          std::abs(h.point[2] - 1) < 1e-7)
        found_e3 = true;
    }
    if (cs.fam == Family::A10 && !found_e3)
      c.fail("A10: e3 not among the hits");
  }
  return c;
}

// --- 8: dynamics suite -------------------------------------------------------

Criterion criterion_dynamics() {
  Criterion c;
  auto t0 = Clock::now();

  // (a) 100 nilpotent points are exact equilibria. Annihilator elements are
  // nilpotent; scale basis vectors and pairs by assorted rationals.
  const Rational scales[] = {r(1), r(-1), r(2), r(1, 2), r(-3), r(5, 3),
                             r(7), r(-1, 4)};
  int checked = 0;
  for (const auto& e : catalog()) {
    if (checked >= 100) break;
    std::vector<Rational> ps = samples_of(e)[0];
    StructureTensorQ t = emit_canonical(e.family, ps).tensor;
    StructureTensorD td = to_double(t);
    auto ann = annihilator(t);
    std::vector<Vec3Q> points;
    for (const auto& v : ann)
      for (const auto& s : scales) {
        Vec3Q u;
        for (int k = 0; k < 3; ++k) u[k] = s * v[k];
        points.push_back(u);
      }
    if (ann.size() >= 2)
      for (const auto& s : scales) {
        Vec3Q u;
        for (int k = 0; k < 3; ++k) u[k] = ann[0][k] + s * ann[1][k];
        points.push_back(u);
      }
    for (const auto& u : points) {
      if (checked >= 100) break;
      Vec3Q sq = t.multiply(u, u);
      if (!(sq[0] == 0 && sq[1] == 0 && sq[2] == 0)) {
        c.fail(e.name + ": sampled point is not exactly nilpotent");
        continue;
      }
      Vec3D ud;
      for (int k = 0; k < 3; ++k) ud[k] = u[k].get_d();
      if (equilibrium_residual(td, ud) >= 1e-12)
        c.fail(e.name + ": numeric equilibrium residual too large");
      ++checked;
    }
  }
  if (checked < 100)
    c.fail("only " + std::to_string(checked) + " nilpotent points sampled");

  // (b) ray solutions along canonical idempotents.
  for (const auto& e : catalog()) {
    if (e.locus == IdempotentLocus::Empty) continue;
    std::vector<Rational> ps = samples_of(e)[0];
    auto u = canonical_idempotent(e.family, ps);
    if (!u) {
      c.fail(e.name + ": missing canonical idempotent");
      continue;
    }
    StructureTensorD td = to_double(emit_canonical(e.family, ps).tensor);
    Vec3D ud;
    for (int k = 0; k < 3; ++k) ud[k] = (*u)[k].get_d();
    double err = ray_solution_error(td, ud, -1.0, 1e-4, 5000);
    if (err >= 1e-6)
      c.fail(e.name + ": ray error " + std::to_string(err));
  }

  // (c) planar orbits.
  for (Family f : {Family::A8, Family::A9}) {
    StructureTensorD td = to_double(emit_canonical(f, {}).tensor);
    Vec3D x0;
    x0[0] = 0.3;
    x0[1] = -0.2;
    x0[2] = -0.5;
    double p = planarity_statistic(td, x0, 1e-3, 2000);
    if (p >= 1e-8)
      c.fail(family_name(f) + ": planarity " + std::to_string(p));
  }

  // (d) every catalog ideal is flow-invariant.
  for (const auto& e : catalog()) {
    std::vector<Rational> ps = samples_of(e)[0];
    StructureTensorD td = to_double(emit_canonical(e.family, ps).tensor);
    for (const auto& basis : e.ideals) {
      std::vector<Vec3D> bd;
      Vec3D x0;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        Vec3D v;
        for (int k = 0; k < 3; ++k) v[k] = basis[i][k].get_d();
        bd.push_back(v);
        double w = (i == 0) ? 0.4 : -0.3;
        for (int k = 0; k < 3; ++k) x0[k] += w * v[k];
      }
      double drift = invariant_set_drift(td, bd, x0, 1e-3, 1000);
      if (drift >= 1e-8)
        c.fail(e.name + ": ideal drift " + std::to_string(drift));
    }
  }

  double dt = seconds_since(t0);
  if (dt >= 120.0) c.fail("runtime " + std::to_string(dt) + "s >= 120s");
  return c;
}

}  // namespace

int main() {
  struct Row {
    const char* name;
    Criterion (*run)();
  };
  const Row rows[] = {
      {"1 derivation dimensions exact for all 35 families",
       criterion_derivation_dimensions},
      {"2 constraint solution dimensions (4,5,4,3) with brute-force check",
       criterion_constraint_dimensions},
      {"3 classifier round trip on all canonical tensors",
       criterion_round_trip},
      {"4 conjugation invariance, 25 random changes of basis per sample",
       criterion_conjugation_invariance},
      {"5 invariant fingerprints separate all catalog entries",
       criterion_fingerprints},
      {"6 printed systems match tables except documented errata "
       "(A5, A11, A23, A32)",
       criterion_printed_systems},
      {"7 Newton idempotent finder recovers known loci points",
       criterion_idempotent_oracle},
      {"8 dynamics: equilibria, rays, planarity, ideal invariance",
       criterion_dynamics},
  };
  bool all_ok = true;
  for (const auto& row : rows) {
    Criterion c = row.run();
    std::printf("CRITERION %s: %s%s%s\n", row.name, c.ok ? "PASS" : "FAIL",
                c.detail.empty() ? "" : " -- ", c.detail.c_str());
    std::fflush(stdout);
    if (!c.ok) all_ok = false;
  }
  return all_ok ? 0 : 1;
}
