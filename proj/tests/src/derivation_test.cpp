#include <doctest.h>

#include "hqds/catalog.hpp"
#include "hqds/derivation.hpp"

using namespace hqds;

namespace {
Rational r(long n, long d = 1) { return Rational(n, d); }

Mat3Q diag(const Rational& a, const Rational& b, const Rational& c) {
  Mat3Q m;
  m.a[0][0] = a;
  m.a[1][1] = b;
  m.a[2][2] = c;
  return m;
}

// Independent oracle: for the diagonal derivation with weights w, the
// allowed structure constants t_ij^m are exactly those with w_m = w_i + w_j.
int weight_count(const Rational& omega) {
  Rational w[3] = {Rational(1), omega, Rational(0)};
  int n = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      for (int m = 0; m < 3; ++m)
        if (w[m] == w[i] + w[j]) ++n;
  return n;
}
}  // namespace

TEST_CASE("zero algebra has the full derivation algebra") {
  CHECK(derivation_algebra(StructureTensorQ{}).size() == 9);
}

TEST_CASE("derivations of the simplest catalog algebra") {
  StructureTensorQ t = emit_canonical(Family::A1, {}).tensor;
  auto ders = derivation_algebra(t);
  REQUIRE(ders.size() == 1);
  for (const auto& d : ders) CHECK(is_derivation(t, d));
  CHECK(is_derivation(t, diag(1, -1, 0)));
  CHECK_FALSE(is_derivation(t, diag(1, 1, 1)));
}

TEST_CASE("semisimple part of a Jordan block") {
  Mat3Q j = diag(2, 2, 5);
  j.a[0][1] = 1;
  Mat3Q s = semisimple_part(j);
  CHECK(s == diag(2, 2, 5));
  CHECK(is_semisimple(s));
  // nilpotent part commutes (difference of polynomials in j)
  Mat3Q n = j;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) n.a[a][b] -= s.a[a][b];
  CHECK(n * s == s * n);
  // already-semisimple input is a fixed point
  Mat3Q d = diag(1, r(-1, 2), 0);
  CHECK(semisimple_part(d) == d);
}

TEST_CASE("constraint dimension matches the weight-count oracle") {
  for (const Rational& omega :
       {r(-1), r(1), r(2), r(3), r(1, 2), r(-2), r(5, 3)}) {
    CHECK(constraint_solution_dimension(omega) == weight_count(omega));
  }
  // pinned values for the special spectra
  CHECK(constraint_solution_dimension(r(-1)) == 4);
  CHECK(constraint_solution_dimension(r(1)) == 5);
  CHECK(constraint_solution_dimension(r(2)) == 4);
  CHECK(constraint_solution_dimension(r(3)) == 3);
}

TEST_CASE("constraint pattern check") {
  StructureTensorQ t = emit_canonical(Family::A8, {}).tensor;
  CHECK(check_constraint_pattern(t, r(1)));
  StructureTensorQ bad = t;
  bad.prod(0, 0)[0] = 1;  // e1^2 = e1 is not weight-compatible with omega=1
  CHECK_FALSE(check_constraint_pattern(bad, r(1)));
}

TEST_CASE("derivation search succeeds on every catalog sample") {
  ExactField f;
  for (const auto& entry : catalog()) {
    std::vector<std::vector<Rational>> plists = entry.sample_params;
    if (plists.empty()) plists.push_back({});
    unsigned long long seed = 1;
    for (const auto& ps : plists) {
      StructureTensorQ t = emit_canonical(entry.family, ps).tensor;
      for (int c = 0; c < 3; ++c) {
        auto res = find_semisimple_onedim_kernel(t);
        REQUIRE_MESSAGE(res.found, entry.name);
        CHECK(is_derivation(t, res.d));
        CHECK(is_semisimple(res.d));
        // kernel is exactly one-dimensional: rank 2
        MatX<Rational> m(3, 3);
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b) m.at(a, b) = res.d.a[a][b];
        CHECK(rank_of(m, f) == 2);
        auto conj = conjugate_tensor(t, random_conjugation(seed++), f);
        REQUIRE(conj);
        t = *conj;
      }
    }
  }
}
