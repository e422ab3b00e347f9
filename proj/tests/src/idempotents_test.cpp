#include <doctest.h>

#include <cmath>

#include "hqds/catalog.hpp"
#include "hqds/idempotents.hpp"

using namespace hqds;

namespace {
Rational r(long n, long d = 1) { return Rational(n, d); }

bool contains_point(const std::vector<IdempotentHit>& hits, double a, double b,
                    double c, double tol = 1e-7) {
  for (const auto& h : hits) {
    if (std::abs(h.point[0] - a) < tol && std::abs(h.point[1] - b) < tol &&
        std::abs(h.point[2] - c) < tol)
      return true;
  }
  return false;
}
}  // namespace

TEST_CASE("no idempotents in a nilpotent algebra") {
  StructureTensorQ t = emit_canonical(Family::A15, {}).tensor;
  CHECK(find_idempotents(t).empty());
}

TEST_CASE("Newton search finds and exactly verifies known idempotents") {
  struct Case {
    Family fam;
    std::vector<Rational> ps;
    double x, y, z;
  };
  const Case cases[] = {
      {Family::A1, {}, 0, 0, 1},
      {Family::A6, {r(1, 4)}, 0, 0, 1},
      {Family::A10, {}, 0, 0, 1},
      {Family::A26, {}, 1, 1, 1},
  };
  for (const auto& c : cases) {
    StructureTensorQ t = emit_canonical(c.fam, c.ps).tensor;
    auto hits = find_idempotents(t);
    REQUIRE_MESSAGE(!hits.empty(), family_name(c.fam));
    for (const auto& h : hits) {
      CHECK(h.residual < 1e-10);
      if (h.exact_verified) CHECK(is_idempotent_element(t, h.exact));
    }
    CHECK_MESSAGE(contains_point(hits, c.x, c.y, c.z), family_name(c.fam));
  }
}

TEST_CASE("hits land on the idempotent curve x y = 1/4, z = 1/2") {
  StructureTensorQ t = emit_canonical(Family::A17, {}).tensor;
  auto hits = find_idempotents(t);
  REQUIRE(!hits.empty());
  for (const auto& h : hits) {
    CHECK(h.residual < 1e-10);
    CHECK(std::abs(h.point[2] - 0.5) < 1e-8);
    CHECK(std::abs(h.point[0] * h.point[1] - 0.25) < 1e-8);
  }
}

TEST_CASE("hits are deduplicated") {
  StructureTensorQ t = emit_canonical(Family::A8, {}).tensor;
  auto hits = find_idempotents(t);
  for (std::size_t i = 0; i < hits.size(); ++i)
    for (std::size_t j = i + 1; j < hits.size(); ++j) {
      double d = 0;
      for (int k = 0; k < 3; ++k)
        d = std::max(d, std::abs(hits[i].point[k] - hits[j].point[k]));
      CHECK(d > 1e-8);
    }
}

TEST_CASE("rational snapping recovers exact coordinates") {
  StructureTensorQ t = emit_canonical(Family::A17, {}).tensor;
  auto hits = find_idempotents(t);
  bool found = false;
  for (const auto& h : hits) {
    if (h.exact_verified && h.exact[0] == r(1, 2) && h.exact[1] == r(1, 2) &&
        h.exact[2] == r(1, 2)) {
      CHECK(is_idempotent_element(t, h.exact));
      found = true;
    }
  }
  CHECK(found);
}
