#include <doctest.h>

#include "hqds/linalg.hpp"

using namespace hqds;

namespace {
Mat3Q mat(std::initializer_list<long> v) {
  Mat3Q m;
  auto it = v.begin();
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m.a[r][c] = Rational(*it++);
  return m;
}
}  // namespace

TEST_CASE("det, adjugate, inverse") {
  Mat3Q m = mat({2, 0, 1, 1, 1, 0, 0, 3, 1});
  CHECK(m.det() == 5);
  ExactField f;
  auto inv = inverse(m, f);
  REQUIRE(inv);
  Mat3Q prod = (*inv) * m;
  CHECK(prod.a[0][0] == 1);
  CHECK(prod.a[1][1] == 1);
  CHECK(prod.a[2][2] == 1);
  CHECK(prod.a[0][1] == 0);
  CHECK(prod.a[2][0] == 0);
  CHECK_FALSE(inverse(mat({1, 2, 3, 2, 4, 6, 0, 0, 1}), f));
}

TEST_CASE("rref and rank") {
  ExactField f;
  MatX<Rational> m(3, 4);
  // x + y = 1-ish structure: two independent rows, one dependent
  m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 3; m.at(0, 3) = 4;
  m.at(1, 0) = 2; m.at(1, 1) = 4; m.at(1, 2) = 6; m.at(1, 3) = 8;
  m.at(2, 0) = 0; m.at(2, 1) = 1; m.at(2, 2) = 1; m.at(2, 3) = 0;
  CHECK(rank_of(m, f) == 2);
}

TEST_CASE("kernel basis solves the system") {
  ExactField f;
  MatX<Rational> m(2, 4);
  m.at(0, 0) = 1; m.at(0, 1) = 0; m.at(0, 2) = 2; m.at(0, 3) = -1;
  m.at(1, 0) = 0; m.at(1, 1) = 1; m.at(1, 2) = 1; m.at(1, 3) = 1;
  auto kb = kernel_basis(m, f);
  REQUIRE(kb.size() == 2);
  for (const auto& v : kb) {
    for (int r = 0; r < 2; ++r) {
      Rational s = 0;
      for (int c = 0; c < 4; ++c) s += m.at(r, c) * v[c];
      CHECK(s == 0);
    }
  }
  // one basis vector per free column, unit entry there
  CHECK(kb[0][2] == 1);
  CHECK(kb[1][3] == 1);
}

TEST_CASE("kernel of full-rank square system is empty") {
  ExactField f;
  MatX<Rational> m(3, 3);
  m.at(0, 0) = 1; m.at(1, 1) = 2; m.at(2, 2) = 3;
  CHECK(kernel_basis(m, f).empty());
}
