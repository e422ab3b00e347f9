#pragma once

#include <string>
#include <vector>

#include "hqds/catalog.hpp"
#include "hqds/derivation.hpp"

namespace hqds {

enum class ClassifyStatus {
  Classified,       // landed on a catalog family, witness verified
  NullAlgebra,      // zero structure tensor
  NotClassifiable,  // no usable derivation, or a documented catalog gap
  Failure           // internal or numeric verification failure
};

std::string status_name(ClassifyStatus s);

struct ClassificationResult {
  ClassifyStatus status = ClassifyStatus::Failure;
  Family family = Family::A1;

  // Exact parameters (empty when the result is numeric); params_num is
  // always filled for classified results.
  std::vector<Rational> params;
  std::vector<double> params_num;

  // True when the class data (spectrum or parameters) required floating
  // point; the witness is then only numeric.
  bool numeric = false;

  // The representative falls outside the parameter ranges declared by the
  // source tables (e.g. a ratio <= 1 where the table assumes > 1).
  bool out_of_declared_range = false;

  // Columns of the witness are the canonical basis vectors in input
  // coordinates: witness maps the canonical algebra isomorphically onto the
  // input algebra. Exact when !numeric; witness_num always set.
  Mat3Q witness;
  Mat3D witness_num;

  // Normalized spectrum (1, omega, 0) of the derivation used.
  Rational omega;
  double omega_num = 0;

  bool has_derivation = false;
  Mat3Q derivation;  // semisimple, one-dimensional kernel (exact search)

  std::string note;
};

// Exact-first classification: exact derivation search and branch logic,
// falling back to floating point only when the spectrum or the class
// parameters are irrational. tol is the numeric-branch zero threshold; the
// final numeric witness check uses kNumericVerifyTol.
inline constexpr double kNumericVerifyTol = 1e-6;
ClassificationResult classify(const StructureTensorQ& t, double tol = 1e-9);

// Float front end: entries are snapped to rationals (denominator <= 10^6,
// within tol) before the exact pipeline runs. Fails when an entry is not
// recognizably rational; class parameters may still come back numeric.
ClassificationResult classify_numeric(const StructureTensorD& t,
                                      double tol = 1e-9);

struct AlgebraInvariants {
  int dim_der = 0;  // dim Der A
  int dim_ann = 0;  // dim Ann A
  int dim_sq = 0;   // dim A^2
};
AlgebraInvariants algebra_invariants(const StructureTensorQ& t);

}  // namespace hqds
