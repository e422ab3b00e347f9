#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hqds/tensor.hpp"

namespace hqds {

// The 35 isomorphism classes of three-dimensional commutative algebras
// admitting a semisimple derivation with one-dimensional kernel.
enum class Family : int {
  A1 = 1,  A2,  A3,  A4,  A5,  A6,  A7,  A8,  A9,  A10,
  A11, A12, A13, A14, A15, A16, A17, A18, A19, A20,
  A21, A22, A23, A24, A25, A26, A27, A28, A29, A30,
  A31, A32, A33, A34, A35
};

std::string family_name(Family f);
std::optional<Family> family_from_string(const std::string& s);

enum class IdempotentLocus { Empty, Point, Line, Plane, Curve, TwoLines, PointPlusCurve };
std::string locus_name(IdempotentLocus l);

struct CatalogEntry {
  Family family;
  std::string name;
  std::string table;  // human-readable multiplication table
  int param_count;
  // Expected exact invariants (independent of in-range parameter choice).
  int dim_der, dim_ann, dim_sq;
  IdempotentLocus locus;
  // In-range parameter samples for tests (>= 3 where parametrized).
  std::vector<std::vector<Rational>> sample_params;
  // Proper ideals (bases); exact-verified in tests, drift-checked numerically.
  std::vector<std::vector<Vec3Q>> ideals;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(Family f);

// Canonical structure tensor of a family at given parameters.
// enforce_range=false is used internally when the classifier lands on a
// representative outside the ranges declared in the source tables.
struct EmitError {
  std::string message;
};
struct EmitResult {
  bool ok = false;
  StructureTensorQ tensor;
  std::string error;
};
EmitResult emit_canonical(Family f, const std::vector<Rational>& params,
                          bool enforce_range = true);

// Same tables over doubles, for verifying classifications whose parameters
// are irrational. No range checks; the parameter count must match the family.
StructureTensorD emit_canonical_num(Family f, const std::vector<double>& params);

// A representative idempotent of the canonical tensor, when the locus is
// nonempty.
std::optional<Vec3Q> canonical_idempotent(Family f,
                                          const std::vector<Rational>& params);

// Structure tensor read verbatim off the published phase-system list
// (coefficient of x_i x_j, i<j, is 2 t_ij^k; of x_i^2 is t_ii^k). Four of
// the printed systems deviate from the multiplication tables they were
// derived from; see printed_system_errata().
StructureTensorQ printed_system_tensor(Family f,
                                       const std::vector<Rational>& params);

struct Erratum {
  Family family;
  std::string note;
};
// Documented print deviations between the published system list and the
// (authoritative) multiplication tables.
const std::vector<Erratum>& printed_system_errata();

}  // namespace hqds
