#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hqds/classifier.hpp"
#include "hqds/document.hpp"
#include "hqds/dynamics.hpp"
#include "hqds/idempotents.hpp"

using namespace hqds;

namespace {

// Exit codes: 0 classified/ok, 2 null algebra, 3 not classifiable,
// 4 failure or bad input.
constexpr int kExitOk = 0;
constexpr int kExitNull = 2;
constexpr int kExitNotClassifiable = 3;
constexpr int kExitFailure = 4;

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

bool read_input(const std::string& path, std::string& out, std::string& err) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    out = ss.str();
    return true;
  }
  std::ifstream in(path);
  if (!in) {
    err = "cannot open " + path;
    return false;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

int load_document(const std::string& path, AlgebraDocument& doc) {
  std::string text, err;
  if (!read_input(path, text, err)) {
    std::cerr << "error: " << err << "\n";
    return kExitFailure;
  }
  auto parsed = document_from_json(text, &err);
  if (!parsed) {
    std::cerr << "error: " << err << "\n";
    return kExitFailure;
  }
  doc = *parsed;
  return kExitOk;
}

int write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return kExitFailure;
  }
  out << text;
  return kExitOk;
}

std::optional<std::vector<Rational>> parse_params(
    const std::vector<std::string>& texts) {
  std::vector<Rational> ps;
  for (const auto& s : texts) {
    auto r = parse_rational(s);
    if (!r) return std::nullopt;
    ps.push_back(*r);
  }
  return ps;
}

std::optional<Mat3Q> parse_matrix(const std::string& text) {
  Mat3Q m;
  std::stringstream rows(text);
  std::string row;
  int r = 0;
  while (std::getline(rows, row, ';')) {
    if (r >= 3) return std::nullopt;
    std::stringstream cols(row);
    std::string cell;
    int c = 0;
    while (std::getline(cols, cell, ',')) {
      if (c >= 3) return std::nullopt;
      auto v = parse_rational(cell);
      if (!v) return std::nullopt;
      m.a[r][c] = *v;
      ++c;
    }
    if (c != 3) return std::nullopt;
    ++r;
  }
  if (r != 3) return std::nullopt;
  return m;
}

std::optional<Vec3D> parse_vec3(const std::string& text) {
  Vec3D v;
  std::stringstream ss(text);
  std::string cell;
  int i = 0;
  while (std::getline(ss, cell, ',')) {
    if (i >= 3) return std::nullopt;
    try {
      v[i] = std::stod(cell);
    } catch (...) {
      return std::nullopt;
    }
    ++i;
  }
  if (i != 3) return std::nullopt;
  return v;
}

void print_matrix_q(std::ostream& os, const Mat3Q& m, const char* indent) {
  for (int r = 0; r < 3; ++r) {
    os << indent << "[";
    for (int c = 0; c < 3; ++c)
      os << " " << format_rational(m.a[r][c]);
    os << " ]\n";
  }
}

void print_matrix_d(std::ostream& os, const Mat3D& m, const char* indent) {
  for (int r = 0; r < 3; ++r) {
    os << indent << "[";
    for (int c = 0; c < 3; ++c) os << " " << fmt_double(m.a[r][c]);
    os << " ]\n";
  }
}

int status_exit_code(ClassifyStatus s) {
  switch (s) {
    case ClassifyStatus::Classified: return kExitOk;
    case ClassifyStatus::NullAlgebra: return kExitNull;
    case ClassifyStatus::NotClassifiable: return kExitNotClassifiable;
    case ClassifyStatus::Failure: return kExitFailure;
  }
  return kExitFailure;
}

nlohmann::ordered_json result_to_json(const ClassificationResult& r,
                                      const AlgebraInvariants& inv) {
  nlohmann::ordered_json j;
  j["status"] = status_name(r.status);
  if (r.status == ClassifyStatus::Classified) {
    j["family"] = family_name(r.family);
    j["numeric"] = r.numeric;
    j["out_of_declared_range"] = r.out_of_declared_range;
    nlohmann::ordered_json params = nlohmann::ordered_json::array();
    if (!r.numeric)
      for (const auto& p : r.params) params.push_back(format_rational(p));
    else
      for (double p : r.params_num) params.push_back(p);
    j["parameters"] = params;
    if (!r.numeric) j["omega"] = format_rational(r.omega);
    else j["omega"] = r.omega_num;
    nlohmann::ordered_json w = nlohmann::ordered_json::array();
    for (int row = 0; row < 3; ++row) {
      nlohmann::ordered_json wr = nlohmann::ordered_json::array();
      for (int c = 0; c < 3; ++c) {
        if (!r.numeric) wr.push_back(format_rational(r.witness.a[row][c]));
        else wr.push_back(r.witness_num.a[row][c]);
      }
      w.push_back(wr);
    }
    j["witness"] = w;
  }
  j["dim_der"] = inv.dim_der;
  j["dim_ann"] = inv.dim_ann;
  j["dim_sq"] = inv.dim_sq;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

int cmd_classify(const std::string& input, const std::string& mode, double tol,
                 const std::string& json_out) {
  AlgebraDocument doc;
  int rc = load_document(input, doc);
  if (rc != kExitOk) return rc;
  ClassificationResult r;
  if (mode == "float")
    r = classify_numeric(to_double(doc.tensor), tol);
  else
    r = classify(doc.tensor, tol);
  AlgebraInvariants inv = algebra_invariants(doc.tensor);

  std::ostringstream os;
  os << "status: " << status_name(r.status) << "\n";
  if (r.status == ClassifyStatus::Classified) {
    os << "family: " << family_name(r.family) << "\n";
    const CatalogEntry& entry = catalog_entry(r.family);
    os << "table: " << entry.table << "\n";
    os << "parameters:";
    if (entry.param_count == 0) {
      os << " (none)";
    } else if (!r.numeric) {
      for (const auto& p : r.params) os << " " << format_rational(p);
    } else {
      for (double p : r.params_num) os << " " << fmt_double(p);
    }
    os << "\n";
    os << "numeric: " << (r.numeric ? "yes" : "no") << "\n";
    if (r.out_of_declared_range)
      os << "out-of-declared-range: yes\n";
    if (!r.numeric)
      os << "omega: " << format_rational(r.omega) << "\n";
    else
      os << "omega: " << fmt_double(r.omega_num) << "\n";
    os << "witness (canonical basis in input coordinates):\n";
    if (!r.numeric)
      print_matrix_q(os, r.witness, "  ");
    else
      print_matrix_d(os, r.witness_num, "  ");
  }
  os << "invariants: dim Der = " << inv.dim_der
     << ", dim Ann = " << inv.dim_ann << ", dim A^2 = " << inv.dim_sq << "\n";
  if (r.status == ClassifyStatus::Classified) {
    const CatalogEntry& entry = catalog_entry(r.family);
    os << "discrepancies:";
    bool any = false;
    if (inv.dim_der != entry.dim_der) {
      os << "\n  dim Der = " << inv.dim_der << " but the catalog lists "
         << entry.dim_der << " for " << entry.name;
      any = true;
    }
    if (inv.dim_ann != entry.dim_ann) {
      os << "\n  dim Ann = " << inv.dim_ann << " but the catalog lists "
         << entry.dim_ann << " for " << entry.name;
      any = true;
    }
    if (inv.dim_sq != entry.dim_sq) {
      os << "\n  dim A^2 = " << inv.dim_sq << " but the catalog lists "
         << entry.dim_sq << " for " << entry.name;
      any = true;
    }
    if (r.numeric) {
      os << "\n  class data is floating point; the witness was verified to "
         << fmt_double(kNumericVerifyTol);
      any = true;
    }
    if (r.out_of_declared_range) {
      os << "\n  representative parameters fall outside the declared table "
            "range";
      any = true;
    }
    if (!any) os << " none";
    os << "\n";
  }
  if (!r.note.empty()) os << "note: " << r.note << "\n";
  std::cout << os.str();
  if (!json_out.empty()) {
    auto j = result_to_json(r, inv);
    int wrc = write_output(json_out, j.dump(2) + "\n");
    if (wrc != kExitOk) return wrc;
  }
  return status_exit_code(r.status);
}

int cmd_emit(const std::string& family, const std::vector<std::string>& params,
             bool force, const std::string& out) {
  auto fam = family_from_string(family);
  if (!fam) {
    std::cerr << "error: unknown family " << family << " (expected A1..A35)\n";
    return kExitFailure;
  }
  auto ps = parse_params(params);
  if (!ps) {
    std::cerr << "error: parameters must be rationals like 3/2\n";
    return kExitFailure;
  }
  auto em = emit_canonical(*fam, *ps, !force);
  if (!em.ok) {
    std::cerr << "error: " << em.error << "\n";
    return kExitFailure;
  }
  AlgebraDocument doc;
  doc.tensor = em.tensor;
  doc.metadata["family"] = family_name(*fam);
  return write_output(out, document_to_json(doc));
}

int cmd_conjugate(const std::string& input, const std::string& matrix,
                  unsigned long long seed, const std::string& out) {
  AlgebraDocument doc;
  int rc = load_document(input, doc);
  if (rc != kExitOk) return rc;
  Mat3Q P;
  if (!matrix.empty()) {
    auto m = parse_matrix(matrix);
    if (!m) {
      std::cerr << "error: matrix must be \"a,b,c;d,e,f;g,h,i\" rationals\n";
      return kExitFailure;
    }
    P = *m;
  } else {
    P = random_conjugation(seed);
  }
  ExactField F;
  auto conj = conjugate_tensor(doc.tensor, P, F);
  if (!conj) {
    std::cerr << "error: matrix is singular\n";
    return kExitFailure;
  }
  AlgebraDocument outdoc;
  outdoc.tensor = *conj;
  return write_output(out, document_to_json(outdoc));
}

int cmd_invariants(const std::string& input) {
  AlgebraDocument doc;
  int rc = load_document(input, doc);
  if (rc != kExitOk) return rc;
  AlgebraInvariants inv = algebra_invariants(doc.tensor);
  std::cout << "dim Der = " << inv.dim_der << "\n"
            << "dim Ann = " << inv.dim_ann << "\n"
            << "dim A^2 = " << inv.dim_sq << "\n";
  auto ann = annihilator(doc.tensor);
  for (const auto& v : ann)
    std::cout << "ann basis: " << format_rational(v[0]) << " "
              << format_rational(v[1]) << " " << format_rational(v[2]) << "\n";
  auto sq = squared_subalgebra(doc.tensor);
  for (const auto& v : sq)
    std::cout << "A^2 basis: " << format_rational(v[0]) << " "
              << format_rational(v[1]) << " " << format_rational(v[2]) << "\n";
  return kExitOk;
}

int cmd_derivations(const std::string& input) {
  AlgebraDocument doc;
  int rc = load_document(input, doc);
  if (rc != kExitOk) return rc;
  auto der = derivation_algebra(doc.tensor);
  std::cout << "dim Der = " << der.size() << "\n";
  for (std::size_t i = 0; i < der.size(); ++i) {
    std::cout << "basis " << (i + 1) << ":\n";
    print_matrix_q(std::cout, der[i], "  ");
  }
  return kExitOk;
}

int cmd_idempotents(const std::string& input) {
  AlgebraDocument doc;
  int rc = load_document(input, doc);
  if (rc != kExitOk) return rc;
  auto hits = find_idempotents(doc.tensor);
  std::cout << "idempotents found: " << hits.size() << "\n";
  for (const auto& h : hits) {
    std::cout << "  [" << fmt_double(h.point[0]) << ", "
              << fmt_double(h.point[1]) << ", " << fmt_double(h.point[2])
              << "] residual " << fmt_double(h.residual);
    if (h.exact_verified)
      std::cout << "  = (" << format_rational(h.exact[0]) << ", "
                << format_rational(h.exact[1]) << ", "
                << format_rational(h.exact[2]) << ") exact";
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_simulate(const std::string& input, const std::string& x0text,
                 double dt, int steps, int stride) {
  AlgebraDocument doc;
  int rc = load_document(input, doc);
  if (rc != kExitOk) return rc;
  auto x0 = parse_vec3(x0text);
  if (!x0) {
    std::cerr << "error: --x0 must be \"x,y,z\"\n";
    return kExitFailure;
  }
  StructureTensorD td = to_double(doc.tensor);
  Trajectory tr = integrate(td, *x0, dt, steps);
  std::cout << "t,x1,x2,x3\n";
  for (std::size_t i = 0; i < tr.points.size(); ++i) {
    if (stride > 1 && i % static_cast<std::size_t>(stride) != 0 &&
        i + 1 != tr.points.size())
      continue;
    const auto& x = tr.points[i];
    std::cout << fmt_double(i * dt) << "," << fmt_double(x[0]) << ","
              << fmt_double(x[1]) << "," << fmt_double(x[2]) << "\n";
  }
  if (tr.blew_up) std::cout << "# trajectory left |x|_inf <= 1e9\n";
  return kExitOk;
}

int cmd_catalog() {
  for (const auto& e : catalog()) {
    std::cout << e.name << ": " << e.table << "\n"
              << "  dim Der " << e.dim_der << ", dim Ann " << e.dim_ann
              << ", dim A^2 " << e.dim_sq << ", idempotents "
              << locus_name(e.locus) << ", parameters " << e.param_count
              << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Homogeneous quadratic differential systems on R^3 via commutative "
      "algebras: classification, invariants, and dynamics"};
  app.require_subcommand(1);

  std::string input = "-", mode = "exact", json_out, out, matrix, x0text;
  std::string family;
  std::vector<std::string> params;
  double tol = 1e-9, dt = 1e-3;
  int steps = 1000, stride = 1;
  unsigned long long seed = 1;
  bool force = false;

  auto* classify_cmd =
      app.add_subcommand("classify", "Classify an algebra document");
  classify_cmd->add_option("input", input, "document path or - for stdin");
  classify_cmd->add_option("--mode", mode, "exact or float")
      ->check(CLI::IsMember({"exact", "float"}));
  classify_cmd->add_option("--tol", tol, "numeric zero tolerance");
  classify_cmd->add_option("--json-out", json_out,
                           "write a JSON result (path or -)");

  auto* emit_cmd =
      app.add_subcommand("emit", "Emit the canonical tensor of a family");
  emit_cmd->add_option("family", family, "A1..A35")->required();
  emit_cmd->add_option("params", params, "rational parameters");
  emit_cmd->add_flag("--force", force,
                     "allow parameters outside the declared range");
  emit_cmd->add_option("--out", out, "output path (default stdout)");

  auto* conj_cmd = app.add_subcommand(
      "conjugate", "Rewrite a document in a different basis");
  conj_cmd->add_option("input", input, "document path or - for stdin");
  conj_cmd->add_option("--matrix", matrix, "\"a,b,c;d,e,f;g,h,i\" rationals");
  conj_cmd->add_option("--seed", seed,
                       "deterministic invertible integer matrix seed");
  conj_cmd->add_option("--out", out, "output path (default stdout)");

  auto* inv_cmd =
      app.add_subcommand("invariants", "Exact invariants of a document");
  inv_cmd->add_option("input", input, "document path or - for stdin");

  auto* der_cmd =
      app.add_subcommand("derivations", "Basis of the derivation algebra");
  der_cmd->add_option("input", input, "document path or - for stdin");

  auto* idm_cmd =
      app.add_subcommand("idempotents", "Newton search for idempotents");
  idm_cmd->add_option("input", input, "document path or - for stdin");

  auto* sim_cmd =
      app.add_subcommand("simulate", "Integrate x' = x*x with RK4");
  sim_cmd->add_option("input", input, "document path or - for stdin");
  sim_cmd->add_option("--x0", x0text, "initial point \"x,y,z\"")->required();
  sim_cmd->add_option("--dt", dt, "step size");
  sim_cmd->add_option("--steps", steps, "number of steps");
  sim_cmd->add_option("--stride", stride, "print every n-th point");

  auto* cat_cmd = app.add_subcommand("catalog", "List the 35 families");
  (void)cat_cmd;

  CLI11_PARSE(app, argc, argv);

  if (classify_cmd->parsed()) return cmd_classify(input, mode, tol, json_out);
  if (emit_cmd->parsed()) return cmd_emit(family, params, force, out);
  if (conj_cmd->parsed()) return cmd_conjugate(input, matrix, seed, out);
  if (inv_cmd->parsed()) return cmd_invariants(input);
  if (der_cmd->parsed()) return cmd_derivations(input);
  if (idm_cmd->parsed()) return cmd_idempotents(input);
  if (sim_cmd->parsed())
    return cmd_simulate(input, x0text, dt, steps, stride);
  return cmd_catalog();
}
