#include "hqds/catalog.hpp"

#include <map>
#include <stdexcept>

namespace hqds {

namespace {

Rational half() { return Rational(1, 2); }

// set(t, i, j, k, v): coefficient of e_k in e_i e_j (1-based indices).
template <class S>
void set(StructureTensor<S>& t, int i, int j, int k, const S& v) {
  t.prod(i - 1, j - 1)[k - 1] = v;
}

template <class S>
StructureTensor<S> table_T1(const S& a, const S& b) {
  StructureTensor<S> t;
  set(t, 1, 2, 3, S(1));
  set(t, 3, 3, 3, S(1));
  set(t, 1, 3, 1, a);
  set(t, 2, 3, 2, b);
  return t;
}
template <class S>
StructureTensor<S> table_T2(const S& a, const S& b) {
  StructureTensor<S> t;
  set(t, 3, 3, 3, S(1));
  set(t, 1, 3, 1, a);
  set(t, 2, 3, 2, b);
  return t;
}
template <class S>
StructureTensor<S> table_T3(const S& a, const S& b) {
  StructureTensor<S> t;
  set(t, 1, 2, 3, S(1));
  set(t, 1, 3, 1, a);
  set(t, 2, 3, 2, b);
  return t;
}
template <class S>
StructureTensor<S> table_T4(const S& a, const S& b) {
  StructureTensor<S> t;
  set(t, 1, 3, 1, a);
  set(t, 2, 3, 2, b);
  return t;
}
template <class S>
StructureTensor<S> table_A15() {
  StructureTensor<S> t;
  set(t, 2, 3, 1, S(1));
  return t;
}
template <class S>
StructureTensor<S> table_A22() {
  StructureTensor<S> t;
  set(t, 3, 3, 3, S(1));
  set(t, 2, 3, 1, S(1));
  return t;
}
template <class S>
StructureTensor<S> table_T5(const S& a, const S& b) {
  StructureTensor<S> t;
  set(t, 3, 3, 3, S(1));
  set(t, 1, 3, 1, a);
  set(t, 1, 3, 2, S(-b));
  set(t, 2, 3, 1, b);
  set(t, 2, 3, 2, a);
  return t;
}
template <class S>
StructureTensor<S> table_T6(const S& a, const S& b) {
  StructureTensor<S> t;
  set(t, 2, 2, 1, S(1));
  set(t, 3, 3, 3, S(1));
  set(t, 1, 3, 1, a);
  set(t, 2, 3, 2, b);
  return t;
}
template <class S>
StructureTensor<S> table_A32() {
  StructureTensor<S> t;
  set(t, 1, 1, 2, S(1));
  return t;
}
template <class S>
StructureTensor<S> table_ii2(const S& b) {
  StructureTensor<S> t;
  set(t, 1, 1, 2, S(1));
  set(t, 1, 3, 1, S(1));
  set(t, 2, 3, 2, b);
  return t;
}

// Canonical tensor without range checks; parameter count must be right.
template <class S>
StructureTensor<S> build_family(Family f, const std::vector<S>& ps) {
  const S h = S(1) / S(2);
  auto p0 = [&] { return ps.at(0); };
  auto p1 = [&] { return ps.at(1); };
  switch (f) {
    case Family::A1: return table_T1<S>(S(0), S(0));
    case Family::A2: return table_T1<S>(S(0), h);
    case Family::A3: return table_T1<S>(h, h);
    case Family::A4: return table_T1<S>(p0(), S(0));
    case Family::A5: return table_T1<S>(p0(), h);
    case Family::A6: return table_T1<S>(p0(), p0());
    case Family::A7: return table_T1<S>(p0(), p1());
    case Family::A8: return table_T2<S>(S(0), S(0));
    case Family::A9: return table_T2<S>(S(0), h);
    case Family::A10: return table_T2<S>(h, h);
    case Family::A11: return table_T2<S>(S(0), p0());
    case Family::A12: return table_T2<S>(h, p0());
    case Family::A13: return table_T2<S>(p0(), p0());
    case Family::A14: return table_T2<S>(p0(), p1());
    case Family::A15: return table_A15<S>();
    case Family::A16: return table_T3<S>(S(0), S(1));
    case Family::A17: return table_T3<S>(S(1), S(1));
    case Family::A18: return table_T3<S>(S(1), p0());
    case Family::A19: return table_T4<S>(S(0), S(1));
    case Family::A20: return table_T4<S>(S(1), S(1));
    case Family::A21: return table_T4<S>(S(1), p0());
    case Family::A22: return table_A22<S>();
    case Family::A23: return table_T5<S>(p0(), p1());
    case Family::A24: return table_T6<S>(S(0), p0());
    case Family::A25: return table_T6<S>(S(0), S(0));
    case Family::A26: return table_T6<S>(S(0), h);
    case Family::A27: return table_T6<S>(p0(), p1());
    case Family::A28: return table_T6<S>(p0(), p0());
    case Family::A29: return table_T6<S>(p0(), h);
    case Family::A30: return table_T6<S>(h, h);
    case Family::A31: return table_T6<S>(h, p0());
    case Family::A32: return table_A32<S>();
    case Family::A33: return table_ii2<S>(p0());
    case Family::A34: return table_ii2<S>(S(1));
    case Family::A35: return table_ii2<S>(S(0));
  }
  return StructureTensor<S>{};
}

bool not_zero_half(const Rational& x) { return x != 0 && x != half(); }

Vec3Q e(int i) {
  Vec3Q v;
  v[i - 1] = 1;
  return v;
}
std::vector<Vec3Q> span1(int i) { return {e(i)}; }
std::vector<Vec3Q> span2(int i, int j) { return {e(i), e(j)}; }

std::vector<CatalogEntry> build_catalog() {
  using P = std::vector<std::vector<Rational>>;
  const Rational h = half();
  P one_param = {{1}, {-2}, {Rational(1, 3)}, {5}, {Rational(-1, 3)}};
  P two_param = {{1, 2}, {-1, Rational(1, 3)}, {Rational(1, 4), 1},
                 {-2, -1}, {Rational(1, 3), 3}};

  std::vector<CatalogEntry> v;
  auto add = [&](Family f, std::string name, std::string table, int pc,
                 int dd, int da, int ds, IdempotentLocus loc, P samples,
                 std::vector<std::vector<Vec3Q>> ideals) {
    v.push_back(CatalogEntry{f, std::move(name), std::move(table), pc, dd, da,
                             ds, loc, std::move(samples), std::move(ideals)});
  };

  add(Family::A1, "A1", "e1e2=e3, e3^2=e3", 0, 1, 0, 1,
      IdempotentLocus::Point, {{}},
      {span1(3), span2(1, 3), span2(2, 3)});
  add(Family::A2, "A2", "e1e2=e3, e3^2=e3, e2e3=(1/2)e2", 0, 1, 0, 2,
      IdempotentLocus::Line, {{}}, {span2(2, 3)});
  add(Family::A3, "A3", "e1e2=e3, e3^2=e3, e1e3=(1/2)e1, e2e3=(1/2)e2", 0, 1,
      0, 3, IdempotentLocus::TwoLines, {{}}, {});
  add(Family::A4, "A4", "e1e2=e3, e3^2=e3, e1e3=a e1  (a not in {0,1/2})", 1,
      1, 0, 2, IdempotentLocus::Point, one_param, {span2(1, 3)});
  add(Family::A5, "A5",
      "e1e2=e3, e3^2=e3, e1e3=a e1, e2e3=(1/2)e2  (a not in {0,1/2})", 1, 1,
      0, 3, IdempotentLocus::Line, one_param, {});
  add(Family::A6, "A6",
      "e1e2=e3, e3^2=e3, e1e3=a e1, e2e3=a e2  (a not in {0,1/2})", 1, 1, 0,
      3, IdempotentLocus::PointPlusCurve, one_param, {});
  add(Family::A7, "A7",
      "e1e2=e3, e3^2=e3, e1e3=a e1, e2e3=b e2  (a<b, not in {0,1/2})", 2, 1,
      0, 3, IdempotentLocus::Point, two_param, {});
  add(Family::A8, "A8", "e3^2=e3", 0, 4, 2, 1, IdempotentLocus::Point, {{}},
      {span1(1), span1(2), span1(3), span2(1, 2)});
  add(Family::A9, "A9", "e3^2=e3, e2e3=(1/2)e2", 0, 3, 1, 2,
      IdempotentLocus::Line, {{}}, {span1(1), span2(1, 2), span2(2, 3)});
  add(Family::A10, "A10", "e3^2=e3, e1e3=(1/2)e1, e2e3=(1/2)e2", 0, 6, 0, 3,
      IdempotentLocus::Plane, {{}}, {span1(1), span1(2), span2(1, 2)});
  add(Family::A11, "A11", "e3^2=e3, e2e3=b e2  (b not in {0,1/2})", 1, 2, 1,
      2, IdempotentLocus::Point, one_param,
      {span1(1), span1(2), span2(1, 2), span2(2, 3)});
  add(Family::A12, "A12",
      // dim Der = 3: besides the diagonal derivations, e3 -> e1 satisfies
      // Leibniz because the e1 eigenvalue is exactly 1/2 (the same fact
      // that produces the idempotent line x e1 + e3).
      "e3^2=e3, e1e3=(1/2)e1, e2e3=b e2  (b not in {0,1/2})", 1, 3, 0, 3,
      IdempotentLocus::Line, one_param, {span1(1), span1(2), span2(1, 2)});
  add(Family::A13, "A13", "e3^2=e3, e1e3=a e1, e2e3=a e2  (a not in {0,1/2})",
      1, 4, 0, 3, IdempotentLocus::Point, one_param,
      {span1(1), span1(2), span2(1, 2)});
  add(Family::A14, "A14",
      "e3^2=e3, e1e3=a e1, e2e3=b e2  (a<b, not in {0,1/2})", 2, 2, 0, 3,
      IdempotentLocus::Point, two_param, {span1(1), span1(2), span2(1, 2)});
  add(Family::A15, "A15", "e2e3=e1", 0, 4, 1, 1, IdempotentLocus::Empty, {{}},
      {span1(1), span2(1, 2), span2(1, 3)});
  add(Family::A16, "A16", "e1e2=e3, e2e3=e2", 0, 1, 0, 2,
      IdempotentLocus::Empty, {{}}, {span2(2, 3)});
  add(Family::A17, "A17", "e1e2=e3, e1e3=e1, e2e3=e2", 0, 1, 0, 3,
      IdempotentLocus::Curve, {{}}, {});
  add(Family::A18, "A18", "e1e2=e3, e1e3=e1, e2e3=b e2  (b>1)", 1, 1, 0, 3,
      IdempotentLocus::Empty, {{2}, {3}, {Rational(3, 2)}, {5}, {Rational(7, 3)}},
      {});
  add(Family::A19, "A19", "e2e3=e2", 0, 3, 1, 1, IdempotentLocus::Empty, {{}},
      {span1(1), span1(2), span2(1, 2), span2(2, 3)});
  add(Family::A20, "A20", "e1e3=e1, e2e3=e2", 0, 4, 0, 2,
      IdempotentLocus::Empty, {{}}, {span1(1), span1(2), span2(1, 2)});
  add(Family::A21, "A21", "e1e3=e1, e2e3=b e2  (b not in {0,1})", 1, 2, 0, 2,
      IdempotentLocus::Empty,
      {{2}, {-2}, {Rational(3, 2)}, {-1}, {3}},
      {span1(1), span1(2), span2(1, 2)});
  add(Family::A22, "A22", "e3^2=e3, e2e3=e1", 0, 2, 1, 2,
      IdempotentLocus::Point, {{}}, {span1(1), span2(1, 2), span2(1, 3)});
  add(Family::A23, "A23",
      "e3^2=e3, e1e3=a e1 - b e2, e2e3=b e1 + a e2  (b>0)", 2, 2, 0, 3,
      IdempotentLocus::Point,
      {{1, 2}, {0, 1}, {-1, Rational(1, 2)}, {2, 3}, {Rational(1, 2), 5}},
      {span2(1, 2)});
  add(Family::A24, "A24",
      "e2^2=e1, e3^2=e3, e2e3=b e2  (b not in {0,1/2})", 1, 1, 1, 3,
      IdempotentLocus::Point, one_param, {span1(1), span2(1, 2)});
  add(Family::A25, "A25", "e2^2=e1, e3^2=e3", 0, 2, 1, 2,
      IdempotentLocus::Point, {{}}, {span1(1), span2(1, 2), span2(1, 3)});
  add(Family::A26, "A26", "e2^2=e1, e3^2=e3, e2e3=(1/2)e2", 0, 2, 1, 3,
      IdempotentLocus::Curve, {{}}, {span1(1), span2(1, 2)});
  add(Family::A27, "A27",
      "e2^2=e1, e3^2=e3, e1e3=a e1, e2e3=b e2  (a,b not in {0,1/2}, a!=b)", 2,
      1, 0, 3, IdempotentLocus::Point,
      {{1, 2}, {2, 1}, {-1, Rational(1, 3)}, {Rational(1, 4), 1}, {1, -2}},
      {span1(1), span2(1, 2)});
  add(Family::A28, "A28",
      "e2^2=e1, e3^2=e3, e1e3=a e1, e2e3=a e2  (a not in {0,1/2})", 1, 2, 0,
      3, IdempotentLocus::Point, one_param, {span1(1), span2(1, 2)});
  add(Family::A29, "A29",
      "e2^2=e1, e3^2=e3, e1e3=a e1, e2e3=(1/2)e2  (a not in {0,1/2})", 1, 2,
      0, 3, IdempotentLocus::Curve, one_param, {span1(1), span2(1, 2)});
  add(Family::A30, "A30", "e2^2=e1, e3^2=e3, e1e3=(1/2)e1, e2e3=(1/2)e2", 0,
      3, 0, 3, IdempotentLocus::Line, {{}}, {span1(1), span2(1, 2)});
  add(Family::A31, "A31",
      "e2^2=e1, e3^2=e3, e1e3=(1/2)e1, e2e3=b e2  (b not in {0,1/2})", 1, 2,
      0, 3, IdempotentLocus::Line, one_param, {span1(1), span2(1, 2)});
  add(Family::A32, "A32", "e1^2=e2", 0, 5, 2, 1, IdempotentLocus::Empty, {{}},
      {span1(2), span1(3), span2(2, 3), span2(1, 2)});
  add(Family::A33, "A33",
      "e1^2=e2, e1e3=e1, e2e3=b e2  (b not in {0,1})", 1, 1, 0, 2,
      IdempotentLocus::Empty,
      {{2}, {-1}, {Rational(1, 2)}, {3}, {-3}}, {span1(2), span2(1, 2)});
  add(Family::A34, "A34", "e1^2=e2, e1e3=e1, e2e3=e2", 0, 2, 0, 2,
      IdempotentLocus::Empty, {{}}, {span1(2), span2(1, 2)});
  add(Family::A35, "A35", "e1^2=e2, e1e3=e1", 0, 2, 1, 2,
      IdempotentLocus::Empty, {{}}, {span1(2), span2(1, 2)});
  return v;
}

}  // namespace

std::string family_name(Family f) {
  return "A" + std::to_string(static_cast<int>(f));
}

std::optional<Family> family_from_string(const std::string& s) {
  std::string num = s;
  if (!num.empty() && (num[0] == 'A' || num[0] == 'a')) num = num.substr(1);
  try {
    int n = std::stoi(num);
    if (n >= 1 && n <= 35) return static_cast<Family>(n);
  } catch (...) {
  }
  return std::nullopt;
}

std::string locus_name(IdempotentLocus l) {
  switch (l) {
    case IdempotentLocus::Empty: return "empty";
    case IdempotentLocus::Point: return "point";
    case IdempotentLocus::Line: return "line";
    case IdempotentLocus::Plane: return "plane";
    case IdempotentLocus::Curve: return "curve";
    case IdempotentLocus::TwoLines: return "two-lines";
    case IdempotentLocus::PointPlusCurve: return "point-plus-curve";
  }
  return "?";
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> c = build_catalog();
  return c;
}

const CatalogEntry& catalog_entry(Family f) {
  return catalog()[static_cast<int>(f) - 1];
}

EmitResult emit_canonical(Family f, const std::vector<Rational>& params,
                          bool enforce_range) {
  EmitResult res;
  const CatalogEntry& entry = catalog_entry(f);
  if (static_cast<int>(params.size()) != entry.param_count) {
    res.error = entry.name + " takes " + std::to_string(entry.param_count) +
                " parameter(s), got " + std::to_string(params.size());
    return res;
  }
  const Rational h = Rational(1, 2);
  auto fail = [&](const std::string& msg) {
    res.error = entry.name + ": parameter out of range (" + msg + ")";
    return res;
  };
  auto ok = [&](StructureTensorQ t) {
    res.ok = true;
    res.tensor = t;
    return res;
  };
  if (enforce_range) {
    switch (f) {
      case Family::A4:
      case Family::A5:
      case Family::A6:
      case Family::A11:
      case Family::A12:
      case Family::A13:
      case Family::A24:
      case Family::A28:
      case Family::A29:
      case Family::A31:
        if (!not_zero_half(params[0])) return fail("parameter not in {0,1/2}");
        break;
      case Family::A7:
      case Family::A14:
        if (!(not_zero_half(params[0]) && not_zero_half(params[1]) &&
              params[0] < params[1]))
          return fail("a<b, both not in {0,1/2}");
        break;
      case Family::A27:
        if (!(not_zero_half(params[0]) && not_zero_half(params[1]) &&
              params[0] != params[1]))
          return fail("a,b not in {0,1/2}, a!=b");
        break;
      case Family::A18:
        if (!(params[0] > 1)) return fail("b>1");
        break;
      case Family::A21:
      case Family::A33:
        if (params[0] == 0 || params[0] == 1) return fail("b not in {0,1}");
        break;
      case Family::A23:
        if (!(params[1] > 0)) return fail("b>0");
        break;
      default:
        break;
    }
  }
  (void)h;
  return ok(build_family<Rational>(f, params));
}

StructureTensorD emit_canonical_num(Family f,
                                    const std::vector<double>& params) {
  return build_family<double>(f, params);
}

std::optional<Vec3Q> canonical_idempotent(Family f,
                                          const std::vector<Rational>& params) {
  switch (f) {
    case Family::A15:
    case Family::A16:
    case Family::A18:
    case Family::A19:
    case Family::A20:
    case Family::A21:
    case Family::A32:
    case Family::A33:
    case Family::A34:
    case Family::A35:
      return std::nullopt;
    case Family::A17:
      return Vec3Q{{Rational(1), Rational(1, 4), Rational(1, 2)}};
    case Family::A26:
      return Vec3Q{{Rational(1), Rational(1), Rational(1)}};
    case Family::A29: {
      Rational a = params.at(0);
      return Vec3Q{{1 / (1 - 2 * a), Rational(1), Rational(1)}};
    }
    default:
      return Vec3Q{{Rational(0), Rational(0), Rational(1)}};  // e3
  }
}

StructureTensorQ printed_system_tensor(Family f,
                                       const std::vector<Rational>& params) {
  const Rational h = Rational(1, 2);
  const Rational one = 1;
  auto p0 = [&] { return params.at(0); };
  auto p1 = [&] { return params.at(1); };
  StructureTensorQ t;
  switch (f) {
    case Family::A5:
      // Printed 5: dx3/dt = 2 x1 x3 + (x3)^2 (no x1 x2 term).
      set(t, 1, 3, 1, p0());
      set(t, 2, 3, 2, h);
      set(t, 1, 3, 3, one);
      set(t, 3, 3, 3, one);
      return t;
    case Family::A11:
      // Printed 11: dx2/dt = x2 x3 (parameter dropped).
      return table_T2<Rational>(0, h);
    case Family::A23:
      // Printed 23: dx1/dt = 2a x1 x2 + 2b x2 x3 (x1 x2 instead of x1 x3).
      set(t, 1, 2, 1, p0());
      set(t, 2, 3, 1, p1());
      set(t, 1, 3, 2, Rational(-p1()));
      set(t, 2, 3, 2, p0());
      set(t, 3, 3, 3, one);
      return t;
    case Family::A32:
      // Printed 32: dx1/dt = (x1)^2 (square term in the wrong component).
      set(t, 1, 1, 1, one);
      return t;
    default:
      // All other printed systems match their multiplication tables.
      return build_family<Rational>(f, params);
  }
}

const std::vector<Erratum>& printed_system_errata() {
  static const std::vector<Erratum> e = {
      {Family::A5,
       "system 5: third component printed as 2x1x3 + (x3)^2; the table "
       "(e1e2=e3) gives 2x1x2 + (x3)^2"},
      {Family::A11,
       "system 11: second component printed as x2x3, dropping the "
       "parameter; the table (e2e3=b e2) gives 2b x2x3"},
      {Family::A23,
       "system 23: first component printed as 2a x1x2 + 2b x2x3; the table "
       "(e1e3=a e1 - b e2) gives 2a x1x3 + 2b x2x3"},
      {Family::A32,
       "system 32: square term printed in the first component; the table "
       "(e1^2=e2) puts (x1)^2 in the second component"},
  };
  return e;
}

}  // namespace hqds
