#include "qfermat/report_json.hpp"

#include "qfermat/expr.hpp"

namespace qfermat {

namespace {

Json params_list(const std::vector<QuantumParams>& list) {
  Json out = Json::array();
  for (const auto& p : list) out.push_back(params_to_json(p));
  return out;
}

std::vector<int> one_based(std::vector<int> v) {
  for (auto& x : v) ++x;
  return v;
}

}  // namespace

Json to_json(const Cyclotomic& c) {
  Json out;
  out["conductor"] = c.conductor();
  Json coords = Json::array();
  for (const auto& q : c.coords()) coords.push_back(rational_to_string(q));
  out["coords"] = std::move(coords);
  return out;
}

Cyclotomic cyclotomic_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("conductor") || !j.contains("coords")) {
    throw InputError("cyclotomic value needs conductor and coords");
  }
  const FieldRef field = CycloField::get(j["conductor"].get<int>());
  std::vector<mpq_class> coords;
  for (const auto& s : j["coords"]) {
    mpq_class q;
    if (q.set_str(s.get<std::string>(), 10) != 0) throw InputError("bad rational '" + s.get<std::string>() + "'");
    if (q.get_den() == 0) throw InputError("zero denominator in '" + s.get<std::string>() + "'");
    q.canonicalize();
    coords.push_back(std::move(q));
  }
  return Cyclotomic::from_coords(field, std::move(coords));
}

Json to_json(const DiagAutomorphism& phi) {
  Json out = Json::array();
  for (const auto& c : phi.scalars) out.push_back(to_json(c));
  return out;
}

Json face_to_json(Face face) { return one_based(face_members(face)); }

Json to_json(const CyReport& report, const std::optional<std::vector<int>>& twist) {
  Json out;
  out["is_cy"] = report.is_cy;
  out["column_sums"] = report.column_sums;
  out["common_value"] = report.common_value ? Json(*report.common_value) : Json(nullptr);
  out["serre_scalars"] = to_json(report.serre_twist);
  out["twist_is_scalar"] = report.twist_is_scalar;
  if (twist) out["twist_vector"] = *twist;
  return out;
}

Json to_json(const FrobeniusComparison& cmp) {
  Json out;
  out["agree_mod_scalar"] = cmp.agree_mod_scalar;
  out["ratio"] = cmp.ratio ? to_json(*cmp.ratio) : Json(nullptr);
  out["bruteforce"] = to_json(cmp.bruteforce);
  out["closedform"] = to_json(cmp.closedform);
  return out;
}

Json to_json(const PatchParams& patch) {
  Json out;
  out["modulus"] = patch.modulus;
  out["inverted"] = patch.inverted + 1;
  out["generators"] = one_based(patch.labels);
  const int k = patch.size();
  Json m = Json::array();
  Json printed = Json::array();
  for (int a = 0; a < k; ++a) {
    std::vector<int> row, prow;
    for (int b = 0; b < k; ++b) {
      row.push_back(patch.e(a, b));
      prow.push_back(patch.printed_exps[static_cast<std::size_t>(a * k + b)]);
    }
    m.push_back(row);
    printed.push_back(prow);
  }
  out["exponents"] = std::move(m);
  out["antisymmetric"] = patch.antisymmetric();
  out["printed_formula_exponents"] = std::move(printed);
  out["printed_formula_antisymmetric"] = patch.printed_antisymmetric;
  return out;
}

Json to_json(const FaceComplex& complex) {
  Json out;
  out["n"] = complex.n;
  Json faces = Json::array();
  for (Face f : complex.maximal_faces) faces.push_back(face_to_json(f));
  out["maximal_faces"] = std::move(faces);
  out["is_full"] = complex.is_full;
  out["is_one_skeleton"] = complex.is_one_skeleton();
  return out;
}

Json to_json(const Hilb1Report& report) {
  Json out;
  out["n"] = report.n;
  out["algebra"] = to_string(report.algebra);
  out["genericity"] = "every triangle exponent e_ij + e_jk + e_ki is nonzero mod n";
  Json tris = Json::array();
  for (const auto& t : report.triangles) {
    Json jt;
    jt["triangle"] = {t.i + 1, t.j + 1, t.k + 1};
    jt["exponent"] = t.exponent;
    tris.push_back(std::move(jt));
  }
  out["triangles"] = std::move(tris);
  out["complex"] = to_json(report.complex);
  Json comps = Json::array();
  for (const auto& c : report.components) {
    Json jc;
    jc["face"] = face_to_json(c.face);
    jc["kind"] = to_string(c.kind);
    jc["dimension"] = c.dimension;
    jc["shift"] = c.shift;
    if (c.point_count) {
      jc["point_count"] = *c.point_count;
      Json pts = Json::array();
      for (const auto& p : c.points) {
        Json jp = Json::array();
        for (const auto& x : p) jp.push_back(to_json(x));
        pts.push_back(std::move(jp));
      }
      jc["points"] = std::move(pts);
      jc["orbits"] = c.orbits;
      jc["orbit_length"] = *c.orbit_length;
    }
    comps.push_back(std::move(jc));
  }
  out["components"] = std::move(comps);
  out["discrete"] = report.discrete;
  out["total_points"] = report.total_points ? Json(*report.total_points) : Json(nullptr);
  return out;
}

Json to_json(const CensusReport& r) {
  Json out;
  out["n"] = r.n;
  out["total"] = r.total;
  out["count_cy"] = r.count_cy;
  out["count_generic"] = r.count_generic;
  out["count_generic_and_cy"] = r.count_generic_and_cy;
  Json alt;
  alt["count_zero_column_sums"] = r.count_zero_column_sums;
  alt["count_generic_and_zero_column_sums"] = r.count_generic_and_zero_column_sums;
  alt["generic_cy_by_common_value"] = r.generic_cy_by_common_value;
  out["alternative_readings"] = std::move(alt);
  out["all_generic_cy_have_zero_column_sums"] = r.all_generic_cy_have_zero_column_sums;
  out["implication_counterexample_count"] = r.implication_counterexample_count;
  out["implication_counterexamples"] = params_list(r.implication_counterexamples);
  Json shapes;
  shapes["full"] = r.cy_full;
  shapes["one_skeleton"] = r.cy_one_skeleton;
  shapes["intermediate"] = r.cy_intermediate;
  out["cy_face_complex_shapes"] = std::move(shapes);
  out["n4_dichotomy_holds"] = r.n4_dichotomy_holds ? Json(*r.n4_dichotomy_holds) : Json(nullptr);
  out["dichotomy_counterexamples"] = params_list(r.dichotomy_counterexamples);
  out["count_twist_realizable"] = r.count_twist_realizable;
  out["full_vs_realizable_mismatches"] = r.full_vs_realizable_mismatches;
  out["witnesses"] = params_list(r.witnesses);
  out["claims_hold"] = r.claims_hold();
  return out;
}

}  // namespace qfermat
