#include "planarlab/serialize.hpp"

namespace planarlab {

Json field_to_json(const Field& field) {
  Json j;
  j["p"] = field.p();
  j["r"] = field.r();
  j["modulus"] = field.modulus();
  return j;
}

Field field_from_json(const nlohmann::json& j) {
  Field field = make_field(j.at("p").get<unsigned>(), j.at("r").get<unsigned>());
  if (j.contains("modulus") && j.at("modulus").get<std::vector<unsigned>>() != field.modulus())
    throw Error(ErrorCode::FieldMismatch, "stored modulus is not the canonical one for this field");
  return field;
}

Json family_to_json(const FamilySpec& family) {
  Json j;
  j["kind"] = to_string(family.kind);
  if (family.kind == FamilyKind::AllReduced) j["max_deg"] = family.max_deg;
  return j;
}

Json witness_to_json(const Witness& w) {
  Json j;
  j["a"] = w.a;
  j["b"] = w.b;
  j["x"] = w.x;
  j["x2"] = w.x2;
  return j;
}

namespace {

Json big_list(const std::vector<BigInt>& v) {
  Json out = Json::array();
  for (const auto& x : v) {
    if (x >= 0 && x <= std::numeric_limits<std::int64_t>::max())
      out.push_back(static_cast<std::int64_t>(x));
    else
      out.push_back(x.str());
  }
  return out;
}

Json big(const BigInt& x) { return big_list({x})[0]; }

}  // namespace

Json mag_sq_to_json(const MagSqResult& m) {
  Json j;
  j["rational_integer"] = m.is_rational_integer;
  if (m.is_rational_integer)
    j["value"] = big(m.value);
  else
    j["value"] = nullptr;
  j["autocorrelation"] = big_list(m.autocorrelation);
  return j;
}

Json mub_report_to_json(const MubReport& report) {
  Json j;
  j["pass"] = report.pass;
  j["bases"] = report.bases;
  j["pairs_checked"] = report.pairs_checked;
  j["violation_count"] = report.violation_count;
  j["standard_basis_unbiased"] = report.standard_basis_unbiased;
  j["structural_errors"] = report.structural_errors;
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    Json jv;
    jv["basis1"] = v.basis1;
    jv["vector1"] = v.vector1;
    jv["basis2"] = v.basis2;
    jv["vector2"] = v.vector2;
    jv["expected"] = big(v.expected);
    jv["found"] = mag_sq_to_json(v.found);
    violations.push_back(std::move(jv));
  }
  j["violations"] = std::move(violations);
  return j;
}

Json search_report_to_json(const SearchReport& report, bool canonical) {
  Json j;
  j["field"] = field_to_json(report.field);
  j["family"] = family_to_json(report.family);
  j["mode"] = to_string(report.mode);
  j["tested"] = report.tested;
  Json hits = Json::array();
  for (const auto& h : report.hits) hits.push_back(h.poly.to_string());
  j["hits"] = std::move(hits);
  j["deterministic"] = report.deterministic;
  if (!canonical) j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

}  // namespace planarlab
