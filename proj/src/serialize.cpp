#include "apolar/serialize.hpp"

#include "apolar/parse.hpp"

namespace apolar {

namespace {

Json polys_to_json(const std::vector<MultiPoly>& polys) {
  Json a = Json::array();
  for (const auto& p : polys) a.push_back(format_poly(p));
  return a;
}

}  // namespace

Json to_json(const RankWitness& w) {
  Json j;
  j["degree"] = w.degree;
  j["rows"] = w.rows;
  j["cols"] = w.cols;
  j["rank"] = w.rank;
  j["regular"] = w.regular;
  return j;
}

Json to_json(const HilbertFunction& hf) {
  Json j;
  j["values"] = hf.values;
  j["socle_degree"] = hf.socle_degree;
  return j;
}

namespace {

// Shared body of the certificate schema; "verdict" differs between a
// standalone certificate (valid/invalid) and a decision (CI/not CI).
void fill_certificate(Json& j, const CICertificate& c) {
  j["type"] = c.type.degrees;
  j["socle_degree"] = c.type.socle_degree;
  j["generators"] = polys_to_json(c.generators);
  j["regseq"] = to_json(c.regseq);
  Json residues = Json::array();
  for (const auto& r : c.residues) residues.push_back(format_poly(r));
  j["contraction_residues"] = residues;
  j["jacobian_contraction"] = format_poly(c.jacobian_contraction);
  j["paper_conforming"] = c.type.paper_conforming;
}

}  // namespace

Json to_json(const CICertificate& c) {
  Json j;
  j["verdict"] = c.valid ? "valid" : "invalid";
  fill_certificate(j, c);
  j["degree_consistent"] = c.degree_consistent;
  return j;
}

Json to_json(const CIDecision& d) {
  Json j;
  j["verdict"] = d.is_ci ? "CI" : "not CI";
  if (d.is_ci) {
    fill_certificate(j, *d.certificate);
  } else {
    Json r;
    r["generator_count"] = d.refutation_degrees->size();
    r["generator_degrees"] = *d.refutation_degrees;
    j["refutation"] = r;
  }
  return j;
}

Json to_json(const SampleReport& r) {
  Json j;
  j["trials"] = r.trials;
  j["z1_count"] = r.z1_count;
  j["witness_count"] = r.witness_count;
  j["first_witness"] = r.first_witness ? polys_to_json(*r.first_witness) : Json(nullptr);
  j["seed"] = r.seed;
  j["note"] = r.note;
  return j;
}

Json to_json(const TableRowReport& r) {
  Json j;
  j["row"] = r.row;
  j["geometry"] = r.geometry;
  j["printed_inverse_system"] = r.printed_inverse_system;
  j["inverse_system"] = format_poly(r.inverse_system);
  j["hilbert_function"] = r.hf.values;
  j["generator_degrees"] = r.generator_degrees;
  j["ci"] = r.ci;
  j["printed_model"] = r.printed_model;
  j["model_parsed"] = r.model_parsed;
  j["model_matches"] = r.model_matches;
  j["notes"] = r.notes;
  return j;
}

}  // namespace apolar
