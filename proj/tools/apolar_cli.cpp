#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "apolar/parse.hpp"
#include "apolar/serialize.hpp"

namespace {

using namespace apolar;

// exit codes: 0 computed (whatever the verdict), 2 parse error,
// 3 invalid input, 4 internal invariant breach
constexpr int kParseExit = 2;
constexpr int kInvalidExit = 3;
constexpr int kInternalExit = 4;

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

/// Variable count: (max index over every polynomial input) + 1, overridable
/// upward with --nvars. Reported on stderr so stdout stays pure payload.
int infer_nvars(const std::vector<std::string>& texts, std::optional<int> override_nvars) {
  int max_index = -1;
  for (const auto& t : texts) max_index = std::max(max_index, max_variable_index(t));
  int inferred = std::max(max_index + 1, 1);
  if (override_nvars) {
    if (*override_nvars < inferred)
      throw ParseError("variable index " + std::to_string(max_index) +
                           " exceeds --nvars " + std::to_string(*override_nvars),
                       0);
    inferred = *override_nvars;
  }
  std::cerr << "nvars: " << inferred << "\n";
  return inferred;
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

void print_witness_text(const RankWitness& w) {
  std::cout << "degree: " << w.degree << "\n"
            << "rows: " << w.rows << "\n"
            << "cols: " << w.cols << "\n"
            << "rank: " << w.rank << "\n"
            << "regular: " << (w.regular ? "true" : "false") << "\n";
}

void print_certificate_text(const CICertificate& c, const std::string& verdict) {
  std::cout << "verdict: " << verdict << "\n"
            << "type: " << join_ints(c.type.degrees) << "\n"
            << "socle_degree: " << c.type.socle_degree << "\n"
            << "paper_conforming: " << (c.type.paper_conforming ? "true" : "false") << "\n"
            << "generators:\n";
  for (const auto& g : c.generators) std::cout << "  " << format_poly(g) << "\n";
  std::cout << "regseq: degree=" << c.regseq.degree << " rows=" << c.regseq.rows
            << " cols=" << c.regseq.cols << " rank=" << c.regseq.rank
            << " regular=" << (c.regseq.regular ? "true" : "false") << "\n";
  std::cout << "contraction_residues:";
  for (const auto& r : c.residues) std::cout << " " << format_poly(r) << ";";
  std::cout << "\n";
  std::cout << "jacobian_contraction: " << format_poly(c.jacobian_contraction) << "\n";
}

void emit_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run(int argc, char** argv) {
  CLI::App app{"Exact inverse systems of homogeneous polynomials and "
               "complete-intersection certificates"};
  app.require_subcommand(1);
  std::optional<int> nvars_override;
  app.add_option("--nvars", nvars_override, "Ambient variable count override");

  // contract
  std::string op_text, on_text;
  auto* cmd_contract = app.add_subcommand("contract", "Apply a polynomial as a "
                                          "differential operator to another");
  cmd_contract->add_option("--op", op_text, "Operator polynomial")->required();
  cmd_contract->add_option("--on", on_text, "Operand polynomial")->required();

  // ann
  std::string ann_poly;
  std::optional<int> ann_degree;
  bool ann_mingens = false, ann_json = false;
  auto* cmd_ann = app.add_subcommand("ann", "Annihilator slices or minimal generators");
  cmd_ann->add_option("--poly", ann_poly, "Inverse-system polynomial H")->required();
  cmd_ann->add_option("--degree", ann_degree, "Slice degree");
  cmd_ann->add_flag("--mingens", ann_mingens, "Minimal generators of Ann(H)");
  cmd_ann->add_flag("--json", ann_json, "JSON output");

  // hf
  std::string hf_poly;
  auto* cmd_hf = app.add_subcommand("hf", "Hilbert function of S/Ann(H)");
  cmd_hf->add_option("--poly", hf_poly, "Inverse-system polynomial H")->required();

  // certify
  std::string certify_poly, certify_gens;
  bool certify_json = false;
  auto* cmd_certify = app.add_subcommand(
      "certify", "Decide or verify that Ann(H) is a complete intersection");
  cmd_certify->add_option("--poly", certify_poly, "Polynomial H")->required();
  cmd_certify->add_option("--gens", certify_gens, "';'-separated forms to verify");
  cmd_certify->add_flag("--json", certify_json, "JSON output");

  // regseq
  std::string regseq_gens;
  auto* cmd_regseq = app.add_subcommand("regseq", "Regular-sequence test via the "
                                        "Macaulay matrix rank");
  cmd_regseq->add_option("--gens", regseq_gens, "';'-separated forms")->required();

  // jac
  std::string jac_gens;
  auto* cmd_jac = app.add_subcommand("jac", "Determinant of the Jacobian matrix");
  cmd_jac->add_option("--gens", jac_gens, "';'-separated forms")->required();

  // sample
  std::string sample_poly, sample_type;
  int sample_trials = 100;
  std::uint64_t sample_seed = 0;
  bool sample_json = false;
  auto* cmd_sample = app.add_subcommand("sample", "Randomized certificate search");
  cmd_sample->add_option("--poly", sample_poly, "Polynomial H")->required();
  cmd_sample->add_option("--type", sample_type, "Degree type, e.g. 2,2,2")->required();
  cmd_sample->add_option("--trials", sample_trials, "Number of draws");
  cmd_sample->add_option("--seed", sample_seed, "PRNG seed");
  cmd_sample->add_flag("--json", sample_json, "JSON output");

  // short
  auto* cmd_short = app.add_subcommand("short", "Short Gorenstein algebras with "
                                       "Hilbert function {1,3,3,1}");
  cmd_short->require_subcommand(1);
  std::string lambda_text;
  int row_id = 0;
  bool short_json = false;
  auto* cmd_legendre = cmd_short->add_subcommand("legendre", "Expanded Legendre cubic");
  cmd_legendre->add_option("--lambda", lambda_text, "Rational parameter p/q")->required();
  auto* cmd_j = cmd_short->add_subcommand("j", "j-invariant of the Legendre cubic");
  cmd_j->add_option("--lambda", lambda_text, "Rational parameter p/q")->required();
  auto* cmd_klambda = cmd_short->add_subcommand("klambda", "Quadric generators of "
                                                "Ann(H_lambda)");
  cmd_klambda->add_option("--lambda", lambda_text, "Rational parameter p/q")->required();
  auto* cmd_vrow = cmd_short->add_subcommand("verify-row", "Recompute one table row");
  cmd_vrow->add_option("--row", row_id, "Row 1..7")->required();
  cmd_vrow->add_option("--lambda", lambda_text, "Rational parameter (row 7)");
  cmd_vrow->add_flag("--json", short_json, "JSON output");
  auto* cmd_vkl = cmd_short->add_subcommand("verify-klambda",
                                            "Certificate for (x0*x1, F1, F2)");
  cmd_vkl->add_option("--lambda", lambda_text, "Rational parameter p/q")->required();
  cmd_vkl->add_flag("--json", short_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kParseExit;
  }

  if (cmd_contract->parsed()) {
    int n = infer_nvars({op_text, on_text}, nvars_override);
    std::cout << format_poly(contract(parse_poly(op_text, n), parse_poly(on_text, n)))
              << "\n";
    return 0;
  }

  if (cmd_ann->parsed()) {
    int n = infer_nvars({ann_poly}, nvars_override);
    MultiPoly H = parse_poly(ann_poly, n);
    if (ann_mingens == ann_degree.has_value())
      throw InvalidInput("ann: pass exactly one of --degree or --mingens");
    if (ann_degree) {
      GradedBasis basis = annihilator_piece(H, *ann_degree);
      if (ann_json) {
        Json j;
        j["degree"] = *ann_degree;
        j["dim"] = basis.dim();
        Json arr = Json::array();
        for (const auto& p : basis.polys()) arr.push_back(format_poly(p));
        j["basis"] = arr;
        emit_json(j);
      } else {
        for (const auto& p : basis.polys()) std::cout << format_poly(p) << "\n";
      }
    } else {
      MinimalGenerators gens = minimal_generators(H);
      if (ann_json) {
        Json j;
        j["count"] = gens.generators.size();
        j["degrees"] = gens.degrees();
        Json arr = Json::array();
        for (const auto& [d, g] : gens.generators) arr.push_back(format_poly(g));
        j["generators"] = arr;
        emit_json(j);
      } else {
        for (const auto& [d, g] : gens.generators)
          std::cout << d << ": " << format_poly(g) << "\n";
      }
    }
    return 0;
  }

  if (cmd_hf->parsed()) {
    int n = infer_nvars({hf_poly}, nvars_override);
    HilbertFunction hf = hilbert_function(parse_poly(hf_poly, n));
    std::cout << join_ints(hf.values) << "\n";
    return 0;
  }

  if (cmd_certify->parsed()) {
    std::vector<std::string> texts{certify_poly};
    std::vector<std::string> gen_texts;
    if (!certify_gens.empty()) {
      gen_texts = split_list(certify_gens, ';');
      texts.insert(texts.end(), gen_texts.begin(), gen_texts.end());
    }
    int n = infer_nvars(texts, nvars_override);
    MultiPoly H = parse_poly(certify_poly, n);
    if (gen_texts.empty()) {
      CIDecision decision = is_complete_intersection(H);
      if (certify_json) {
        emit_json(to_json(decision));
      } else if (decision.is_ci) {
        print_certificate_text(*decision.certificate, "CI");
      } else {
        std::cout << "verdict: not CI\n"
                  << "generator_count: " << decision.refutation_degrees->size() << "\n"
                  << "generator_degrees: " << join_ints(*decision.refutation_degrees)
                  << "\n";
      }
    } else {
      std::vector<MultiPoly> gens;
      gens.reserve(gen_texts.size());
      for (const auto& t : gen_texts) gens.push_back(parse_poly(t, n));
      CICertificate cert = verify_certificate(H, gens);
      if (certify_json)
        emit_json(to_json(cert));
      else
        print_certificate_text(cert, cert.valid ? "valid" : "invalid");
    }
    return 0;
  }

  if (cmd_regseq->parsed()) {
    auto gen_texts = split_list(regseq_gens, ';');
    int n = infer_nvars(gen_texts, nvars_override);
    std::vector<MultiPoly> gens;
    gens.reserve(gen_texts.size());
    for (const auto& t : gen_texts) gens.push_back(parse_poly(t, n));
    print_witness_text(is_regular_sequence(FormSystem(std::move(gens))));
    return 0;
  }

  if (cmd_jac->parsed()) {
    auto gen_texts = split_list(jac_gens, ';');
    int n = infer_nvars(gen_texts, nvars_override);
    std::vector<MultiPoly> gens;
    gens.reserve(gen_texts.size());
    for (const auto& t : gen_texts) gens.push_back(parse_poly(t, n));
    std::cout << format_poly(det(jacobian(gens))) << "\n";
    return 0;
  }

  if (cmd_sample->parsed()) {
    int n = infer_nvars({sample_poly}, nvars_override);
    MultiPoly H = parse_poly(sample_poly, n);
    std::vector<int> degrees;
    for (const auto& d : split_list(sample_type, ',')) {
      try {
        std::size_t used = 0;
        degrees.push_back(std::stoi(d, &used));
        if (used != d.size()) throw std::invalid_argument(d);
      } catch (const std::exception&) {
        throw ParseError("bad degree '" + d + "' in --type", 0);
      }
    }
    SampleReport report =
        sample_ci_witness(H, CIType::from_degrees(degrees), sample_trials, sample_seed);
    if (sample_json) {
      emit_json(to_json(report));
    } else {
      std::cout << "trials: " << report.trials << "\n"
                << "z1_count: " << report.z1_count << "\n"
                << "witness_count: " << report.witness_count << "\n";
      if (report.first_witness) {
        std::cout << "first_witness:\n";
        for (const auto& g : *report.first_witness)
          std::cout << "  " << format_poly(g) << "\n";
      } else {
        std::cout << "first_witness: none\n";
      }
      std::cout << "seed: " << report.seed << "\n";
      if (!report.note.empty()) std::cout << "note: " << report.note << "\n";
    }
    return 0;
  }

  if (cmd_short->parsed()) {
    auto lambda = [&] { return LegendreParam(parse_rational(lambda_text)); };
    if (cmd_legendre->parsed()) {
      std::cout << format_poly(legendre(lambda())) << "\n";
    } else if (cmd_j->parsed()) {
      std::cout << format_rational(j_invariant(lambda())) << "\n";
    } else if (cmd_klambda->parsed()) {
      for (const auto& g : k_lambda(lambda())) std::cout << format_poly(g) << "\n";
    } else if (cmd_vrow->parsed()) {
      std::optional<LegendreParam> param;
      if (!lambda_text.empty()) param = lambda();
      TableRowReport report = verify_table_row(row_id, param);
      if (short_json) {
        emit_json(to_json(report));
      } else {
        std::cout << "row: " << report.row << "\n"
                  << "geometry: " << report.geometry << "\n"
                  << "inverse_system: " << format_poly(report.inverse_system) << "\n"
                  << "hilbert_function: " << join_ints(report.hf.values) << "\n"
                  << "generator_degrees: " << join_ints(report.generator_degrees) << "\n"
                  << "ci: " << (report.ci ? "true" : "false") << "\n"
                  << "model_parsed: " << (report.model_parsed ? "true" : "false") << "\n"
                  << "model_matches: " << (report.model_matches ? "true" : "false")
                  << "\n";
        for (const auto& note : report.notes) std::cout << "note: " << note << "\n";
      }
    } else if (cmd_vkl->parsed()) {
      CICertificate cert = verify_k_lambda(lambda());
      if (short_json)
        emit_json(to_json(cert));
      else
        print_certificate_text(cert, cert.valid ? "valid" : "invalid");
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const apolar::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseExit;
  } catch (const apolar::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalidExit;
  } catch (const apolar::InternalError& e) {
    std::cerr << "internal invariant breach: " << e.what() << "\n";
    return kInternalExit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidExit;
  }
}
