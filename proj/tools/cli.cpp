#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "qfermat/census.hpp"
#include "qfermat/errors.hpp"
#include "qfermat/expr.hpp"
#include "qfermat/hilb1.hpp"
#include "qfermat/koszul.hpp"
#include "qfermat/report_json.hpp"

namespace qfermat::cli {

namespace {

struct Inputs {
  std::string params_file;
  std::string params_json;
  std::string format = "text";
  std::string algebra = "B";
  std::string poly;
  int conductor = 0;
  int generator = 0;
  int n = 0;
  int workers = 1;
  std::size_t witnesses = 8;
};

int default_workers() {
  if (const char* env = std::getenv("QFERMAT_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w >= 1) return w;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

QuantumParams load_params(const Inputs& in) {
  if (!in.params_file.empty() && !in.params_json.empty()) {
    throw InputError("give either --params or --params-json, not both");
  }
  if (!in.params_json.empty()) return parse_params(in.params_json);
  if (in.params_file.empty()) throw InputError("missing --params FILE or --params-json JSON");
  std::ifstream file(in.params_file);
  if (!file) throw InputError("cannot read parameter file " + in.params_file);
  std::stringstream buf;
  buf << file.rdbuf();
  return parse_params(buf.str());
}

Algebra parse_algebra(const std::string& s) { return s == "A" ? Algebra::A : Algebra::B; }

std::string join(const std::vector<int>& v, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string face_text(Face f) {
  std::vector<int> m = face_members(f);
  for (auto& x : m) ++x;
  return "{" + join(m, ",") + "}";
}

std::string scalars_text(const DiagAutomorphism& phi) {
  std::string out;
  for (std::size_t j = 0; j < phi.scalars.size(); ++j) {
    if (j) out += ", ";
    out += phi.scalars[j].to_string();
  }
  return out;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void print_matrix(std::ostream& out, const QuantumParams& p) {
  for (const auto& row : p.matrix()) out << "  " << join(row) << '\n';
}

int cmd_check_cy(const Inputs& in, std::ostream& out) {
  const auto params = load_params(in);
  const auto report = cy_criterion(params);
  const auto twist = is_twist_realizable(params);
  if (in.format == "json") {
    emit_json(out, to_json(report, twist));
  } else {
    out << "n = " << params.n() << '\n';
    out << "column sums: " << join(report.column_sums) << '\n';
    out << "Calabi-Yau: " << (report.is_cy ? "yes" : "no");
    if (report.common_value) out << " (common value " << *report.common_value << ")";
    out << '\n';
    out << "Serre twist scalars: " << scalars_text(report.serre_twist) << '\n';
    out << "twist is scalar: " << (report.twist_is_scalar ? "yes" : "no") << '\n';
    if (twist) out << "twist vector: " << join(*twist) << '\n';
  }
  return report.is_cy ? kTrue : kFalse;
}

int cmd_hilb1(const Inputs& in, std::ostream& out) {
  const auto params = load_params(in);
  const auto report = hilb1(params, parse_algebra(in.algebra));
  if (in.format == "json") {
    emit_json(out, to_json(report));
    return kTrue;
  }
  out << "Hilb^1(" << to_string(report.algebra) << "_" << report.n << ")\n";
  out << "generic: " << (report.complex.is_one_skeleton() ? "yes" : "no") << '\n';
  out << "triangle exponents:";
  for (const auto& t : report.triangles) out << " " << t.i + 1 << t.j + 1 << t.k + 1 << ":" << t.exponent;
  out << '\n';
  for (const auto& c : report.components) {
    out << "  face " << face_text(c.face) << ": " << to_string(c.kind) << ", dimension " << c.dimension
        << ", shift [" << join(c.shift) << "]";
    if (c.point_count) out << ", " << *c.point_count << " points, orbit length " << *c.orbit_length;
    out << '\n';
  }
  out << "discrete: " << (report.discrete ? "yes" : "no") << '\n';
  if (report.total_points) out << "total points: " << *report.total_points << '\n';
  return kTrue;
}

int cmd_census(const Inputs& in, std::ostream& out, std::ostream& err) {
  CensusOptions options;
  options.workers = in.workers;
  options.witness_limit = in.witnesses;
  const auto report = run_census(in.n, options);
  if (in.format == "json") {
    emit_json(out, to_json(report));
  } else {
    out << "n = " << report.n << ", matrices = " << report.total << '\n';
    out << "CY: " << report.count_cy << '\n';
    out << "generic: " << report.count_generic << '\n';
    out << "generic and CY: " << report.count_generic_and_cy << '\n';
    out << "generic with all column sums 0: " << report.count_generic_and_zero_column_sums << '\n';
    out << "generic CY by common value:";
    for (auto c : report.generic_cy_by_common_value) out << ' ' << c;
    out << '\n';
    out << "generic CY implies zero column sums: " << (report.all_generic_cy_have_zero_column_sums ? "yes" : "no")
        << " (" << report.implication_counterexample_count << " counterexamples)\n";
    out << "CY face complexes: full " << report.cy_full << ", 1-skeleton " << report.cy_one_skeleton
        << ", intermediate " << report.cy_intermediate << '\n';
    if (report.n4_dichotomy_holds) out << "n = 4 dichotomy: " << (*report.n4_dichotomy_holds ? "holds" : "fails") << '\n';
    out << "full vs twist-realizable mismatches: " << report.full_vs_realizable_mismatches << '\n';
    for (const auto& w : report.witnesses) {
      out << "witness:\n";
      print_matrix(out, w);
    }
  }
  if (!report.claims_hold()) err << "census: at least one checked claim does not hold\n";
  return report.claims_hold() ? kTrue : kFalse;
}

int cmd_central(const Inputs& in, std::ostream& out) {
  const auto params = load_params(in);
  if (in.poly.empty()) throw InputError("central needs --poly");
  const int conductor = in.conductor ? in.conductor : params.n();
  const auto f = lower(parse_poly(in.poly, params.n(), conductor), params, parse_algebra(in.algebra));
  if (f.is_zero()) throw InputError("polynomial is zero in " + in.algebra + "_" + std::to_string(params.n()));
  const bool central = is_central(f);
  const auto nu = normalizing_automorphism(f);
  if (in.format == "json") {
    Json j;
    j["poly"] = print_poly(f);
    j["algebra"] = to_string(f.algebra());
    j["is_central"] = central;
    j["normalizing"] = nu.has_value();
    j["automorphism"] = nu ? to_json(*nu) : Json(nullptr);
    emit_json(out, j);
  } else {
    out << "f = " << print_poly(f) << '\n';
    out << "central: " << (central ? "yes" : "no") << '\n';
    if (nu) {
      out << "normalizing: f x_j = c_j x_j f with c = " << scalars_text(*nu) << '\n';
    } else {
      out << "normalizing: no\n";
    }
  }
  return central ? kTrue : kFalse;
}

int cmd_frobenius(const Inputs& in, std::ostream& out) {
  const auto params = load_params(in);
  const auto cmp = compare_frobenius(params);
  if (in.format == "json") {
    emit_json(out, to_json(cmp));
  } else {
    out << "brute force:  " << scalars_text(cmp.bruteforce) << '\n';
    out << "closed form:  " << scalars_text(cmp.closedform) << '\n';
    out << "agree up to a global scalar: " << (cmp.agree_mod_scalar ? "yes" : "no");
    if (cmp.ratio) out << " (ratio " << cmp.ratio->to_string() << ")";
    out << '\n';
  }
  return cmp.agree_mod_scalar ? kTrue : kFalse;
}

int cmd_twist_check(const Inputs& in, std::ostream& out) {
  const auto params = load_params(in);
  const auto twist = is_twist_realizable(params);
  if (in.format == "json") {
    Json j;
    j["realizable"] = twist.has_value();
    j["twist_vector"] = twist ? Json(*twist) : Json(nullptr);
    emit_json(out, j);
  } else if (twist) {
    out << "twist-realizable: e_ij = d_i - d_j with d = " << join(*twist) << '\n';
  } else {
    out << "not twist-realizable\n";
  }
  return twist ? kTrue : kFalse;
}

int cmd_patch(const Inputs& in, std::ostream& out) {
  const auto params = load_params(in);
  const int m = in.generator ? in.generator : params.n();
  if (m < 1 || m > params.n()) throw InputError("--generator must be in 1.." + std::to_string(params.n()));
  const auto patch = dehomogenize(params, m - 1);
  if (in.format == "json") {
    emit_json(out, to_json(patch));
    return kTrue;
  }
  std::vector<int> gens = patch.labels;
  for (auto& g : gens) ++g;
  out << "patch x" << m << " inverted, generators X_i = x_i x" << m << "^-1 for i in " << join(gens, ",") << '\n';
  out << "exponents mod " << patch.modulus << ":\n";
  for (int a = 0; a < patch.size(); ++a) {
    std::vector<int> row;
    for (int b = 0; b < patch.size(); ++b) row.push_back(patch.e(a, b));
    out << "  " << join(row) << '\n';
  }
  out << "antisymmetric: " << (patch.antisymmetric() ? "yes" : "no") << '\n';
  out << "literal q_ij/(q_mi q_mj) antisymmetric: " << (patch.printed_antisymmetric ? "yes" : "no") << '\n';
  return kTrue;
}

int cmd_eval(const Inputs& in, std::ostream& out) {
  const auto params = load_params(in);
  if (in.poly.empty()) throw InputError("eval needs --poly");
  const int conductor = in.conductor ? in.conductor : params.n();
  const auto f = lower(parse_poly(in.poly, params.n(), conductor), params, parse_algebra(in.algebra));
  if (in.format == "json") {
    Json j;
    j["poly"] = print_poly(f);
    j["algebra"] = to_string(f.algebra());
    j["conductor"] = f.field()->conductor();
    Json terms = Json::array();
    for (const auto& [a, c] : f.terms()) {
      Json t;
      t["multidegree"] = a.degs;
      t["coeff"] = to_json(c);
      terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    emit_json(out, j);
  } else {
    out << print_poly(f) << '\n';
  }
  return kTrue;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qfermat: quantum Fermat algebras, Calabi-Yau checks and point-module census", "qfermat"};
  app.require_subcommand(1);
  Inputs in;
  in.workers = default_workers();

  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--params", in.params_file, "Parameter JSON file");
    sub->add_option("--params-json", in.params_json, "Inline parameter JSON");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", in.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_algebra = [&](CLI::App* sub) {
    sub->add_option("--algebra", in.algebra, "B (skew polynomial ring) or A (Fermat quotient)")
        ->check(CLI::IsMember({"A", "B"}));
  };

  auto* check_cy = app.add_subcommand("check-cy", "Calabi-Yau criterion (column products of q_ij)");
  add_params(check_cy);
  add_format(check_cy);

  auto* hilb = app.add_subcommand("hilb1", "Classify point modules");
  add_params(hilb);
  add_format(hilb);
  add_algebra(hilb);

  auto* census = app.add_subcommand("census", "Exhaustive census over all antisymmetric matrices mod n");
  census->add_option("--n", in.n, "Number of generators (3..6)")->required();
  census->add_option("--workers", in.workers, "Parallel workers (default $QFERMAT_WORKERS or 1)")
      ->check(CLI::PositiveNumber);
  census->add_option("--witnesses", in.witnesses, "Maximum number of witnesses to report");
  add_format(census);

  auto* central = app.add_subcommand("central", "Centrality and normalizing automorphism of a polynomial");
  add_params(central);
  add_format(central);
  add_algebra(central);
  central->add_option("--poly", in.poly, "Polynomial expression, e.g. \"x1*x2*x3\"")->required();
  central->add_option("--conductor", in.conductor, "Coefficient conductor (multiple of n)");

  auto* frob = app.add_subcommand("frobenius", "Compare the Nakayama automorphism of B^! with the closed form");
  add_params(frob);
  add_format(frob);

  auto* twist = app.add_subcommand("twist-check", "Is e_ij = d_i - d_j for some d?");
  add_params(twist);
  add_format(twist);

  auto* patch = app.add_subcommand("patch", "Commutation exponents of an affine patch");
  add_params(patch);
  add_format(patch);
  patch->add_option("--generator", in.generator, "Inverted generator, 1-based (default n)");

  auto* eval = app.add_subcommand("eval", "Parse, normal-order and print a polynomial");
  add_params(eval);
  add_format(eval);
  add_algebra(eval);
  eval->add_option("--poly", in.poly, "Polynomial expression")->required();
  eval->add_option("--conductor", in.conductor, "Coefficient conductor (multiple of n)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kTrue : kInputError;
  }

  try {
    if (check_cy->parsed()) return cmd_check_cy(in, out);
    if (hilb->parsed()) return cmd_hilb1(in, out);
    if (census->parsed()) return cmd_census(in, out, err);
    if (central->parsed()) return cmd_central(in, out);
    if (frob->parsed()) return cmd_frobenius(in, out);
    if (twist->parsed()) return cmd_twist_check(in, out);
    if (patch->parsed()) return cmd_patch(in, out);
    if (eval->parsed()) return cmd_eval(in, out);
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kCapacityError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const FieldMismatch& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace qfermat::cli
