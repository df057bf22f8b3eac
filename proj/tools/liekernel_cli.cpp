// Command-line front end. Every subcommand builds a JSON report
// {schema, command, input, fingerprint, mode, result}; --json prints it
// verbatim, otherwise the result is printed as "key: value" lines.
//
// Exit codes: 0 success, 1 domain error or failed check suite, 2 usage error.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "liekernel/cohomology.hpp"
#include "liekernel/families.hpp"
#include "liekernel/g2flow.hpp"
#include "liekernel/kernelmap.hpp"
#include "liekernel/parser.hpp"
#include "liekernel/suite.hpp"

using json = nlohmann::ordered_json;
using namespace liekernel;

namespace {

constexpr const char* kSchema = "liekernel.report/1";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AlgebraInput {
  std::string expr;
  std::vector<std::string> binds;
  std::string fixture;
  std::string entry;
};

struct Report {
  std::string command;
  json input = json::object();
  json result = json::object();
  bool exact = true;
  double tol = 0;
  bool failed = false;  // a check suite reported failures
};

json rational_json(const Rational& x) { return x.get_str(); }

json vector_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rational_json(x));
  return out;
}

json subspace_json(const Subspace& s) {
  json out = json::array();
  for (const auto& v : s.basis()) out.push_back(vector_json(v));
  return out;
}

json optional_double(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

Rational rational_arg(const std::string& text, const std::string& what) {
  auto r = parse_rational(text);
  if (!r) throw UsageError(what + ": '" + text + "' is not a rational p or p/q");
  return *r;
}

Bindings parse_binds(const std::vector<std::string>& binds) {
  Bindings out;
  for (const auto& b : binds) {
    const size_t eq = b.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--bind expects name=p/q, got '" + b + "'");
    out[b.substr(0, eq)] = rational_arg(b.substr(eq + 1), "--bind");
  }
  return out;
}

struct ResolvedAlgebra {
  AlgebraExpr expr;
  Bindings bindings;
  std::string name;
  std::optional<std::vector<int>> grading;
};

ResolvedAlgebra resolve(const AlgebraInput& in) {
  ResolvedAlgebra r;
  if (!in.fixture.empty()) {
    if (!in.expr.empty()) throw UsageError("give either an expression or --fixture, not both");
    const auto entries = load_fixture(in.fixture);
    const FixtureEntry* found = nullptr;
    for (const auto& e : entries) {
      if (in.entry.empty() ? entries.size() == 1 : e.name == in.entry) found = &e;
    }
    if (!found) {
      throw UsageError(in.entry.empty() ? "--fixture has several entries; choose one with --entry"
                                        : "no entry named '" + in.entry + "' in " + in.fixture);
    }
    r = {found->expr, found->bindings, found->name, found->grading};
  } else {
    if (in.expr.empty()) throw UsageError("missing algebra expression");
    r.expr = parse(in.expr);
  }
  for (const auto& [k, v] : parse_binds(in.binds)) r.bindings[k] = v;
  return r;
}

void echo_algebra(Report& rep, const ResolvedAlgebra& a) {
  rep.input["expr"] = serialize(a.expr);
  json b = json::object();
  for (const auto& [k, v] : a.bindings) b[k] = rational_json(v);
  rep.input["bind"] = b;
  if (!a.name.empty()) rep.input["entry"] = a.name;
}

LieAlgebra build(const ResolvedAlgebra& a) { return LieAlgebra::validate(instantiate(a.expr, a.bindings), a.name); }

Matrix parse_f(const std::string& text) {
  std::vector<Rational> v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(rational_arg(tok, "--F"));
  if (v.size() != 4) throw UsageError("--F expects four comma-separated rationals a,b,c,d (row-major)");
  return Matrix::from_rows({{v[0], v[1]}, {v[2], v[3]}}, 2);
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i) out.push_back(vector_json(m.row(i)));
  return out;
}

// ---- subcommands ------------------------------------------------------------

void cmd_parse(Report& rep, const AlgebraInput& in) {
  const ResolvedAlgebra a = resolve(in);
  echo_algebra(rep, a);
  rep.result["n"] = a.expr.n;
  rep.result["expression"] = serialize(a.expr);
  json params = json::array();
  bool bound = true;
  for (const auto& p : a.expr.parameters()) {
    params.push_back(p);
    bound = bound && a.bindings.count(p);
  }
  rep.result["parameters"] = params;
  if (bound) {
    const StructureConstants c = instantiate(a.expr, a.bindings);
    rep.result["instantiated"] = serialize(to_expr(c));
    const auto violation = c.jacobi_violation();
    rep.result["jacobi"] = !violation;
    if (violation) rep.result["jacobi_violation"] = *violation;
  }
}

void cmd_betti(Report& rep, const AlgebraInput& in) {
  const ResolvedAlgebra a = resolve(in);
  echo_algebra(rep, a);
  const CohomologyReport r = betti(build(a));
  rep.result["n"] = a.expr.n;
  rep.result["b"] = r.betti;
  rep.result["dim_z"] = r.dim_z;
  rep.result["dim_b"] = r.dim_b;
}

void cmd_kernel(Report& rep, const AlgebraInput& in) {
  const ResolvedAlgebra a = resolve(in);
  echo_algebra(rep, a);
  const LieAlgebra g = build(a);
  const LieKernel kernel(g);
  const CohomologyReport r = betti(g);
  const int n = g.dim();
  rep.result["n"] = n;
  rep.result["dim"] = kernel.dim();
  rep.result["b1"] = r.betti[1];
  rep.result["formula"] = r.betti[1] + n * (n - 3) / 2;
  json basis = json::array();
  for (const auto& p : kernel.elements()) basis.push_back(to_string(p));
  rep.result["basis"] = basis;
  const DPProperties props = dP_properties(g);
  rep.result["dP"] = {{"injective", props.injective}, {"surjective_onto_z3", props.surjective_onto_z3}};
}

void cmd_check23(Report& rep, const AlgebraInput& in) {
  const ResolvedAlgebra a = resolve(in);
  echo_algebra(rep, a);
  const CohomologyReport r = betti(build(a));
  auto b = [&](size_t k) { return k < r.betti.size() ? r.betti[k] : 0; };
  rep.result["is_23_trivial"] = is_23_trivial(r);
  rep.result["b2"] = b(2);
  rep.result["b3"] = b(3);
}

void cmd_structure(Report& rep, const AlgebraInput& in) {
  const ResolvedAlgebra a = resolve(in);
  echo_algebra(rep, a);
  const LieAlgebra g = build(a);
  const StructureCertificate c = structure_certificate(g);
  rep.result["solvable"] = c.solvable;
  rep.result["nilpotent"] = c.nilpotent;
  rep.result["unimodular"] = is_unimodular(g);
  rep.result["b1"] = c.b1;
  rep.result["derived_codim"] = c.derived_codim;
  rep.result["derived_nilpotent"] = c.derived_nilpotent;
  rep.result["basis_aligned_split"] = c.basis_aligned_split;
  rep.result["consistent_with_23_trivial"] = c.consistent_with_23_trivial();
  json ds = json::array(), lcs = json::array();
  for (const auto& s : derived_series(g)) ds.push_back(s.dim());
  for (const auto& s : lower_central_series(g)) lcs.push_back(s.dim());
  rep.result["derived_series"] = ds;
  rep.result["lower_central_series"] = lcs;
}

void cmd_tables(Report& rep, int threads) {
  const auto checks = verify_tables(threads);
  json rows = json::array();
  int failures = 0;
  for (const auto& c : checks) {
    json row;
    row["family"] = c.spec.family;
    row["lambda"] = c.spec.lambda ? rational_json(*c.spec.lambda) : json(nullptr);
    row["mu"] = c.spec.mu ? rational_json(*c.spec.mu) : json(nullptr);
    row["admissible"] = c.admissible;
    row["expression"] = c.expression;
    row["is_23_trivial"] = c.is_23_trivial;
    row["certificate_ok"] = c.certificate_ok;
    row["passed"] = c.passed;
    rows.push_back(row);
    if (!c.passed) ++failures;
  }
  rep.result["total"] = checks.size();
  rep.result["failures"] = failures;
  rep.result["checks"] = rows;
  rep.failed = failures > 0;
}

std::vector<int> parse_weights(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("--weights expects comma-separated integers, got '" + text + "'");
    }
  }
  return out;
}

void cmd_extend(Report& rep, const AlgebraInput& in, const std::string& weights) {
  ResolvedAlgebra a = resolve(in);
  echo_algebra(rep, a);
  if (!weights.empty()) a.grading = parse_weights(weights);
  if (!a.grading) throw UsageError("extend needs --weights or a fixture entry with a grading");
  rep.input["weights"] = *a.grading;
  const LieAlgebra ext = graded_extension(make_graded(build(a), *a.grading));
  const CohomologyReport r = betti(ext);
  rep.result["extension"] = serialize(to_expr(ext.constants()));
  rep.result["b"] = r.betti;
  rep.result["is_23_trivial"] = is_23_trivial(r);
}

void cmd_derivations(Report& rep, const AlgebraInput& in, int scan) {
  const ResolvedAlgebra a = resolve(in);
  echo_algebra(rep, a);
  const LieAlgebra g = build(a);
  rep.result["dim"] = derivation_algebra(g).dim();
  const bool nilpotent = is_nilpotent(g);
  rep.result["nilpotent"] = nilpotent;
  rep.result["derivation_algebra_nilpotent"] = is_nilpotent(derivation_lie_algebra(g));
  rep.result["characteristically_nilpotent"] = nilpotent ? json(is_characteristically_nilpotent(g)) : json(nullptr);
  if (scan > 0) {
    rep.input["scan"] = scan;
    const ExtensionScan s = scan_solvable_extensions(g, scan);
    rep.result["scan"] = {{"derivations_tried", s.derivations_tried},
                          {"extensions_23_trivial", s.extensions_23_trivial},
                          {"extensions_with_invariant_cohomology", s.extensions_with_invariant_cohomology}};
  }
}

void cmd_mmmap(Report& rep, const AlgebraInput& in, const std::string& beta, const std::string& psi) {
  const ResolvedAlgebra a = resolve(in);
  echo_algebra(rep, a);
  if (beta.empty() == psi.empty()) throw UsageError("mmmap needs exactly one of --beta or --psi");
  const LieAlgebra g = build(a);
  const LieKernel kernel(g);
  if (!beta.empty()) {
    rep.input["beta"] = beta;
    const PDualElement b = kernel.make_dual(parse_form(beta, g.dim()));
    rep.result["beta"] = to_string(b.representative);
    rep.result["dP"] = to_string(dP(kernel, b));
  } else {
    rep.input["psi"] = psi;
    const PDualElement b = multimoment_value(kernel, parse_form(psi, g.dim()));
    rep.result["beta"] = to_string(b.representative);
  }
}

void cmd_orbit(Report& rep, const AlgebraInput& in, const std::string& beta) {
  const ResolvedAlgebra a = resolve(in);
  echo_algebra(rep, a);
  if (beta.empty()) throw UsageError("orbit needs --beta");
  rep.input["beta"] = beta;
  const LieAlgebra g = build(a);
  const LieKernel kernel(g);
  const PDualElement b = kernel.make_dual(parse_form(beta, g.dim()));
  const OrbitCheck o = orbit_2plectic_check(kernel, b);
  rep.result["dP"] = to_string(dP(kernel, b));
  rep.result["condition_holds"] = o.condition_holds;
  rep.result["orbit_dim"] = o.orbit_dim;
  rep.result["stabilizer"] = subspace_json(o.stabilizer);
  rep.result["kernel"] = subspace_json(o.kernel);
}

void cmd_g2_verify(Report& rep, const std::string& ftext) {
  const Matrix f = parse_f(ftext);
  rep.input["F"] = ftext;
  const KForm phi = phi0();
  const KForm star = star_phi0();
  rep.result["star_phi0_matches_hodge"] = hodge_star(phi, Matrix::identity(7), 1) == star;
  const MetricFromPhi m = metric_from_phi(phi);
  rep.result["metric_identity"] = m.exact && m.gram == Matrix::identity(7);
  const G2T2Frame frame = g2t2_decompose(phi, star, unit_vector(7, 0), unit_vector(7, 1), Matrix::identity(7));
  rep.result["reconstruct_phi"] = reconstruct_phi(frame) == phi;
  rep.result["reconstruct_star_phi"] = reconstruct_star_phi(frame) == star;
  const auto t = hyperkahler_triple();
  const SU3Forms su = su3_structure(make_coherent_triple(t[0], t[1], t[2]));
  rep.result["su3_normalization"] =
      wedge(su.psi_plus, su.psi_minus) == Rational(2, 3) * wedge(su.sigma, su.sigma, su.sigma);
  rep.result["halfflat_at_t0"] = halfflat_condition(f, Matrix::identity(2));
  const TorsionFreeReport r = dga_verify_torsion_free(f);
  rep.result["dga"] = {{"dga_consistent", r.dga_consistent},
                       {"d_phi_zero", r.d_phi_zero},
                       {"d_star_phi_zero", r.d_star_phi_zero},
                       {"psi_plus_evolution", r.psi_plus_evolution},
                       {"sigma_sq_evolution", r.sigma_sq_evolution},
                       {"d_phi", to_string(r.d_phi)},
                       {"d_star_phi", to_string(r.d_star_phi)}};
}

void cmd_g2_flow(Report& rep, const std::string& ftext, std::optional<double> t_end, double step, bool compare,
                 const std::string& csv) {
  const Matrix f = parse_f(ftext);
  const FlowInterval interval = flow_interval(f);
  const double end = t_end ? *t_end : (interval.upper ? 0.9 * *interval.upper : 1.0);
  rep.input["F"] = ftext;
  rep.input["t_end"] = end;
  rep.input["step"] = step;
  rep.exact = false;
  rep.tol = 1e-8;
  rep.result["A"] = matrix_json(flow_generator(f));
  rep.result["interval"] = {{"lower", optional_double(interval.lower)}, {"upper", optional_double(interval.upper)}};
  rep.result["completeness"] = to_string(completeness_classify(f));
  const FlowRun run = flow_integrate(f, end, step);
  const FlowSample& last = run.trajectory.back();
  rep.result["steps"] = run.trajectory.size() - 1;
  rep.result["final"] = {{"t", last.t}, {"q11", last.q11}, {"q12", last.q12}, {"q22", last.q22}, {"h", last.h}};
  rep.result["max_invariant_residual"] = run.max_invariant_residual;
  if (compare) {
    const FlowComparison c = compare_with_closed_form(f, end, step);
    rep.result["max_abs_err"] = c.max_abs_error;
    rep.result["final_h_err"] = c.final_h_error;
    rep.result["within_tol"] = c.max_abs_error < rep.tol;
  }
  if (!csv.empty()) {
    std::ofstream out(csv);
    if (!out) throw UsageError("cannot write " + csv);
    out.precision(17);
    out << "t,q11,q12,q22,h\n";
    for (const auto& s : run.trajectory) out << s.t << ',' << s.q11 << ',' << s.q12 << ',' << s.q22 << ',' << s.h << '\n';
    rep.input["csv"] = csv;
  }
}

void cmd_corpus(Report& rep, const std::string& fixture, int threads) {
  const std::string path = fixture.empty() ? default_corpus_path() : fixture;
  rep.input["fixture"] = fixture.empty() ? "default" : fixture;
  const auto corpus = load_corpus(path);
  SuiteOptions options;
  options.threads = threads;
  const auto results = run_corpus_suite(corpus, options);
  json failed = json::array();
  std::map<std::string, int> counts;
  for (const auto& r : results) {
    ++counts[r.property];
    if (!r.passed) failed.push_back({{"property", r.property}, {"algebra", r.algebra}, {"detail", r.detail}});
  }
  rep.result["algebras"] = corpus.size();
  rep.result["checks"] = results.size();
  rep.result["failures"] = failed.size();
  rep.result["properties"] = counts;
  rep.result["failed"] = failed;
  rep.failed = !failed.empty();
}

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

json envelope(const Report& rep) {
  json out;
  out["schema"] = kSchema;
  out["command"] = rep.command;
  out["input"] = rep.input;
  out["fingerprint"] = hex64(fnv1a(rep.command + "\n" + rep.input.dump()));
  out["mode"] = rep.exact ? "exact" : "float";
  if (!rep.exact) out["tol"] = rep.tol;
  out["result"] = rep.result;
  return out;
}

void print_human(const json& j, const std::string& indent = "") {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      std::cout << indent << key << ":\n";
      print_human(value, indent + "  ");
    } else {
      std::cout << indent << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie algebra cohomology, Lie kernels and G2 flow checks"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Print the JSON report");

  AlgebraInput in;
  auto algebra_command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("expr", in.expr, "Algebra in tuple notation, e.g. (0,0,12)");
    sub->add_option("--bind", in.binds, "Parameter binding name=p/q (repeatable)")->allow_extra_args(false);
    sub->add_option("--fixture", in.fixture, "Read the algebra from a .lie file");
    sub->add_option("--entry", in.entry, "Entry name within --fixture");
    return sub;
  };

  CLI::App* parse_cmd = algebra_command("parse", "Parse and canonicalize an expression");
  CLI::App* betti_cmd = algebra_command("betti", "Betti numbers");
  CLI::App* kernel_cmd = algebra_command("kernel", "Lie kernel P and properties of d_P");
  CLI::App* check23_cmd = algebra_command("check23", "Test b2 = b3 = 0");
  CLI::App* structure_cmd = algebra_command("structure", "Solvability, nilpotency and related invariants");
  CLI::App* extend_cmd = algebra_command("extend", "Extension of a graded nilpotent algebra by its grading");
  CLI::App* deriv_cmd = algebra_command("derivations", "Derivation algebra");
  CLI::App* mmmap_cmd = algebra_command("mmmap", "d_P of a 2-form, or the multi-moment value of a 3-form");
  CLI::App* orbit_cmd = algebra_command("orbit", "Compare stab(beta) with ker(d_P beta)");

  std::string weights;
  extend_cmd->add_option("--weights", weights, "Positive weights, e.g. 1,1,2");
  int scan = 0;
  deriv_cmd->add_option("--scan", scan, "Also scan extensions with this many sampled combinations");
  std::string beta, psi;
  mmmap_cmd->add_option("--beta", beta, "2-form, e.g. 34-67");
  mmmap_cmd->add_option("--psi", psi, "Closed 3-form in the image of d_P");
  orbit_cmd->add_option("--beta", beta, "2-form, e.g. 34-67");

  int threads = 0;
  CLI::App* tables_cmd = app.add_subcommand("tables", "Verify the solvable families on their parameter grids");
  tables_cmd->add_option("--threads", threads, "Worker threads (default: LIEKERNEL_THREADS or hardware)");

  std::string ftext = "0,1,0,0";
  std::optional<double> t_end;
  double step = 1e-3;
  bool compare = false;
  std::string csv;
  CLI::App* g2v_cmd = app.add_subcommand("g2-verify", "Pointwise G2 identities and the flow torsion-free certificate");
  g2v_cmd->add_option("--F", ftext, "Curvature coefficients a,b,c,d (row-major)");
  CLI::App* g2f_cmd = app.add_subcommand("g2-flow", "RK4 integration of the constant-curvature flow");
  g2f_cmd->add_option("--F", ftext, "Curvature coefficients a,b,c,d (row-major)");
  g2f_cmd->add_option("--t-end", t_end, "End time (default 90% of the interval, else 1)");
  g2f_cmd->add_option("--step", step, "RK4 step")->check(CLI::PositiveNumber);
  g2f_cmd->add_flag("--compare-closed-form", compare, "Compare with the closed-form solution");
  g2f_cmd->add_option("--csv", csv, "Write the trajectory (t,q11,q12,q22,h) to this file");

  std::string corpus_fixture;
  CLI::App* corpus_cmd = app.add_subcommand("corpus", "Run the property suite on a fixture corpus");
  corpus_cmd->add_option("--fixture", corpus_fixture, "Corpus file (default: the bundled corpus)");
  corpus_cmd->add_option("--threads", threads, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Report rep;
  CLI::App* sub = app.get_subcommands().front();
  rep.command = sub->get_name();
  try {
    if (sub == parse_cmd) cmd_parse(rep, in);
    else if (sub == betti_cmd) cmd_betti(rep, in);
    else if (sub == kernel_cmd) cmd_kernel(rep, in);
    else if (sub == check23_cmd) cmd_check23(rep, in);
    else if (sub == structure_cmd) cmd_structure(rep, in);
    else if (sub == extend_cmd) cmd_extend(rep, in, weights);
    else if (sub == deriv_cmd) cmd_derivations(rep, in, scan);
    else if (sub == mmmap_cmd) cmd_mmmap(rep, in, beta, psi);
    else if (sub == orbit_cmd) cmd_orbit(rep, in, beta);
    else if (sub == tables_cmd) cmd_tables(rep, threads);
    else if (sub == g2v_cmd) cmd_g2_verify(rep, ftext);
    else if (sub == g2f_cmd) cmd_g2_flow(rep, ftext, t_end, step, compare, csv);
    else if (sub == corpus_cmd) cmd_corpus(rep, corpus_fixture, threads);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    json err = envelope(rep);
    err.erase("result");
    json detail = {{"type", dynamic_cast<const ParseError*>(&e) ? "parse_error" : "domain_error"}, {"message", e.what()}};
    if (auto* pe = dynamic_cast<const ParseError*>(&e)) detail["position"] = pe->position();
    err["error"] = detail;
    // The error object goes to stdout in both modes so scripts can parse it.
    std::cout << err.dump(as_json ? 2 : -1) << '\n';
    if (!as_json) std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  const json report = envelope(rep);
  if (as_json) {
    std::cout << report.dump(2) << '\n';
  } else {
    print_human(report["result"]);
  }
  return rep.failed ? 1 : 0;
}
