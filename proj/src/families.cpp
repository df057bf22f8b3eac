#include "liekernel/families.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>

#include "liekernel/cohomology.hpp"
#include "liekernel/parallel.hpp"

namespace liekernel {

namespace {

struct FamilyInfo {
  const char* expression;
  int dim;
  int params;
};

// Coefficients (1−λ) and 2λ are bound through the helper parameters k, k2.
const std::map<std::string, FamilyInfo>& families() {
  static const std::map<std::string, FamilyInfo> table{
      {"r3", {"(0,21+31,31)", 3, 0}},
      {"r3l", {"(0,21,l.31)", 3, 1}},
      {"r3pl", {"(0,l.21+31,-21+l.31)", 3, 1}},
      {"r4", {"(0,21+31,31+41,41)", 4, 0}},
      {"r4l", {"(0,21,l.31+41,l.41)", 4, 1}},
      {"r4ml", {"(0,21,m.31,l.41)", 4, 2}},
      {"r4pml", {"(0,m.21,l.31+41,-31+l.41)", 4, 2}},
      {"d4l", {"(0,l.21,k.31,41+32)", 4, 1}},
      {"d4pl", {"(0,l.21+31,-21+l.31,k2.41+32)", 4, 1}},
      {"h4", {"(0,21+31,31,2.41+32)", 4, 0}},
  };
  return table;
}

const FamilyInfo& info(const std::string& family) {
  auto it = families().find(family);
  if (it == families().end()) throw DomainError("unknown family '" + family + "'");
  return it->second;
}

Rational q(long p, long d = 1) { return make_rational(p, d); }

bool in_unit_range(const Rational& x) { return x > -1 && x <= 1 && !is_zero(x); }

}  // namespace

std::string FamilySpec::label() const {
  std::string s = family;
  if (mu) s += " m=" + mu->get_str();
  if (lambda) s += " l=" + lambda->get_str();
  return s;
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"r3", "r3l", "r3pl", "r4", "r4l", "r4ml", "r4pml", "d4l", "d4pl", "h4"};
  return names;
}

int family_dimension(const std::string& family) { return info(family).dim; }
int family_parameter_count(const std::string& family) { return info(family).params; }
std::string family_template(const std::string& family) { return info(family).expression; }

std::optional<std::string> admissibility_violation(const FamilySpec& s) {
  const FamilyInfo& f = info(s.family);
  const int given = (s.lambda ? 1 : 0) + (s.mu ? 1 : 0);
  if (given != f.params || (f.params == 1 && !s.lambda)) {
    return s.family + " takes " + std::to_string(f.params) + " parameter(s)";
  }
  const std::string& n = s.family;
  if (n == "r3l") {
    if (!in_unit_range(*s.lambda)) return std::string("lambda in (-1,1] \\ {0}");
  } else if (n == "r3pl" || n == "d4pl") {
    if (*s.lambda <= 0) return std::string("lambda > 0");
  } else if (n == "r4l") {
    const Rational& l = *s.lambda;
    if (l == -1 || l == q(-1, 2) || is_zero(l)) return std::string("lambda != -1, -1/2, 0");
  } else if (n == "r4ml") {
    const Rational& l = *s.lambda;
    const Rational& m = *s.mu;
    if (!in_unit_range(l) || !in_unit_range(m)) return std::string("mu, lambda in (-1,1] \\ {0}");
    if (l < m) return std::string("lambda >= mu");
    if (is_zero(m + l) || m + l == -1) return std::string("mu + lambda != 0, -1");
  } else if (n == "r4pml") {
    if (*s.mu <= 0) return std::string("mu > 0");
    if (*s.lambda == -*s.mu / 2 || is_zero(*s.lambda)) return std::string("lambda != -mu/2, 0");
  } else if (n == "d4l") {
    const Rational& l = *s.lambda;
    if (l < q(1, 2)) return std::string("lambda >= 1/2");
    if (l == 1 || l == 2) return std::string("lambda != 1, 2");
  }
  return std::nullopt;
}

LieAlgebra instantiate_family(const FamilySpec& s) {
  const FamilyInfo& f = info(s.family);
  Bindings b;
  if (s.lambda) {
    b["l"] = *s.lambda;
    b["k"] = 1 - *s.lambda;
    b["k2"] = 2 * *s.lambda;
  }
  if (s.mu) b["m"] = *s.mu;
  return LieAlgebra::validate(instantiate(parse(f.expression), b), s.label());
}

LieAlgebra make_family(const FamilySpec& s) {
  if (auto bad = admissibility_violation(s)) throw DomainError(s.label() + ": inadmissible parameters, need " + *bad);
  return instantiate_family(s);
}

std::optional<unsigned> basis_aligned_split(const LieAlgebra& g) {
  const int n = g.dim();
  if (n < 2 || n > 20) return std::nullopt;
  const auto& c = g.constants();
  // Fix e_1 in S to visit each unordered split once.
  for (unsigned s = 1; s < (1u << n) - 1; s += 2) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = i + 1; j < n && ok; ++j) {
        const bool si = s >> i & 1;
        const bool sj = s >> j & 1;
        for (int k = 0; k < n && ok; ++k) {
          if (is_zero(c(i, j, k))) continue;
          const bool sk = s >> k & 1;
          ok = si == sj && sk == si;
        }
      }
    }
    if (ok) return s;
  }
  return std::nullopt;
}

StructureCertificate structure_certificate(const LieAlgebra& g) {
  StructureCertificate out;
  out.solvable = is_solvable(g);
  out.nilpotent = is_nilpotent(g);
  out.b1 = g.dim() >= 1 ? betti(g).betti[1] : 0;
  const Subspace derived = derived_algebra(g);
  out.derived_codim = g.dim() - derived.dim();
  out.derived_nilpotent = is_nilpotent(subalgebra(g, derived));
  out.basis_aligned_split = basis_aligned_split(g).has_value();
  return out;
}

std::vector<FamilySpec> table_grid() {
  std::vector<FamilySpec> out;
  auto one = [&](const char* f, Rational l) { out.push_back({f, l, std::nullopt}); };
  out.push_back({"r3", {}, {}});
  for (auto l : {q(-3, 4), q(-1, 2), q(-1, 4), q(1, 4), q(1, 2), q(3, 4), q(1)}) one("r3l", l);
  for (auto l : {q(1, 4), q(1), q(3)}) one("r3pl", l);
  out.push_back({"r4", {}, {}});
  for (auto l : {q(-2), q(-3, 4), q(-1, 4), q(1, 2), q(1), q(3)}) one("r4l", l);
  const std::vector<Rational> unit{q(-3, 4), q(-1, 4), q(1, 4), q(1, 2), q(1)};
  for (const auto& m : unit) {
    for (const auto& l : unit) {
      FamilySpec s{"r4ml", l, m};
      if (!admissibility_violation(s)) out.push_back(s);
    }
  }
  for (auto m : {q(1, 2), q(1), q(2)}) {
    for (auto l : {q(-1), q(-1, 4), q(1, 2), q(1)}) {
      FamilySpec s{"r4pml", l, m};
      if (!admissibility_violation(s)) out.push_back(s);
    }
  }
  for (auto l : {q(1, 2), q(3, 4), q(3, 2), q(3)}) one("d4l", l);
  for (auto l : {q(1, 4), q(1), q(2)}) one("d4pl", l);
  out.push_back({"h4", {}, {}});
  return out;
}

std::vector<FamilySpec> table_exclusions() {
  std::vector<FamilySpec> out{
      {"r3l", q(0), {}},         {"r3l", q(-1), {}},        {"r3pl", q(0), {}},
      {"r4l", q(-1), {}},        {"r4l", q(-1, 2), {}},     {"r4l", q(0), {}},
      {"r4ml", q(1, 2), q(0)},   {"r4ml", q(0), q(-1, 2)},  {"r4ml", q(1, 2), q(-1)},
      {"r4ml", q(1, 2), q(-1, 2)}, {"r4ml", q(-1, 2), q(-1, 2)},
      {"r4pml", q(0), q(1)},     {"r4pml", q(-1, 2), q(1)}, {"r4pml", q(1), q(0)},
      {"d4l", q(1), {}},         {"d4l", q(2), {}},         {"d4pl", q(0), {}},
  };
  return out;
}

std::vector<TableCheck> verify_tables(int threads) {
  std::vector<TableCheck> checks;
  for (const auto& s : table_grid()) checks.push_back(TableCheck{s, true, false, false, false, {}});
  for (const auto& s : table_exclusions()) checks.push_back(TableCheck{s, false, false, false, false, {}});
  parallel_for(static_cast<int>(checks.size()), threads, [&](int i) {
    TableCheck& c = checks[size_t(i)];
    const LieAlgebra g = instantiate_family(c.spec);
    c.expression = serialize(to_expr(g.constants()));
    c.is_23_trivial = is_23_trivial(g);
    c.certificate_ok = structure_certificate(g).consistent_with_23_trivial();
    c.passed = c.admissible ? (c.is_23_trivial && c.certificate_ok) : !(c.is_23_trivial && c.certificate_ok);
  });
  return checks;
}

GradedNilpotent make_graded(const LieAlgebra& k, std::vector<int> weights) {
  const int n = k.dim();
  if (static_cast<int>(weights.size()) != n) throw DomainError("grading needs one weight per basis vector");
  for (int w : weights) {
    if (w <= 0) throw DomainError("grading weights must be positive");
  }
  if (!is_nilpotent(k)) throw DomainError("graded algebra must be nilpotent");
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int m = 0; m < n; ++m) {
        if (!is_zero(k.constants()(i, j, m)) && weights[size_t(m)] != weights[size_t(i)] + weights[size_t(j)]) {
          throw DomainError("grading violated: [e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) +
                            "] has a component along e" + std::to_string(m + 1));
        }
      }
    }
  }
  return GradedNilpotent{k, std::move(weights)};
}

LieAlgebra graded_extension(const GradedNilpotent& k) {
  const int n = k.algebra.dim();
  Matrix d(n, n);
  for (int i = 0; i < n; ++i) d(i, i) = k.weights[size_t(i)];
  return semidirect_extension(k.algebra, d);
}

LieAlgebra heisenberg3() { return parse_algebra("(0,0,12)", {}, "h3"); }

namespace {

// Complex 3x3 (or 2x2) matrix as a real 2n×2n block [[Re, −Im], [Im, Re]].
struct ComplexEntry {
  int r, c;
  long re, im;
};

Matrix realify(int n, const std::vector<ComplexEntry>& entries) {
  Matrix m(2 * n, 2 * n);
  for (const auto& e : entries) {
    m(e.r, e.c) += e.re;
    m(e.r + n, e.c + n) += e.re;
    m(e.r, e.c + n) -= e.im;
    m(e.r + n, e.c) += e.im;
  }
  return m;
}

// i(E_pp − E_qq), E_pq − E_qp, i(E_pq + E_qp), 0-based p < q.
Matrix diag_i(int n, int p, int q) { return realify(n, {{p, p, 0, 1}, {q, q, 0, -1}}); }
Matrix rot(int n, int p, int q) { return realify(n, {{p, q, 1, 0}, {q, p, -1, 0}}); }
Matrix sym_i(int n, int p, int q) { return realify(n, {{p, q, 0, 1}, {q, p, 0, 1}}); }

}  // namespace

LieAlgebra su2() { return matrix_lie_algebra({diag_i(2, 0, 1), rot(2, 0, 1), sym_i(2, 0, 1)}, "su2"); }

LieAlgebra su3() {
  return matrix_lie_algebra({diag_i(3, 0, 1), diag_i(3, 1, 2), rot(3, 0, 1), rot(3, 0, 2), rot(3, 1, 2),
                             sym_i(3, 0, 1), sym_i(3, 0, 2), sym_i(3, 1, 2)},
                            "su3");
}

LieAlgebra u2() { return parse_algebra("(0,-34,-42,-23)", {}, "u2"); }

LieAlgebra charnil7(const Rational& alpha) {
  return parse_algebra("(0,0,12,13,23,14+25+a.23,16+25+35+a.24)", {{"a", alpha}}, "n7 a=" + alpha.get_str());
}

LieAlgebra make_unimodular_5dim() { return parse_algebra("(0,12,2.13,-4.14,15)", {}, "s5"); }

std::vector<double> lattice_polynomial_roots() {
  // Durand–Kerner on the monic quartic.
  const std::vector<double> coeffs{1, -8, 18, -10, 1};
  auto eval = [&](std::complex<double> z) {
    std::complex<double> acc = 0;
    for (double c : coeffs) acc = acc * z + c;
    return acc;
  };
  std::vector<std::complex<double>> z(4);
  const std::complex<double> seed(0.4, 0.9);
  for (size_t i = 0; i < z.size(); ++i) z[i] = std::pow(seed, static_cast<double>(i));
  for (int iter = 0; iter < 500; ++iter) {
    double change = 0;
    for (size_t i = 0; i < z.size(); ++i) {
      std::complex<double> denom = 1;
      for (size_t j = 0; j < z.size(); ++j) {
        if (j != i) denom *= z[i] - z[j];
      }
      const auto step = eval(z[i]) / denom;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-15) break;
  }
  std::vector<double> roots;
  for (const auto& r : z) {
    if (std::abs(r.imag()) > 1e-9) throw DomainError("lattice polynomial has a non-real root");
    roots.push_back(r.real());
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

ExtensionScan scan_solvable_extensions(const LieAlgebra& k, int combinations) {
  const int n = k.dim();
  const Subspace der = derivation_algebra(k);
  std::vector<Matrix> sample;
  for (const auto& v : der.basis()) sample.push_back(unflatten(v, n));
  const int m = der.dim();
  for (int j = 1; j <= combinations && m > 0; ++j) {
    Vector v = zero_vector(n * n);
    for (int i = 0; i < m; ++i) {
      const Rational c = make_rational((i * 7 + j * 3) % 5 - 2, 1 + (i + j) % 3);
      for (int r = 0; r < n * n; ++r) v[size_t(r)] += c * der.basis()[size_t(i)][size_t(r)];
    }
    sample.push_back(unflatten(v, n));
  }
  std::vector<Vector> ideal_basis;
  for (int i = 1; i <= n; ++i) ideal_basis.push_back(unit_vector(n + 1, i));
  const Subspace ideal = Subspace::span(n + 1, ideal_basis);

  ExtensionScan out;
  for (const auto& d : sample) {
    const LieAlgebra g = semidirect_extension(k, d);
    ++out.derivations_tried;
    if (is_23_trivial(g)) ++out.extensions_23_trivial;
    const auto dims = invariant_cohomology_dims(g, ideal, unit_vector(n + 1, 0));
    if (dims[1] != 0 || dims[2] != 0 || dims[3] != 0) ++out.extensions_with_invariant_cohomology;
  }
  return out;
}

}  // namespace liekernel
