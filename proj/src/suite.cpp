#include "liekernel/suite.hpp"

#include <cstdlib>

#include "liekernel/cohomology.hpp"
#include "liekernel/families.hpp"
#include "liekernel/kernelmap.hpp"
#include "liekernel/parallel.hpp"
#include "liekernel/parser.hpp"

namespace liekernel {

std::string default_corpus_path() {
  if (const char* env = std::getenv("LIEKERNEL_CORPUS")) return env;
  return std::string(LIEKERNEL_DATA_DIR) + "/corpus.lie";
}

std::vector<CorpusAlgebra> load_corpus(const std::string& path) {
  std::vector<CorpusAlgebra> out;
  for (const auto& e : load_fixture(path)) {
    try {
      out.push_back({e.name, LieAlgebra::validate(instantiate(e.expr, e.bindings), e.name), e.grading});
    } catch (const DomainError& err) {
      throw DomainError(path + ":" + std::to_string(e.line) + ": " + err.what());
    }
  }
  return out;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  return make_rational(num(rng), den(rng));
}

Vector random_vector(std::mt19937_64& rng, int n) {
  Vector v(static_cast<size_t>(n));
  for (auto& x : v) x = random_rational(rng);
  return v;
}

KForm random_form(std::mt19937_64& rng, int n, int k) {
  KForm out(n, k);
  for (Mask m : subsets_of_size(n, k)) out.add(m, random_rational(rng));
  return out;
}

namespace {

KVector random_kernel_element(const LieKernel& kernel, std::mt19937_64& rng) {
  KVector p(kernel.algebra().dim(), 2);
  for (const auto& e : kernel.elements()) p += random_rational(rng) * e;
  return p;
}

int betti_at(const CohomologyReport& r, int k) {
  return k >= 0 && k < static_cast<int>(r.betti.size()) ? r.betti[size_t(k)] : 0;
}

std::optional<std::string> jacobi_d2_failure(const LieAlgebra& g, std::mt19937_64& rng) {
  if (!chevalley_eilenberg(g.constants()).squares_to_zero()) return "d^2 != 0 on a valid algebra";
  const int n = g.dim();
  if (n < 3) return std::nullopt;
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int trial = 0; trial < 4; ++trial) {
    StructureConstants c = g.constants();
    int i = pick(rng), j = pick(rng);
    while (j == i) j = pick(rng);
    c.add(i, j, pick(rng), random_rational(rng));
    const bool jacobi = !c.jacobi_violation();
    const bool d2 = chevalley_eilenberg(c).squares_to_zero();
    if (jacobi != d2) return "perturbation " + std::to_string(trial) + ": Jacobi and d^2 = 0 disagree";
  }
  return std::nullopt;
}

std::optional<std::string> representative_failure(const LieAlgebra& g, const LieKernel& kernel, std::mt19937_64& rng) {
  for (int s = 0; s < 10; ++s) {
    const KForm alpha = random_form(rng, g.dim(), 2);
    const KForm shifted = alpha + differential(g, random_form(rng, g.dim(), 1));
    if (!(kernel.make_dual(alpha) == kernel.make_dual(shifted))) return "make_dual depends on the representative";
    if (!(dP(kernel, kernel.make_dual(alpha)) == differential(g, alpha))) return "d_P differs from d on a representative";
    if (!differential(g, differential(g, alpha)).is_zero()) return "d_P alpha is not closed";
  }
  return std::nullopt;
}

std::optional<std::string> multimoment_failure(const LieAlgebra& g, const LieKernel& kernel, std::mt19937_64& rng) {
  for (int s = 0; s < 10; ++s) {
    const PDualElement beta = kernel.make_dual(random_form(rng, g.dim(), 2));
    const KForm psi = dP(kernel, beta);
    if (!(multimoment_value(kernel, psi) == beta)) return "multimoment_value(d_P beta) != beta";
  }
  return std::nullopt;
}

std::optional<std::string> invariant_equivalence_failure(const LieAlgebra& g, const CohomologyReport& r) {
  const int n = g.dim();
  bool rhs = false;
  if (is_solvable(g)) {
    const Subspace derived = derived_algebra(g);
    if (derived.dim() == n - 1 && is_nilpotent(subalgebra(g, derived))) {
      Vector a;
      for (int i = 0; i < n && a.empty(); ++i) {
        if (!derived.contains(unit_vector(n, i))) a = unit_vector(n, i);
      }
      const auto dims = invariant_cohomology_dims(g, derived, a);
      rhs = true;
      for (int k = 1; k <= 3; ++k) {
        if (k < static_cast<int>(dims.size()) && dims[size_t(k)] != 0) rhs = false;
      }
    }
  }
  if (rhs != is_23_trivial(r)) {
    return std::string("23-trivial = ") + (is_23_trivial(r) ? "true" : "false") + " but invariant criterion = " +
           (rhs ? "true" : "false");
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> adjoint_identity_failure(const LieAlgebra& g, int samples, std::mt19937_64& rng) {
  const LieKernel kernel(g);
  const int n = g.dim();
  if (kernel.dim() == 0) return std::nullopt;
  for (int s = 0; s < samples; ++s) {
    const KForm alpha = random_form(rng, n, 2);
    const Vector z = random_vector(rng, n);
    const KVector p = random_kernel_element(kernel, rng);
    const Rational lhs = pair(dP(kernel, kernel.make_dual(alpha)), wedge(KVector::from_vector(z), p));
    const Rational rhs = -pair(alpha, ad_bivector(g, z, p));
    if (lhs != rhs) {
      return "sample " + std::to_string(s) + ": " + lhs.get_str() + " != " + rhs.get_str();
    }
  }
  return std::nullopt;
}

std::vector<PropertyResult> check_algebra(const CorpusAlgebra& a, const SuiteOptions& options) {
  const LieAlgebra& g = a.algebra;
  const int n = g.dim();
  std::mt19937_64 rng(options.seed ^ fnv1a(a.name));
  std::vector<PropertyResult> out;
  auto record = [&](const char* property, std::optional<std::string> failure) {
    out.push_back({property, a.name, !failure, failure.value_or("")});
  };
  auto expect = [&](const char* property, bool ok, const std::string& detail) {
    record(property, ok ? std::nullopt : std::optional<std::string>(detail));
  };

  const CohomologyReport r = betti(g);
  const LieKernel kernel(g);

  record("jacobi_d2", jacobi_d2_failure(g, rng));
  expect("kernel_dim", 2 * kernel.dim() == 2 * betti_at(r, 1) + n * (n - 3),
         "dim P = " + std::to_string(kernel.dim()) + ", b1 = " + std::to_string(betti_at(r, 1)));
  record("adjoint_identity", adjoint_identity_failure(g, options.adjoint_samples, rng));
  record("dp_representative", representative_failure(g, kernel, rng));
  {
    const LieKernel sum(direct_sum(abelian(1), g));
    expect("sum_with_line", sum.dim() == kernel.dim() + n,
           "dim P[R+h] = " + std::to_string(sum.dim()) + ", dim P[h] = " + std::to_string(kernel.dim()));
  }
  const bool unimodular = is_unimodular(g);
  expect("unimodular_top_betti", unimodular == (betti_at(r, n) == 1),
         "unimodular = " + std::string(unimodular ? "true" : "false") + ", b_n = " + std::to_string(betti_at(r, n)));
  if (unimodular) {
    bool dual = true;
    for (int k = 0; k <= n; ++k) dual = dual && betti_at(r, k) == betti_at(r, n - k);
    expect("hodge_duality", dual, "b_k != b_{n-k}");
  }
  if (is_23_trivial(r) && n > 1) {
    const StructureCertificate cert = structure_certificate(g);
    expect("solvable_23_consequences", cert.consistent_with_23_trivial(), "23-trivial algebra fails the certificate");
    expect("no_split", !cert.basis_aligned_split, "23-trivial algebra splits along the basis");
  }
  record("invariant_cohomology_equivalence", invariant_equivalence_failure(g, r));
  if (is_solvable(g)) {
    expect("derived_nilpotent", is_nilpotent(subalgebra(g, derived_algebra(g))), "derived algebra is not nilpotent");
  }
  if (betti_at(r, 2) == 0) record("multimoment_inverse", multimoment_failure(g, kernel, rng));
  if (a.grading) {
    try {
      const LieAlgebra ext = graded_extension(make_graded(g, *a.grading));
      expect("graded_extension", is_23_trivial(ext), "graded extension is not (2,3)-trivial");
    } catch (const DomainError& e) {
      expect("graded_extension", false, e.what());
    }
  }
  return out;
}

PropertyResult check_kunneth(const CorpusAlgebra& h, const CorpusAlgebra& k) {
  const CohomologyReport rh = betti(h.algebra);
  const CohomologyReport rk = betti(k.algebra);
  const CohomologyReport rs = betti(direct_sum(h.algebra, k.algebra));
  const int n = h.algebra.dim() + k.algebra.dim();
  PropertyResult res{"kunneth", h.name + "+" + k.name, true, {}};
  for (int d = 0; d <= n; ++d) {
    int expected = 0;
    for (int i = 0; i <= d; ++i) expected += betti_at(rh, i) * betti_at(rk, d - i);
    if (expected != betti_at(rs, d)) {
      res.passed = false;
      res.detail = "b" + std::to_string(d) + " = " + std::to_string(betti_at(rs, d)) + ", expected " +
                   std::to_string(expected);
      break;
    }
  }
  return res;
}

std::vector<PropertyResult> run_corpus_suite(const std::vector<CorpusAlgebra>& corpus, const SuiteOptions& options) {
  const int count = static_cast<int>(corpus.size());
  std::vector<std::vector<PropertyResult>> per(corpus.size());
  std::vector<std::optional<PropertyResult>> pairs(corpus.size());
  parallel_for(count, options.threads, [&](int i) {
    per[size_t(i)] = check_algebra(corpus[size_t(i)], options);
    if (i + 1 < count && corpus[size_t(i)].algebra.dim() + corpus[size_t(i) + 1].algebra.dim() <= 8) {
      pairs[size_t(i)] = check_kunneth(corpus[size_t(i)], corpus[size_t(i) + 1]);
    }
  });
  std::vector<PropertyResult> out;
  for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
  for (auto& p : pairs) {
    if (p) out.push_back(*p);
  }
  return out;
}

}  // namespace liekernel
