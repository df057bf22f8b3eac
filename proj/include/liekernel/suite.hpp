#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "liekernel/exterior.hpp"
#include "liekernel/liealg.hpp"

namespace liekernel {

/// 64-bit FNV-1a; used for seeds and input fingerprints.
constexpr std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

struct CorpusAlgebra {
  std::string name;
  LieAlgebra algebra;
  std::optional<std::vector<int>> grading;
};

/// data/corpus.lie in the source tree, overridable with LIEKERNEL_CORPUS.
std::string default_corpus_path();
std::vector<CorpusAlgebra> load_corpus(const std::string& path);

/// Small random rationals p/q with |p| ≤ 5, 1 ≤ q ≤ 4.
Rational random_rational(std::mt19937_64& rng);
Vector random_vector(std::mt19937_64& rng, int n);
KForm random_form(std::mt19937_64& rng, int n, int k);

struct PropertyResult {
  std::string property;
  std::string algebra;
  bool passed = false;
  std::string detail;  // empty on success
};

struct SuiteOptions {
  int adjoint_samples = 100;
  int threads = 0;
  std::uint64_t seed = 20240611;
};

/// Per-algebra properties, in a fixed order:
///   jacobi_d2, kernel_dim, adjoint_identity, dp_representative,
///   sum_with_line, unimodular_top_betti, hodge_duality, solvable_23_consequences,
///   invariant_cohomology_equivalence, derived_nilpotent, multimoment_inverse,
///   graded_extension, no_split.
std::vector<PropertyResult> check_algebra(const CorpusAlgebra& a, const SuiteOptions& options);

/// Betti numbers of h ⊕ k against the Künneth convolution.
PropertyResult check_kunneth(const CorpusAlgebra& h, const CorpusAlgebra& k);

/// check_algebra on every member, then Künneth on consecutive pairs with
/// total dimension at most 8. Parallel over algebras; results ordered.
std::vector<PropertyResult> run_corpus_suite(const std::vector<CorpusAlgebra>& corpus, const SuiteOptions& options);

/// The adjoint identity ⟨d_P α, Z∧p⟩ = −⟨α, ad_Z p⟩ on random samples;
/// returns the first failure.
std::optional<std::string> adjoint_identity_failure(const LieAlgebra& g, int samples, std::mt19937_64& rng);

}  // namespace liekernel
