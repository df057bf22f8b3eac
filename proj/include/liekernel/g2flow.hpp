#pragma once

#include <array>
#include <optional>
#include <vector>

#include "liekernel/exterior.hpp"
#include "liekernel/linalg.hpp"
#include "liekernel/polynomial.hpp"

namespace liekernel {

// ---- Pointwise G2 algebra on R^7 -------------------------------------------

KForm phi0();
/// The four-form written out literally (not computed with hodge_star).
KForm star_phi0();

struct MetricFromPhi {
  bool exact = false;
  Matrix gram;                                // valid when exact
  std::vector<std::vector<double>> gram_float;  // always filled
  std::optional<Rational> volume_factor;      // vol = factor · e_{1..7}, when exact
  double volume_factor_float = 0;
  double tolerance = 0;                       // 0 when exact
};

/// g from 6 g(X,Y) vol = (X⌟φ)∧(Y⌟φ)∧φ. Exact when det B / 6⁷ is a rational
/// ninth power.
MetricFromPhi metric_from_phi(const KForm& phi);

/// Top-degree coefficient of (E_i⌟φ)∧(E_j⌟φ)∧φ.
Matrix phi_bilinear(const KForm& phi);

struct G2T2Frame {
  Rational g_uu, g_vv, g_uv;
  Rational h2;                 // h² = 1/(g_UU g_VV − g_UV²)
  std::optional<Rational> h;   // when h² is a rational square
  KForm theta1, theta2;        // dual to (U, V)
  KForm omega0, omega1, omega2;
  KForm dnu;                   // φ(U, V, ·)
};

G2T2Frame g2t2_decompose(const KForm& phi, const KForm& star_phi, const Vector& u, const Vector& v,
                         const Matrix& gram);

/// h²ω₀∧dν + ω₁∧θ₁ + ω₂∧θ₂ + dν∧θ₂∧θ₁.
KForm reconstruct_phi(const G2T2Frame& f);
/// ω₀∧θ₁∧θ₂ + h²(g_VV ω₁∧θ₂∧dν − g_UU ω₂∧θ₁∧dν + g_UV(ω₁∧θ₁ − ω₂∧θ₂)∧dν + ½ω₀∧ω₀).
KForm reconstruct_star_phi(const G2T2Frame& f);

// ---- Coherent symplectic triples and SU(3) structures ----------------------

/// Three 2-forms on a 4-dimensional space with σ_i∧σ_j = q̃_ij σ₀².
struct CoherentTripleFrame {
  std::array<KForm, 3> sigma;
  Matrix q_tilde;  // 3×3, q̃_00 = 1
  Matrix q;        // lower-right 2×2
  Rational det_q;
  std::optional<Rational> h;  // √det Q when rational
};

/// Validates positivity of Q̃, σ₀∧σ_i = 0 and non-degeneracy.
CoherentTripleFrame make_coherent_triple(const KForm& s0, const KForm& s1, const KForm& s2);

/// The hyperKähler triple σ₀ = −(e14+e23), Ω₁ = e12+e34, Ω₂ = e13−e24 on R⁴
/// (base indices 4..7 of R⁷ relabelled 1..4).
std::array<KForm, 3> hyperkahler_triple();

struct SU3Forms {
  KForm sigma, psi_plus, psi_minus;  // on R⁶ with basis (θ₁, θ₂, base)
};

/// σ = hσ₀ + h⁻¹θ₁θ₂, ψ₊ = σ₁θ₁ + σ₂θ₂,
/// ψ₋ = h⁻¹(q₂₂σ₁θ₂ − q₁₁σ₂θ₁ + q₁₂(σ₁θ₁ − σ₂θ₂)). Requires rational h.
SU3Forms su3_structure(const CoherentTripleFrame& triple);

/// Tr(F·Q) = 0. Q must be positive-definite.
bool halfflat_condition(const Matrix& f, const Matrix& q);

// ---- The constant-curvature flow ------------------------------------------

/// J = (0 1; −1 0); A = F·J.
Matrix symplectic_j();
Matrix flow_generator(const Matrix& f);

struct FlowState {
  Matrix f, a;
  Rational t;
  Matrix m;  // I + tA; column j holds σ_j in the (Ω₁, Ω₂) basis
  Matrix q;  // MᵀM
  Rational h;  // det M
};

/// Maximal interval around 0 on which det(I + tA) ≠ 0; nullopt = unbounded.
struct FlowInterval {
  std::optional<double> lower, upper;
  bool contains(double t) const;
};

FlowInterval flow_interval(const Matrix& f);

/// Exact: whether every s between 0 and t has det(I + sA) > 0.
bool in_flow_interval(const Matrix& f, const Rational& t);

FlowState flow_closed_form(const Matrix& f, const Rational& t);

struct FlowSample {
  double t = 0;
  std::array<double, 4> m{};  // row-major
  double q11 = 0, q12 = 0, q22 = 0, h = 0;
};

struct FlowRun {
  std::vector<FlowSample> trajectory;  // includes t = 0
  double max_invariant_residual = 0;   // max |h² − det Q|
};

/// Fixed-step RK4 on (M, q₁₁, q₁₂, q₂₂, h). The step is shrunk so that an
/// integer number of steps lands on t_end.
FlowRun flow_integrate(const Matrix& f, double t_end, double step);

struct FlowComparison {
  double max_abs_error = 0;  // over Q entries and h at every sample
  double final_h_error = 0;
  double max_invariant_residual = 0;
  int steps = 0;
};

FlowComparison compare_with_closed_form(const Matrix& f, double t_end, double step);

enum class Completeness { complete, half_complete, neither };
const char* to_string(Completeness c);
Completeness completeness_classify(const Matrix& f);

// ---- Polynomial-in-t differential algebra ----------------------------------

/// Generator order (θ₁, θ₂, dt, e4, e5, e6, e7).
inline constexpr int kTheta1 = 0;
inline constexpr int kTheta2 = 1;
inline constexpr int kTime = 2;
inline constexpr int kBase = 3;

/// dθ₁ = F₁₁Ω₁ + F₂₁Ω₂, dθ₂ = F₁₂Ω₁ + F₂₂Ω₂; dt and base generators closed.
DifferentialAlgebra<Polynomial> flow_dga(const Matrix& f, bool with_time = true);

struct FlowForms {
  PolyForm phi, star_phi;
  PolyForm h_sigma, psi_plus, h_psi_minus, half_sigma_sq;
  Polynomial h;
  std::array<Polynomial, 3> q;  // q11, q12, q22
};

FlowForms flow_forms(const Matrix& f);

/// Metric h⁻²(θ,Q θ) + h² dt² + h g₀ in the coframe order above, at rational t.
Matrix flow_metric(const Matrix& f, const Rational& t);

struct TorsionFreeReport {
  bool dga_consistent = false;  // d² = 0 on generators
  bool d_phi_zero = false;
  bool d_star_phi_zero = false;
  bool psi_plus_evolution = false;     // ψ₊′ = d(hσ)
  bool sigma_sq_evolution = false;     // (½σ²)′ = −d(hψ₋)
  PolyForm d_phi, d_star_phi;
};

TorsionFreeReport dga_verify_torsion_free(const Matrix& f);

/// Evaluates every coefficient at t.
KForm evaluate(const PolyForm& a, const Rational& t);

}  // namespace liekernel
