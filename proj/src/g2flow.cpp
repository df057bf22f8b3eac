#include "liekernel/g2flow.hpp"

#include <cmath>

#include "liekernel/parser.hpp"

namespace liekernel {

KForm phi0() { return parse_form("123+145+167+246-257-347-356", 7); }

KForm star_phi0() { return parse_form("4567+2367+2345+1357-1346-1256-1247", 7); }

Matrix phi_bilinear(const KForm& phi) {
  const int n = phi.dim();
  if (phi.degree() != 3) throw DomainError("expected a 3-form");
  std::vector<KForm> contracted;
  for (int i = 0; i < n; ++i) contracted.push_back(interior(unit_vector(n, i), phi));
  Matrix b(n, n);
  for (int i = 0; i < n; ++i) {
    const KForm ip = wedge(contracted[size_t(i)], phi);
    for (int j = i; j < n; ++j) {
      b(i, j) = wedge(contracted[size_t(j)], ip).coeff(full_mask(n));
      b(j, i) = b(i, j);
    }
  }
  return b;
}

namespace {

bool float_positive_definite(std::vector<std::vector<double>> a) {
  const size_t n = a.size();
  for (size_t k = 0; k < n; ++k) {
    double d = a[k][k];
    for (size_t j = 0; j < k; ++j) d -= a[k][j] * a[k][j];
    if (!(d > 0)) return false;
    a[k][k] = std::sqrt(d);
    for (size_t i = k + 1; i < n; ++i) {
      double s = a[i][k];
      for (size_t j = 0; j < k; ++j) s -= a[i][j] * a[k][j];
      a[i][k] = s / a[k][k];
    }
  }
  return true;
}

}  // namespace

MetricFromPhi metric_from_phi(const KForm& phi) {
  if (phi.dim() != 7 || phi.degree() != 3) throw DomainError("metric_from_phi: expected a 3-form on R^7");
  const Matrix b = phi_bilinear(phi);
  const Rational det = determinant(b);
  if (det <= 0) throw DomainError("metric_from_phi: det B <= 0, form is not of G2 type");
  Rational six7 = 1;
  for (int i = 0; i < 7; ++i) six7 *= 6;
  const Rational ratio = det / six7;
  MetricFromPhi out;
  out.gram_float.assign(7, std::vector<double>(7));
  if (auto c = exact_root(ratio, 9)) {
    out.exact = true;
    out.gram = Matrix(7, 7);
    for (int i = 0; i < 7; ++i) {
      for (int j = 0; j < 7; ++j) {
        out.gram(i, j) = b(i, j) / (6 * *c);
        out.gram_float[size_t(i)][size_t(j)] = out.gram(i, j).get_d();
      }
    }
    out.volume_factor = *c;
    out.volume_factor_float = c->get_d();
    if (!is_positive_definite(out.gram)) throw DomainError("metric_from_phi: recovered metric is not positive-definite");
    return out;
  }
  const double c = std::pow(ratio.get_d(), 1.0 / 9.0);
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) out.gram_float[size_t(i)][size_t(j)] = b(i, j).get_d() / (6 * c);
  }
  out.volume_factor_float = c;
  out.tolerance = 1e-12;
  if (!float_positive_definite(out.gram_float)) {
    throw DomainError("metric_from_phi: recovered metric is not positive-definite");
  }
  return out;
}

namespace {

KForm one_form(const Vector& v) { return KForm::from_vector(v); }

Rational bilinear(const Matrix& g, const Vector& x, const Vector& y) {
  const Vector gy = g * y;
  Rational s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * gy[i];
  return s;
}

}  // namespace

G2T2Frame g2t2_decompose(const KForm& phi, const KForm& star_phi, const Vector& u, const Vector& v,
                         const Matrix& gram) {
  const int n = phi.dim();
  if (star_phi.dim() != n || static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n ||
      gram.rows() != n || gram.cols() != n) {
    throw DomainError("g2t2_decompose: dimension mismatch");
  }
  if (phi.degree() != 3 || star_phi.degree() != 4) throw DomainError("g2t2_decompose: expected a 3-form and a 4-form");
  if (!is_positive_definite(gram)) throw DomainError("g2t2_decompose: gram is not positive-definite");
  G2T2Frame f;
  f.g_uu = bilinear(gram, u, u);
  f.g_vv = bilinear(gram, v, v);
  f.g_uv = bilinear(gram, u, v);
  const Rational area = f.g_uu * f.g_vv - f.g_uv * f.g_uv;
  if (area <= 0) throw DomainError("g2t2_decompose: U and V are parallel, h is undefined");
  f.h2 = 1 / area;
  f.h = exact_sqrt(f.h2);
  const KForm ub = one_form(gram * u);
  const KForm vb = one_form(gram * v);
  f.theta1 = f.h2 * (f.g_vv * ub - f.g_uv * vb);
  f.theta2 = f.h2 * (f.g_uu * vb - f.g_uv * ub);
  const KVector uv = wedge(KVector::from_vector(u), KVector::from_vector(v));
  f.omega0 = contract(uv, star_phi);
  f.omega1 = interior(u, phi);
  f.omega2 = interior(v, phi);
  f.dnu = contract(uv, phi);
  return f;
}

KForm reconstruct_phi(const G2T2Frame& f) {
  return f.h2 * wedge(f.omega0, f.dnu) + wedge(f.omega1, f.theta1) + wedge(f.omega2, f.theta2) +
         wedge(f.dnu, f.theta2, f.theta1);
}

KForm reconstruct_star_phi(const G2T2Frame& f) {
  const KForm inner = f.g_vv * wedge(f.omega1, f.theta2, f.dnu) - f.g_uu * wedge(f.omega2, f.theta1, f.dnu) +
                      f.g_uv * wedge(wedge(f.omega1, f.theta1) - wedge(f.omega2, f.theta2), f.dnu) +
                      Rational(1, 2) * wedge(f.omega0, f.omega0);
  return wedge(f.omega0, f.theta1, f.theta2) + f.h2 * inner;
}

std::array<KForm, 3> hyperkahler_triple() {
  return {parse_form("-14-23", 4), parse_form("12+34", 4), parse_form("13-24", 4)};
}

CoherentTripleFrame make_coherent_triple(const KForm& s0, const KForm& s1, const KForm& s2) {
  CoherentTripleFrame t{{s0, s1, s2}, Matrix(3, 3), Matrix(2, 2), 0, std::nullopt};
  for (const auto& s : t.sigma) {
    if (s.dim() != 4 || s.degree() != 2) throw DomainError("coherent triple: expected 2-forms on R^4");
  }
  const Rational vol = wedge(s0, s0).coeff(full_mask(4));
  if (is_zero(vol)) throw DomainError("coherent triple: sigma_0 is degenerate");
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) t.q_tilde(i, j) = wedge(t.sigma[size_t(i)], t.sigma[size_t(j)]).coeff(full_mask(4)) / vol;
  }
  if (!is_zero(t.q_tilde(0, 1)) || !is_zero(t.q_tilde(0, 2))) {
    throw DomainError("coherent triple: sigma_0 ^ sigma_i must vanish");
  }
  if (!is_positive_definite(t.q_tilde)) throw DomainError("coherent triple: Gram matrix is not positive-definite");
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) t.q(i, j) = t.q_tilde(i + 1, j + 1);
  }
  t.det_q = determinant(t.q);
  t.h = exact_sqrt(t.det_q);
  return t;
}

namespace {

template <class R>
Form<R> shift(const KForm& a, int n, int offset) {
  Form<R> out(n, a.degree());
  for (const auto& [m, c] : a.terms()) out.add(m << offset, R(c));
  return out;
}

}  // namespace

SU3Forms su3_structure(const CoherentTripleFrame& t) {
  if (!t.h) throw DomainError("su3_structure: sqrt(det Q) is irrational; exact forms unavailable");
  if (is_zero(*t.h)) throw DomainError("su3_structure: degenerate Q");
  const Rational h = *t.h;
  const KForm s0 = shift<Rational>(t.sigma[0], 6, 2);
  const KForm s1 = shift<Rational>(t.sigma[1], 6, 2);
  const KForm s2 = shift<Rational>(t.sigma[2], 6, 2);
  const KForm th1 = KForm::monomial(6, bit(0));
  const KForm th2 = KForm::monomial(6, bit(1));
  SU3Forms out;
  out.sigma = h * s0 + (1 / h) * wedge(th1, th2);
  out.psi_plus = wedge(s1, th1) + wedge(s2, th2);
  out.psi_minus = (1 / h) * (t.q(1, 1) * wedge(s1, th2) - t.q(0, 0) * wedge(s2, th1) +
                             t.q(0, 1) * (wedge(s1, th1) - wedge(s2, th2)));
  return out;
}

bool halfflat_condition(const Matrix& f, const Matrix& q) {
  if (f.rows() != 2 || f.cols() != 2 || q.rows() != 2 || q.cols() != 2) {
    throw DomainError("halfflat_condition: expected 2x2 matrices");
  }
  if (!is_positive_definite(q)) throw DomainError("halfflat_condition: Q is not positive-definite");
  const Matrix fq = f * q;
  return is_zero(fq(0, 0) + fq(1, 1));
}

Matrix symplectic_j() { return Matrix::from_rows({{0, 1}, {-1, 0}}, 2); }

Matrix flow_generator(const Matrix& f) {
  if (f.rows() != 2 || f.cols() != 2) throw DomainError("flow: F must be 2x2");
  return f * symplectic_j();
}

bool FlowInterval::contains(double t) const {
  return (!lower || t > *lower) && (!upper || t < *upper);
}

FlowInterval flow_interval(const Matrix& f) {
  const Matrix a = flow_generator(f);
  const double tr = Rational(a(0, 0) + a(1, 1)).get_d();
  const double det = determinant(a).get_d();
  FlowInterval out;
  std::vector<double> roots;
  if (det == 0) {
    if (tr != 0) roots.push_back(-1 / tr);
  } else {
    const double disc = tr * tr - 4 * det;
    if (disc >= 0) {
      const double s = std::sqrt(disc);
      // Roots of det·t² + tr·t + 1 via the stable form.
      const double qv = -0.5 * (tr + (tr >= 0 ? s : -s));
      roots.push_back(1 / qv);
      roots.push_back(qv / det);
    }
  }
  for (double r : roots) {
    if (r > 0 && (!out.upper || r < *out.upper)) out.upper = r;
    if (r < 0 && (!out.lower || r > *out.lower)) out.lower = r;
  }
  return out;
}

bool in_flow_interval(const Matrix& f, const Rational& t) {
  const Matrix a = flow_generator(f);
  const Rational tr = a(0, 0) + a(1, 1);
  const Rational det = determinant(a);
  auto h = [&](const Rational& s) -> Rational { return 1 + s * tr + s * s * det; };
  if (h(t) <= 0) return false;
  if (det > 0) {
    const Rational vertex = -tr / (2 * det);
    const bool between = t >= 0 ? (vertex > 0 && vertex < t) : (vertex < 0 && vertex > t);
    if (between && h(vertex) <= 0) return false;
  }
  return true;
}

FlowState flow_closed_form(const Matrix& f, const Rational& t) {
  if (!in_flow_interval(f, t)) throw DomainError("flow_closed_form: t = " + t.get_str() + " is outside the interval I");
  FlowState s;
  s.f = f;
  s.a = flow_generator(f);
  s.t = t;
  s.m = Matrix::identity(2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) s.m(i, j) += t * s.a(i, j);
  }
  s.q = s.m.transpose() * s.m;
  s.h = determinant(s.m);
  return s;
}

namespace {

using State = std::array<double, 8>;  // m00 m01 m10 m11 q11 q12 q22 h

struct FlowRhs {
  double a[2][2];
  double f[2][2];

  State operator()(const State& y) const {
    State dy{};
    dy[0] = a[0][0];
    dy[1] = a[0][1];
    dy[2] = a[1][0];
    dy[3] = a[1][1];
    const double m[2][2] = {{y[0], y[1]}, {y[2], y[3]}};
    double g[2][2];  // MᵀF
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) g[i][j] = m[0][i] * f[0][j] + m[1][i] * f[1][j];
    }
    const double q11 = y[4], q12 = y[5], q22 = y[6], h = y[7];
    dy[4] = -2 * g[0][1];
    dy[5] = g[0][0] - g[1][1];
    dy[6] = 2 * g[1][0];
    dy[7] = (q11 * g[1][0] - q12 * g[0][0] + q12 * g[1][1] - q22 * g[0][1]) / h;
    return dy;
  }
};

State axpy(const State& y, double s, const State& k) {
  State out;
  for (size_t i = 0; i < y.size(); ++i) out[i] = y[i] + s * k[i];
  return out;
}

FlowSample sample_of(double t, const State& y) {
  return FlowSample{t, {y[0], y[1], y[2], y[3]}, y[4], y[5], y[6], y[7]};
}

}  // namespace

FlowRun flow_integrate(const Matrix& f, double t_end, double step) {
  if (!(step > 0)) throw DomainError("flow_integrate: step must be positive");
  if (!(t_end >= 0)) throw DomainError("flow_integrate: t_end must be non-negative");
  if (!flow_interval(f).contains(t_end)) throw DomainError("flow_integrate: t_end lies outside the interval I");
  const Matrix a = flow_generator(f);
  FlowRhs rhs{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      rhs.a[i][j] = a(i, j).get_d();
      rhs.f[i][j] = f(i, j).get_d();
    }
  }
  const int steps = std::max(1, static_cast<int>(std::ceil(t_end / step - 1e-9)));
  const double dt = t_end / steps;
  State y{1, 0, 0, 1, 1, 0, 1, 1};
  FlowRun run;
  run.trajectory.push_back(sample_of(0, y));
  for (int s = 0; s < steps; ++s) {
    const State k1 = rhs(y);
    const State k2 = rhs(axpy(y, dt / 2, k1));
    const State k3 = rhs(axpy(y, dt / 2, k2));
    const State k4 = rhs(axpy(y, dt, k3));
    for (size_t i = 0; i < y.size(); ++i) y[i] += dt / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    const double t = (s + 1) * dt;
    if (y[0] * y[3] - y[1] * y[2] <= 0 || y[7] <= 0) {
      throw DomainError("flow_integrate: det M changed sign at t = " + std::to_string(t));
    }
    const double residual = std::abs(y[7] * y[7] - (y[4] * y[6] - y[5] * y[5]));
    run.max_invariant_residual = std::max(run.max_invariant_residual, residual);
    run.trajectory.push_back(sample_of(t, y));
  }
  return run;
}

FlowComparison compare_with_closed_form(const Matrix& f, double t_end, double step) {
  const FlowRun run = flow_integrate(f, t_end, step);
  const Matrix a = flow_generator(f);
  const double a00 = a(0, 0).get_d(), a01 = a(0, 1).get_d(), a10 = a(1, 0).get_d(), a11 = a(1, 1).get_d();
  FlowComparison out;
  out.steps = static_cast<int>(run.trajectory.size()) - 1;
  out.max_invariant_residual = run.max_invariant_residual;
  for (const auto& s : run.trajectory) {
    const double m00 = 1 + s.t * a00, m01 = s.t * a01, m10 = s.t * a10, m11 = 1 + s.t * a11;
    const double q11 = m00 * m00 + m10 * m10;
    const double q12 = m00 * m01 + m10 * m11;
    const double q22 = m01 * m01 + m11 * m11;
    const double h = m00 * m11 - m01 * m10;
    const double err = std::max({std::abs(q11 - s.q11), std::abs(q12 - s.q12), std::abs(q22 - s.q22),
                                 std::abs(h - s.h)});
    out.max_abs_error = std::max(out.max_abs_error, err);
    out.final_h_error = std::abs(h - s.h);
  }
  return out;
}

const char* to_string(Completeness c) {
  switch (c) {
    case Completeness::complete: return "complete";
    case Completeness::half_complete: return "half_complete";
    case Completeness::neither: return "neither";
  }
  return "?";
}

Completeness completeness_classify(const Matrix& f) {
  const Matrix a = flow_generator(f);
  if (a.is_zero()) return Completeness::complete;
  return determinant(a) >= 0 ? Completeness::half_complete : Completeness::neither;
}

DifferentialAlgebra<Polynomial> flow_dga(const Matrix& f, bool with_time) {
  if (f.rows() != 2 || f.cols() != 2) throw DomainError("flow: F must be 2x2");
  const auto triple = hyperkahler_triple();
  const PolyForm om1 = shift<Polynomial>(triple[1], 7, kBase);
  const PolyForm om2 = shift<Polynomial>(triple[2], 7, kBase);
  std::vector<PolyForm> gens(7, PolyForm(7, 2));
  gens[kTheta1] = Polynomial(f(0, 0)) * om1 + Polynomial(f(1, 0)) * om2;
  gens[kTheta2] = Polynomial(f(0, 1)) * om1 + Polynomial(f(1, 1)) * om2;
  if (!with_time) return DifferentialAlgebra<Polynomial>(std::move(gens));
  return DifferentialAlgebra<Polynomial>(std::move(gens), kTime, [](const Polynomial& p) { return p.derivative(); });
}

FlowForms flow_forms(const Matrix& f) {
  const Matrix a = flow_generator(f);
  const Polynomial t = Polynomial::t();
  Polynomial m[2][2];
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) m[i][j] = Polynomial(i == j ? Rational(1) : Rational(0)) + Polynomial(a(i, j)) * t;
  }
  FlowForms out;
  out.h = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  const Polynomial q11 = m[0][0] * m[0][0] + m[1][0] * m[1][0];
  const Polynomial q12 = m[0][0] * m[0][1] + m[1][0] * m[1][1];
  const Polynomial q22 = m[0][1] * m[0][1] + m[1][1] * m[1][1];
  out.q = {q11, q12, q22};

  const auto triple = hyperkahler_triple();
  const PolyForm s0 = shift<Polynomial>(triple[0], 7, kBase);
  const PolyForm om1 = shift<Polynomial>(triple[1], 7, kBase);
  const PolyForm om2 = shift<Polynomial>(triple[2], 7, kBase);
  const PolyForm s1 = m[0][0] * om1 + m[1][0] * om2;
  const PolyForm s2 = m[0][1] * om1 + m[1][1] * om2;
  const PolyForm th1 = PolyForm::monomial(7, bit(kTheta1));
  const PolyForm th2 = PolyForm::monomial(7, bit(kTheta2));
  const PolyForm dt = PolyForm::monomial(7, bit(kTime));
  const Polynomial h2 = out.h * out.h;

  out.phi = h2 * wedge(s0, dt) + wedge(th1, th2, dt) + wedge(s1, th1) + wedge(s2, th2);
  out.h_sigma = h2 * s0 + wedge(th1, th2);
  out.psi_plus = wedge(s1, th1) + wedge(s2, th2);
  out.h_psi_minus = q22 * wedge(s1, th2) - q11 * wedge(s2, th1) + q12 * (wedge(s1, th1) - wedge(s2, th2));
  out.half_sigma_sq = Polynomial(Rational(1, 2)) * h2 * wedge(s0, s0) + wedge(s0, th1, th2);
  out.star_phi = wedge(out.h_psi_minus, dt) + out.half_sigma_sq;
  return out;
}

Matrix flow_metric(const Matrix& f, const Rational& t) {
  const FlowState s = flow_closed_form(f, t);
  if (is_zero(s.h)) throw DomainError("flow_metric: h vanishes");
  Matrix g(7, 7);
  const Rational h2 = s.h * s.h;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) g(i, j) = s.q(i, j) / h2;
  }
  g(kTime, kTime) = h2;
  for (int i = kBase; i < 7; ++i) g(i, i) = s.h;
  return g;
}

KForm evaluate(const PolyForm& a, const Rational& t) {
  KForm out(a.dim(), a.degree());
  for (const auto& [m, c] : a.terms()) out.add(m, c(t));
  return out;
}

namespace {

PolyForm time_derivative(const PolyForm& a) {
  return a.map_coefficients([](const Polynomial& p) { return p.derivative(); });
}

}  // namespace

TorsionFreeReport dga_verify_torsion_free(const Matrix& f) {
  const auto full = flow_dga(f, true);
  const auto spatial = flow_dga(f, false);
  TorsionFreeReport r;
  r.dga_consistent = full.squares_to_zero() && spatial.squares_to_zero();
  if (!r.dga_consistent) throw DomainError("dga_verify_torsion_free: d^2 != 0 on generators");
  const FlowForms forms = flow_forms(f);
  r.d_phi = full.d(forms.phi);
  r.d_star_phi = full.d(forms.star_phi);
  r.d_phi_zero = r.d_phi.is_zero();
  r.d_star_phi_zero = r.d_star_phi.is_zero();
  r.psi_plus_evolution = time_derivative(forms.psi_plus) == spatial.d(forms.h_sigma);
  r.sigma_sq_evolution = time_derivative(forms.half_sigma_sq) == -spatial.d(forms.h_psi_minus);
  return r;
}

}  // namespace liekernel
