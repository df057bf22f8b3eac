#include "liekernel/exterior.hpp"

#include <algorithm>

namespace liekernel {

void check_exterior_dim(int n) {
  if (n < 0 || n > kMaxExteriorDim) {
    throw DomainError("exterior algebra supports ambient dimension 0.." +
                      std::to_string(kMaxExteriorDim) + ", got " + std::to_string(n));
  }
}

Mask mask_from_indices(const std::vector<int>& zero_based) {
  Mask m = 0;
  for (int i : zero_based) {
    if (i < 0 || i >= kMaxExteriorDim) throw DomainError("basis index out of range");
    if (m & bit(i)) throw DomainError("repeated basis index");
    m |= bit(i);
  }
  return m;
}

std::vector<int> indices_of(Mask m) {
  std::vector<int> out;
  for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::vector<Mask> subsets_of_size(int n, int k) {
  std::vector<Mask> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[size_t(i)] = i;
  while (true) {
    out.push_back(mask_from_indices(idx));
    int i = k - 1;
    while (i >= 0 && idx[size_t(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[size_t(i)];
    for (int j = i + 1; j < k; ++j) idx[size_t(j)] = idx[size_t(j - 1)] + 1;
  }
  return out;
}

std::string index_text(Mask m, int n) {
  std::string s;
  const auto idx = indices_of(m);
  if (n <= 9) {
    for (int i : idx) s += static_cast<char>('1' + i);
    return s;
  }
  s = "[";
  for (size_t j = 0; j < idx.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(idx[j] + 1);
  }
  return s + "]";
}

namespace {

std::vector<Mask> lex_sorted(std::vector<Mask> masks) {
  std::sort(masks.begin(), masks.end(), [](Mask a, Mask b) { return indices_of(a) < indices_of(b); });
  return masks;
}

template <class R, Variance V, class Fmt>
std::string format_terms(const Exterior<R, V>& a, Fmt coefficient_text) {
  std::vector<Mask> masks;
  for (const auto& [m, c] : a.terms()) masks.push_back(m);
  std::string out;
  for (Mask m : lex_sorted(masks)) {
    std::string term = coefficient_text(a.coeff(m), m == 0);
    const std::string idx = index_text(m, a.dim());
    if (m != 0) term = term.empty() ? idx : term == "-" ? "-" + idx : term + "." + idx;
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

std::string rational_coefficient(const Rational& c, bool scalar_term) {
  if (!scalar_term && c == 1) return "";
  if (!scalar_term && c == -1) return "-";
  return c.get_str();
}

}  // namespace

std::string to_string(const KForm& a) { return format_terms(a, rational_coefficient); }
std::string to_string(const KVector& a) { return format_terms(a, rational_coefficient); }

std::string to_string(const PolyForm& a) {
  return format_terms(a, [](const Polynomial& c, bool) { return "(" + c.to_string() + ")"; });
}

bool is_positive_definite(const Matrix& gram) {
  if (gram.rows() != gram.cols()) return false;
  for (int i = 0; i < gram.rows(); ++i) {
    for (int j = 0; j < i; ++j) {
      if (gram(i, j) != gram(j, i)) return false;
    }
  }
  for (int k = 1; k <= gram.rows(); ++k) {
    Matrix lead(k, k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) lead(i, j) = gram(i, j);
    }
    if (sgn(determinant(lead)) <= 0) return false;
  }
  return true;
}

KForm hodge_star(const KForm& a, const Matrix& gram, int orientation) {
  const int n = a.dim();
  if (gram.rows() != n || gram.cols() != n) throw DomainError("hodge_star: gram has wrong size");
  if (orientation != 1 && orientation != -1) throw DomainError("hodge_star: orientation must be +1 or -1");
  if (!is_positive_definite(gram)) throw DomainError("hodge_star: gram is not positive-definite");
  auto root = exact_sqrt(determinant(gram));
  if (!root) throw DomainError("hodge_star: sqrt(det gram) is irrational; exact volume unavailable");
  const Matrix ginv = *inverse(gram);
  const int k = a.degree();
  const auto basis = subsets_of_size(n, k);

  // Raise indices: e^I -> sum_K det(ginv[I,K]) E_K, then contract into vol.
  KVector raised(n, k);
  for (const auto& [mi, ci] : a.terms()) {
    const auto rows = indices_of(mi);
    for (Mask mk : basis) {
      const auto cols = indices_of(mk);
      Matrix minor(k, k);
      for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) minor(r, c) = ginv(rows[size_t(r)], cols[size_t(c)]);
      }
      raised.add(mk, ci * determinant(minor));
    }
  }
  const Rational vol_coeff = orientation * *root;
  return contract(raised, KForm::monomial(n, full_mask(n), vol_coeff));
}

KForm pullback(const KForm& a, const Matrix& g) {
  if (g.rows() != a.dim()) throw DomainError("pullback: matrix rows must equal form dimension");
  const int m = g.cols();
  std::vector<KForm> pulled;
  for (int i = 0; i < a.dim(); ++i) {
    KForm e(m, 1);
    for (int j = 0; j < m; ++j) e.add(bit(j), g(i, j));
    pulled.push_back(std::move(e));
  }
  KForm out(m, a.degree());
  for (const auto& [mask, c] : a.terms()) {
    KForm term = KForm::monomial(m, 0, c);
    for (int i : indices_of(mask)) term = wedge(term, pulled[size_t(i)]);
    out += term;
  }
  return out;
}

}  // namespace liekernel
