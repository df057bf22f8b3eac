#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "liekernel/exterior.hpp"
#include "liekernel/liealg.hpp"
#include "liekernel/rational.hpp"

namespace liekernel {

class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, size_t position)
      : DomainError(what + " at position " + std::to_string(position)), position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

/// scale · parameter, or scale alone when parameter is empty. A named
/// coefficient always has scale ±1.
struct Coefficient {
  Rational scale{1};
  std::string parameter;

  friend bool operator==(const Coefficient&, const Coefficient&) = default;
};

/// One summand c.ij of a covector differential; i and j are 0-based and
/// kept in written order (21 is e_2 ∧ e_1).
struct Term {
  Coefficient coefficient;
  int i = 0;
  int j = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

struct AlgebraExpr {
  int n = 0;
  std::vector<std::vector<Term>> slots;  // slots[k] describes d e^{k+1}

  std::set<std::string> parameters() const;
  friend bool operator==(const AlgebraExpr&, const AlgebraExpr&) = default;
};

using Bindings = std::map<std::string, Rational>;

/// Grammar: ( item , ... ) with item = 0 | term ((+|-) term)*,
/// term = [coef .] idx, coef = p | p/q | name, idx = ij (n ≤ 9) or [i,j].
/// Terms of each slot are sorted by unordered index pair.
AlgebraExpr parse(std::string_view text);

std::string serialize(const AlgebraExpr& expr);

/// Structure constants under dε^k(e_i, e_j) = c, i.e. [e_i, e_j] gains −c·e_k.
/// Jacobi is not checked.
StructureConstants instantiate(const AlgebraExpr& expr, const Bindings& bindings = {});

/// parse + instantiate + LieAlgebra::validate.
LieAlgebra parse_algebra(std::string_view text, const Bindings& bindings = {}, std::string name = {});

/// Inverse of instantiate for parameter-free data: slot k lists c.ji for
/// i < j with [e_i, e_j] = c·e_k (larger index first).
AlgebraExpr to_expr(const StructureConstants& c);

/// A k-form written with the term grammar, e.g. "123-2.145+1/2.[1,10,11]".
/// Index groups are runs of single digits for n ≤ 9, else bracketed.
KForm parse_form(std::string_view text, int n);

/// One line of a .lie fixture file:
///   [name] (tuple) [| p=v, ...] [@ w1,w2,...] [# comment]
/// The @ suffix assigns positive integer weights to basis vectors.
struct FixtureEntry {
  std::string name;
  AlgebraExpr expr;
  Bindings bindings;
  std::optional<std::vector<int>> grading;
  int line = 0;
};

std::vector<FixtureEntry> parse_fixture(std::string_view text);
std::vector<FixtureEntry> load_fixture(const std::string& path);

}  // namespace liekernel
