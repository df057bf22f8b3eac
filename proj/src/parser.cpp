#include "liekernel/parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace liekernel {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_name_char(char c) { return is_alpha(c) || is_digit(c) || c == '_'; }

class Cursor {
 public:
  explicit Cursor(std::string_view text, size_t offset = 0) : text_(text), offset_(offset) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  // No whitespace skipping: literals and index groups are contiguous.
  char peek_raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char peek_raw(size_t ahead) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  void advance() { ++pos_; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected ") + what);
  }
  std::string digits() {
    std::string s;
    while (is_digit(peek_raw())) s += text_[pos_++];
    return s;
  }
  std::string name() {
    std::string s;
    while (is_name_char(peek_raw())) s += text_[pos_++];
    return s;
  }
  size_t position() const { return offset_ + pos_; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, position()); }

 private:
  std::string_view text_;
  size_t offset_;
  size_t pos_ = 0;
};

int parse_index_number(Cursor& cur) {
  cur.skip_space();
  const std::string d = cur.digits();
  if (d.empty()) cur.fail("expected index");
  if (d.size() > 4) cur.fail("index too large");
  return std::stoi(d);
}

// Reads "ij" (two digits) or "[i,j]". Returns 1-based indices.
std::pair<int, int> parse_pair_index(Cursor& cur, bool& bracketed) {
  bracketed = cur.peek_raw() == '[';
  if (bracketed) {
    cur.advance();
    const int i = parse_index_number(cur);
    cur.expect(',', "','");
    const int j = parse_index_number(cur);
    cur.expect(']', "']'");
    return {i, j};
  }
  if (!is_digit(cur.peek_raw())) cur.fail("expected index pair");
  const std::string d = cur.digits();
  if (d.size() != 2) cur.fail("index pair must have exactly two digits, got \"" + d + "\"");
  return {d[0] - '0', d[1] - '0'};
}

void reject_decimal(Cursor& cur) {
  // After "p." a digit run followed by '.' means a decimal literal like 0.5.31.
  size_t k = 0;
  while (is_digit(cur.peek_raw(k))) ++k;
  if (k > 0 && cur.peek_raw(k) == '.') cur.fail("decimal coefficients are not supported");
}

Rational rational_from(const std::string& num, const std::string& den, Cursor& cur) {
  auto r = parse_rational(den.empty() ? num : num + "/" + den);
  if (!r) cur.fail("invalid rational coefficient");
  return *r;
}

Term parse_term(Cursor& cur, int sign, bool& bracketed) {
  cur.skip_space();
  Term t;
  t.coefficient.scale = sign;
  const size_t start = cur.position();
  if (is_alpha(cur.peek_raw())) {
    t.coefficient.parameter = cur.name();
    cur.expect('.', "'.' after parameter name");
  } else if (is_digit(cur.peek_raw())) {
    // Either a coefficient (followed by '.' or '/') or the index itself.
    size_t k = 0;
    while (is_digit(cur.peek_raw(k))) ++k;
    const char after = cur.peek_raw(k);
    if (after == '.' || after == '/') {
      const std::string num = cur.digits();
      std::string den;
      if (cur.peek_raw() == '/') {
        cur.advance();
        den = cur.digits();
        if (den.empty()) cur.fail("expected denominator");
      }
      if (cur.peek_raw() != '.') cur.fail("expected '.' after coefficient");
      cur.advance();
      reject_decimal(cur);
      t.coefficient.scale *= rational_from(num, den, cur);
      if (is_zero(t.coefficient.scale)) throw ParseError("zero coefficient", start);
    }
  } else if (cur.peek_raw() != '[') {
    cur.fail("expected term");
  }
  auto [i, j] = parse_pair_index(cur, bracketed);
  t.i = i - 1;
  t.j = j - 1;
  return t;
}

std::vector<Term> parse_item(Cursor& cur, std::vector<size_t>& positions, std::vector<bool>& bracketed) {
  std::vector<Term> terms;
  cur.skip_space();
  if (cur.peek_raw() == '0') {
    size_t k = 1;
    while (std::isspace(static_cast<unsigned char>(cur.peek_raw(k)))) ++k;
    const char next = cur.peek_raw(k);
    if (next == ',' || next == ')') {
      cur.advance();
      return terms;
    }
  }
  int sign = 1;
  if (cur.accept('-')) sign = -1;
  else cur.accept('+');
  while (true) {
    positions.push_back(cur.position());
    bool b = false;
    terms.push_back(parse_term(cur, sign, b));
    bracketed.push_back(b);
    if (cur.accept('+')) sign = 1;
    else if (cur.accept('-')) sign = -1;
    else break;
  }
  return terms;
}

std::pair<int, int> unordered(const Term& t) { return std::minmax(t.i, t.j); }

std::string coefficient_text(const Coefficient& c) {
  if (!c.parameter.empty()) return (c.scale < 0 ? "-" : "") + c.parameter + ".";
  if (c.scale == 1) return "";
  if (c.scale == -1) return "-";
  return c.scale.get_str() + ".";
}

std::string pair_text(int i, int j, int n) {
  if (n <= 9) return std::to_string(i + 1) + std::to_string(j + 1);
  return "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
}

AlgebraExpr parse_at(std::string_view text, size_t offset) {
  Cursor cur(text, offset);
  cur.expect('(', "'('");
  AlgebraExpr expr;
  std::vector<std::vector<size_t>> positions;
  std::vector<std::vector<bool>> bracketed;
  do {
    positions.emplace_back();
    bracketed.emplace_back();
    expr.slots.push_back(parse_item(cur, positions.back(), bracketed.back()));
  } while (cur.accept(','));
  cur.expect(')', "',' or ')'");
  if (!cur.at_end()) cur.fail("trailing characters after tuple");

  expr.n = static_cast<int>(expr.slots.size());
  for (size_t k = 0; k < expr.slots.size(); ++k) {
    auto& slot = expr.slots[k];
    for (size_t a = 0; a < slot.size(); ++a) {
      const Term& t = slot[a];
      const size_t pos = positions[k][a];
      if (t.i < 0 || t.j < 0 || t.i >= expr.n || t.j >= expr.n) {
        throw ParseError("index out of range 1.." + std::to_string(expr.n), pos);
      }
      if (expr.n >= 10 && !bracketed[k][a]) throw ParseError("two-digit indices are ambiguous for n >= 10, use [i,j]", pos);
      if (t.i == t.j) throw ParseError("repeated index in pair", pos);
      for (size_t b = 0; b < a; ++b) {
        if (unordered(slot[b]) == unordered(t)) throw ParseError("index pair repeated within one entry", pos);
      }
    }
    std::stable_sort(slot.begin(), slot.end(),
                     [](const Term& x, const Term& y) { return unordered(x) < unordered(y); });
  }
  return expr;
}

std::string trim(std::string_view s) {
  size_t a = 0;
  size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

std::set<std::string> AlgebraExpr::parameters() const {
  std::set<std::string> out;
  for (const auto& slot : slots) {
    for (const auto& t : slot) {
      if (!t.coefficient.parameter.empty()) out.insert(t.coefficient.parameter);
    }
  }
  return out;
}

AlgebraExpr parse(std::string_view text) { return parse_at(text, 0); }

std::string serialize(const AlgebraExpr& expr) {
  std::string out = "(";
  for (size_t k = 0; k < expr.slots.size(); ++k) {
    if (k) out += ",";
    const auto& slot = expr.slots[k];
    if (slot.empty()) {
      out += "0";
      continue;
    }
    for (size_t a = 0; a < slot.size(); ++a) {
      std::string term = coefficient_text(slot[a].coefficient) + pair_text(slot[a].i, slot[a].j, expr.n);
      if (a && term.front() != '-') out += "+";
      out += term;
    }
  }
  return out + ")";
}

StructureConstants instantiate(const AlgebraExpr& expr, const Bindings& bindings) {
  StructureConstants c(expr.n);
  for (int k = 0; k < expr.n; ++k) {
    for (const auto& t : expr.slots[size_t(k)]) {
      Rational v = t.coefficient.scale;
      if (!t.coefficient.parameter.empty()) {
        auto it = bindings.find(t.coefficient.parameter);
        if (it == bindings.end()) throw DomainError("unbound parameter '" + t.coefficient.parameter + "'");
        v *= it->second;
      }
      c.add(t.i, t.j, k, -v);
    }
  }
  return c;
}

LieAlgebra parse_algebra(std::string_view text, const Bindings& bindings, std::string name) {
  return LieAlgebra::validate(instantiate(parse(text), bindings), std::move(name));
}

AlgebraExpr to_expr(const StructureConstants& c) {
  AlgebraExpr expr;
  expr.n = c.dim();
  expr.slots.resize(size_t(expr.n));
  for (int i = 0; i < expr.n; ++i) {
    for (int j = i + 1; j < expr.n; ++j) {
      for (int k = 0; k < expr.n; ++k) {
        if (!is_zero(c(i, j, k))) expr.slots[size_t(k)].push_back(Term{Coefficient{c(i, j, k), {}}, j, i});
      }
    }
  }
  return expr;
}

KForm parse_form(std::string_view text, int n) {
  check_exterior_dim(n);
  Cursor cur(text);
  if (cur.peek() == '0') {
    Cursor probe = cur;
    probe.advance();
    if (probe.at_end()) return KForm(n, 0);
  }
  std::optional<KForm> out;
  int sign = 1;
  if (cur.accept('-')) sign = -1;
  else cur.accept('+');
  while (true) {
    cur.skip_space();
    const size_t start = cur.position();
    Rational coeff = sign;
    size_t k = 0;
    while (is_digit(cur.peek_raw(k))) ++k;
    if (k > 0 && (cur.peek_raw(k) == '.' || cur.peek_raw(k) == '/')) {
      const std::string num = cur.digits();
      std::string den;
      if (cur.peek_raw() == '/') {
        cur.advance();
        den = cur.digits();
      }
      if (cur.peek_raw() != '.') cur.fail("expected '.' after coefficient");
      cur.advance();
      reject_decimal(cur);
      coeff *= rational_from(num, den, cur);
    }
    std::vector<int> idx;
    if (cur.peek_raw() == '[') {
      cur.advance();
      do idx.push_back(parse_index_number(cur) - 1);
      while (cur.accept(','));
      cur.expect(']', "']'");
    } else {
      if (n > 9) cur.fail("indices must be bracketed when n >= 10");
      const std::string d = cur.digits();
      if (d.empty()) cur.fail("expected index group");
      for (char c : d) idx.push_back(c - '1');
    }
    for (int i : idx) {
      if (i < 0 || i >= n) throw ParseError("index out of range 1.." + std::to_string(n), start);
    }
    // Sort with sign: count inversions.
    int inversions = 0;
    for (size_t a = 0; a < idx.size(); ++a) {
      for (size_t b = a + 1; b < idx.size(); ++b) {
        if (idx[a] == idx[b]) throw ParseError("repeated index in monomial", start);
        if (idx[a] > idx[b]) ++inversions;
      }
    }
    if (inversions & 1) coeff = -coeff;
    const int degree = static_cast<int>(idx.size());
    if (!out) out.emplace(n, degree);
    if (out->degree() != degree) throw ParseError("mixed degrees in form", start);
    out->add(mask_from_indices(idx), coeff);
    if (cur.accept('+')) sign = 1;
    else if (cur.accept('-')) sign = -1;
    else break;
  }
  if (!cur.at_end()) cur.fail("unexpected character");
  return *out;
}

std::vector<FixtureEntry> parse_fixture(std::string_view text) {
  std::vector<FixtureEntry> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(std::string_view(raw).substr(0, raw.find('#')));
    if (line.empty()) continue;
    try {
      FixtureEntry e;
      e.line = line_no;
      const size_t open = line.find('(');
      const size_t close = line.find(')');
      if (open == std::string::npos || close == std::string::npos || close < open) {
        throw ParseError("expected a parenthesised tuple", 0);
      }
      e.name = trim(std::string_view(line).substr(0, open));
      if (e.name.find_first_of(" \t") != std::string::npos) throw ParseError("name must be one token", 0);
      e.expr = parse_at(std::string_view(line).substr(open, close - open + 1), open);

      std::string rest = line.substr(close + 1);
      const size_t at = rest.find('@');
      if (at != std::string::npos) {
        std::vector<int> weights;
        std::stringstream ws(rest.substr(at + 1));
        std::string tok;
        while (std::getline(ws, tok, ',')) {
          tok = trim(tok);
          if (tok.empty() || !std::all_of(tok.begin(), tok.end(), is_digit) || tok.size() > 6) {
            throw ParseError("grading weights must be positive integers", close + 1 + at);
          }
          const int w = std::stoi(tok);
          if (w <= 0) throw ParseError("grading weights must be positive integers", close + 1 + at);
          weights.push_back(w);
        }
        if (static_cast<int>(weights.size()) != e.expr.n) {
          throw ParseError("grading needs one weight per basis vector", close + 1 + at);
        }
        e.grading = std::move(weights);
        rest = rest.substr(0, at);
      }
      rest = trim(rest);
      if (!rest.empty()) {
        if (rest.front() != '|') throw ParseError("expected '|' before bindings", close + 1);
        std::stringstream bs(rest.substr(1));
        std::string tok;
        while (std::getline(bs, tok, ',')) {
          const size_t eq = tok.find('=');
          if (eq == std::string::npos) throw ParseError("binding must be name=value", close + 1);
          const std::string key = trim(std::string_view(tok).substr(0, eq));
          auto value = parse_rational(trim(std::string_view(tok).substr(eq + 1)));
          if (key.empty() || !is_alpha(key.front()) || !std::all_of(key.begin(), key.end(), is_name_char) ||
              !value) {
            throw ParseError("invalid binding '" + trim(tok) + "'", close + 1);
          }
          e.bindings[key] = *value;
        }
      }
      for (const auto& p : e.expr.parameters()) {
        if (!e.bindings.count(p)) throw ParseError("unbound parameter '" + p + "'", 0);
      }
      out.push_back(std::move(e));
    } catch (const ParseError& err) {
      throw DomainError("line " + std::to_string(line_no) + ": " + err.what());
    }
  }
  return out;
}

std::vector<FixtureEntry> load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open fixture file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_fixture(ss.str());
}

}  // namespace liekernel
