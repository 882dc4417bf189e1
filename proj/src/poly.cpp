#include "matrealize/poly.hpp"

#include <algorithm>
#include <cctype>

#include "matrealize/error.hpp"

namespace matrealize {

PackedExp exp_with(PackedExp e, int var, int degree) {
  if (var < 1 || var > kMaxVars) {
    fail(ErrorKind::OutOfRange, "variable index t" + std::to_string(var) + " out of range");
  }
  if (degree < 0 || degree > kMaxVarDegree) {
    fail(ErrorKind::ExponentOverflow,
         "degree " + std::to_string(degree) + " exceeds the per-variable cap of " +
             std::to_string(kMaxVarDegree));
  }
  PackedExp slot = PackedExp{0xf} << (4 * (var - 1));
  return (e & ~slot) | (static_cast<PackedExp>(degree) << (4 * (var - 1)));
}

int exp_total_degree(PackedExp e) {
  int sum = 0;
  while (e != 0) {
    sum += static_cast<int>(e & 0xf);
    e >>= 4;
  }
  return sum;
}

PackedExp exp_add(PackedExp a, PackedExp b) {
  if (a == 0) return b;
  if (b == 0) return a;
  PackedExp out = 0;
  for (int k = 1; k <= kMaxVars; ++k) {
    int sum = exp_of(a, k) + exp_of(b, k);
    if (sum > kMaxVarDegree) {
      fail(ErrorKind::ExponentOverflow,
           "degree of t" + std::to_string(k) + " exceeds " + std::to_string(kMaxVarDegree));
    }
    out |= static_cast<PackedExp>(sum) << (4 * (k - 1));
  }
  return out;
}

bool TermOrder::operator()(PackedExp a, PackedExp b) const {
  if (a == b) return false;
  int da = exp_total_degree(a);
  int db = exp_total_degree(b);
  if (da != db) return da > db;
  // Same grade: the first variable (ascending index) with differing exponent
  // decides; the smaller exponent there is the larger term.
  for (int k = 1; k <= kMaxVars; ++k) {
    int ea = exp_of(a, k);
    int eb = exp_of(b, k);
    if (ea != eb) return ea < eb;
  }
  return false;
}

Polynomial Polynomial::constant(int var_count, Int value) {
  Polynomial p(var_count);
  p.add_term(0, value);
  return p;
}

Polynomial Polynomial::variable(int var_count, int var) {
  if (var < 1 || var > var_count) {
    fail(ErrorKind::OutOfRange, "variable t" + std::to_string(var) + " out of range");
  }
  Polynomial p(var_count);
  p.add_term(exp_with(0, var, 1), 1);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Int Polynomial::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) fail(ErrorKind::Internal, "constant_value of a non-constant polynomial");
  return terms_.begin()->second;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return exp_total_degree(terms_.begin()->first);
}

int Polynomial::degree_in(int var) const {
  int deg = 0;
  for (const auto& [exp, coeff] : terms_) deg = std::max(deg, exp_of(exp, var));
  return deg;
}

std::uint32_t Polynomial::used_vars() const {
  std::uint32_t used = 0;
  for (const auto& [exp, coeff] : terms_) {
    PackedExp e = exp;
    for (int k = 1; k <= kMaxVars; ++k, e >>= 4) {
      if ((e & 0xf) != 0) used |= 1u << (k - 1);
    }
  }
  return used;
}

const Int& Polynomial::leading_coefficient() const {
  if (terms_.empty()) fail(ErrorKind::ZeroPolynomial, "leading coefficient of zero");
  return terms_.begin()->second;
}

void Polynomial::add_term(PackedExp exp, const Int& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exp, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out(var_count_);
  for (const auto& [exp, coeff] : terms_) out.terms_.emplace(exp, -coeff);
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  if (var_count_ != other.var_count_) {
    fail(ErrorKind::Internal, "polynomial operands over different variable spaces");
  }
  Polynomial out = *this;
  for (const auto& [exp, coeff] : other.terms_) out.add_term(exp, coeff);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  if (var_count_ != other.var_count_) {
    fail(ErrorKind::Internal, "polynomial operands over different variable spaces");
  }
  Polynomial out = *this;
  for (const auto& [exp, coeff] : other.terms_) out.add_term(exp, -coeff);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (var_count_ != other.var_count_) {
    fail(ErrorKind::Internal, "polynomial operands over different variable spaces");
  }
  Polynomial out(var_count_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      out.add_term(exp_add(ea, eb), ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::operator*(const Int& scalar) const {
  Polynomial out(var_count_);
  if (scalar == 0) return out;
  for (const auto& [exp, coeff] : terms_) out.terms_.emplace(exp, coeff * scalar);
  return out;
}

Polynomial poly_pow(const Polynomial& base, int exponent) {
  if (exponent < 0) fail(ErrorKind::Internal, "negative polynomial power");
  Polynomial out = Polynomial::constant(base.var_count(), 1);
  for (int i = 0; i < exponent; ++i) out = out * base;
  return out;
}

Polynomial coefficient_in(const Polynomial& p, int var, int degree) {
  Polynomial out(p.var_count());
  for (const auto& [exp, coeff] : p.terms()) {
    if (exp_of(exp, var) == degree) out.add_term(exp_with(exp, var, 0), coeff);
  }
  return out;
}

namespace {

Polynomial normalize_sign(Polynomial p) {
  if (!p.is_zero() && p.leading_coefficient() < 0) return -p;
  return p;
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  std::optional<Polynomial> q = try_divide_exact(a, b);
  if (!q) fail(ErrorKind::Internal, "inexact polynomial division");
  return *q;
}

// gcd of the coefficients of p viewed in R[t_var].
Polynomial content_in(const Polynomial& p, int var) {
  Polynomial g(p.var_count());
  for (int e = 0; e <= p.degree_in(var); ++e) {
    Polynomial c = coefficient_in(p, var, e);
    if (!c.is_zero()) g = poly_gcd(g, c);
    if (g.is_constant() && !g.is_zero() && g.constant_value() == 1) break;
  }
  return g;
}

// Pseudo-remainder of a by b with respect to t_var.
Polynomial prem(const Polynomial& a, const Polynomial& b, int var) {
  int db = b.degree_in(var);
  Polynomial lc = coefficient_in(b, var, db);
  Polynomial r = a;
  int e = a.degree_in(var) - db + 1;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    int dr = r.degree_in(var);
    Polynomial lr = coefficient_in(r, var, dr);
    Polynomial shift = lr * poly_pow(Polynomial::variable(r.var_count(), var), dr - db);
    r = lc * r - shift * b;
    --e;
  }
  for (; e > 0; --e) r = lc * r;
  return r;
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return normalize_sign(b);
  if (b.is_zero()) return normalize_sign(a);

  std::uint32_t used = a.used_vars() | b.used_vars();
  if (used == 0) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.constant_value().get_mpz_t(), b.constant_value().get_mpz_t());
    return Polynomial::constant(a.var_count(), g);
  }

  int var = 32 - std::countl_zero(used);  // highest occurring variable

  Polynomial ca = content_in(a, var);
  Polynomial cb = content_in(b, var);
  Polynomial c = poly_gcd(ca, cb);
  Polynomial pa = divide_exact(a, ca);
  Polynomial pb = divide_exact(b, cb);

  // A primitive polynomial of degree zero in the main variable is a unit, so
  // the primitive parts are coprime as soon as one of them is free of it.
  if (pa.degree_in(var) == 0 || pb.degree_in(var) == 0) return normalize_sign(c);

  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  while (true) {
    Polynomial r = prem(pa, pb, var);
    if (r.is_zero()) return normalize_sign(c * pb);
    if (r.degree_in(var) == 0) return normalize_sign(c);
    pa = pb;
    pb = divide_exact(r, content_in(r, var));
  }
}

ContentPrimitive content_primitive(const Polynomial& p) {
  if (p.is_zero()) fail(ErrorKind::ZeroPolynomial, "content of the zero polynomial");
  Int content = 0;
  for (const auto& [exp, coeff] : p.terms()) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), coeff.get_mpz_t());
    if (content == 1) break;
  }
  Polynomial primitive(p.var_count());
  for (const auto& [exp, coeff] : p.terms()) primitive.add_term(exp, coeff / content);
  return ContentPrimitive{content, primitive};
}

std::optional<Polynomial> try_divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) return std::nullopt;
  Polynomial quotient(a.var_count());
  Polynomial rest = a;
  PackedExp lead_exp = b.terms().begin()->first;
  const Int& lead_coeff = b.terms().begin()->second;
  while (!rest.is_zero()) {
    PackedExp re = rest.terms().begin()->first;
    const Int& rc = rest.terms().begin()->second;
    for (int k = 1; k <= kMaxVars; ++k) {
      if (exp_of(re, k) < exp_of(lead_exp, k)) return std::nullopt;
    }
    if (rc % lead_coeff != 0) return std::nullopt;
    // No nibble borrows: every exponent of re dominates lead_exp.
    PackedExp qe = re - lead_exp;
    Int qc = rc / lead_coeff;
    Polynomial term(a.var_count());
    term.add_term(qe, qc);
    quotient.add_term(qe, qc);
    rest = rest - term * b;
  }
  return quotient;
}

Polynomial substitute(const Polynomial& p, int var, const Polynomial& numerator,
                      const Int& denominator) {
  if (denominator == 0) fail(ErrorKind::Internal, "zero denominator in substitution");
  int deg = p.degree_in(var);
  if (deg == 0) return p;

  std::vector<Int> den_pow(deg + 1);
  den_pow[0] = 1;
  for (int e = 1; e <= deg; ++e) den_pow[e] = den_pow[e - 1] * denominator;

  Polynomial out(p.var_count());
  Polynomial num_pow = Polynomial::constant(p.var_count(), 1);
  for (int e = 0; e <= deg; ++e) {
    if (e > 0) num_pow = num_pow * numerator;
    Polynomial c = coefficient_in(p, var, e);
    if (!c.is_zero()) out = out + c * num_pow * den_pow[deg - e];
  }
  return out;
}

Polynomial substitute(const Polynomial& p, int var, const Rat& value, Int* scale_out) {
  Int den = value.get_den();
  int deg = p.degree_in(var);
  if (scale_out != nullptr) {
    Int scale = 1;
    for (int e = 0; e < deg; ++e) scale *= den;
    *scale_out = scale;
  }
  return substitute(p, var, Polynomial::constant(p.var_count(), Int(value.get_num())), den);
}

Rat evaluate(const Polynomial& p, std::span<const Rat> point) {
  if (static_cast<int>(point.size()) < p.var_count()) {
    fail(ErrorKind::Internal, "evaluation point has too few coordinates");
  }
  Rat total(0);
  for (const auto& [exp, coeff] : p.terms()) {
    Rat term(coeff);
    for (int k = 1; k <= p.var_count(); ++k) {
      for (int e = 0; e < exp_of(exp, k); ++e) term *= point[k - 1];
    }
    total += term;
  }
  return total;
}

int quadratic_form_rank(const Polynomial& q) {
  if (q.is_zero()) fail(ErrorKind::ZeroPolynomial, "quadratic form rank of zero");
  if (q.total_degree() > 2) {
    fail(ErrorKind::NotAQuadric, "total degree " + std::to_string(q.total_degree()) + " > 2");
  }

  // Symmetric matrix of the homogenization, doubled to stay integral; index
  // 1 is the homogenizing variable, index k+1 is t_k.
  int n = q.var_count() + 1;
  RationalMatrix sym(n, n);
  for (const auto& [exp, coeff] : q.terms()) {
    std::vector<int> vars;
    for (int k = 1; k <= q.var_count(); ++k) {
      for (int e = 0; e < exp_of(exp, k); ++e) vars.push_back(k);
    }
    Rat c(coeff);
    if (vars.empty()) {
      sym.at(1, 1) += 2 * c;
    } else if (vars.size() == 1) {
      sym.at(1, vars[0] + 1) += c;
      sym.at(vars[0] + 1, 1) += c;
    } else if (vars[0] == vars[1]) {
      sym.at(vars[0] + 1, vars[0] + 1) += 2 * c;
    } else {
      sym.at(vars[0] + 1, vars[1] + 1) += c;
      sym.at(vars[1] + 1, vars[0] + 1) += c;
    }
  }
  return sym.rank();
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exp, coeff] : p.terms()) {
    bool negative = coeff < 0;
    Int magnitude = abs(coeff);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string monomial;
    for (int k = 1; k <= kMaxVars; ++k) {
      int e = exp_of(exp, k);
      if (e == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += "t" + std::to_string(k);
      if (e > 1) monomial += "^" + std::to_string(e);
    }
    if (monomial.empty()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + "*";
      out += monomial;
    }
    first = false;
  }
  return out;
}

namespace {

struct PolyParser {
  const std::string& text;
  int var_count;
  std::size_t pos = 0;

  [[noreturn]] void error(const std::string& message) const {
    fail(ErrorKind::ParseError,
         message + " at offset " + std::to_string(pos) + " in '" + text + "'");
  }

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_space();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  long parse_uint() {
    skip_space();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      error("expected a number");
    }
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return std::stol(text.substr(start, pos - start));
  }

  Polynomial parse_base() {
    skip_space();
    if (pos >= text.size()) error("unexpected end of input");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      Polynomial inner = parse_expr();
      if (!eat(')')) error("expected ')'");
      return inner;
    }
    if (c == 't') {
      ++pos;
      long var = parse_uint();
      if (var < 1 || var > var_count) error("variable t" + std::to_string(var) + " out of range");
      return Polynomial::variable(var_count, static_cast<int>(var));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      return Polynomial::constant(var_count, Int(text.substr(start, pos - start)));
    }
    error("unexpected character '" + std::string(1, c) + "'");
  }

  Polynomial parse_factor() {
    Polynomial base = parse_base();
    if (eat('^')) {
      long e = parse_uint();
      if (e > kMaxVarDegree) error("exponent exceeds the degree cap");
      return poly_pow(base, static_cast<int>(e));
    }
    return base;
  }

  Polynomial parse_term() {
    Polynomial out = parse_factor();
    while (eat('*')) out = out * parse_factor();
    return out;
  }

  Polynomial parse_expr() {
    bool negative = false;
    skip_space();
    if (eat('-')) {
      negative = true;
    } else {
      eat('+');
    }
    Polynomial out = parse_term();
    if (negative) out = -out;
    while (true) {
      skip_space();
      if (eat('+')) {
        out = out + parse_term();
      } else if (eat('-')) {
        out = out - parse_term();
      } else {
        break;
      }
    }
    return out;
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int var_count) {
  if (var_count < 0 || var_count > kMaxVars) {
    fail(ErrorKind::OutOfRange, "variable count out of range");
  }
  PolyParser parser{text, var_count};
  Polynomial out = parser.parse_expr();
  parser.skip_space();
  if (parser.pos != text.size()) parser.error("trailing input");
  return out;
}

namespace {

Polynomial det_recursive(const TemplateMatrix& t, std::vector<int>& rows, std::vector<int>& cols) {
  int n = static_cast<int>(rows.size());
  if (n == 0) return Polynomial::constant(t.var_count, 1);
  if (n == 1) {
    const TemplateEntry& entry = t.at(rows[0], cols[0]);
    switch (entry.kind) {
      case TemplateEntry::Kind::Zero: return Polynomial(t.var_count);
      case TemplateEntry::Kind::One: return Polynomial::constant(t.var_count, 1);
      case TemplateEntry::Kind::Var: return Polynomial::variable(t.var_count, entry.var);
    }
    fail(ErrorKind::Internal, "corrupt template entry");
  }

  // Expand along the line with the most constant entries.
  int best_score = -1;
  int best_index = 0;
  bool best_is_row = true;
  for (int r = 0; r < n; ++r) {
    int score = 0;
    for (int c = 0; c < n; ++c) {
      if (t.at(rows[r], cols[c]).kind != TemplateEntry::Kind::Var) ++score;
    }
    if (score > best_score) {
      best_score = score;
      best_index = r;
      best_is_row = true;
    }
  }
  for (int c = 0; c < n; ++c) {
    int score = 0;
    for (int r = 0; r < n; ++r) {
      if (t.at(rows[r], cols[c]).kind != TemplateEntry::Kind::Var) ++score;
    }
    if (score > best_score) {
      best_score = score;
      best_index = c;
      best_is_row = false;
    }
  }

  Polynomial det(t.var_count);
  for (int k = 0; k < n; ++k) {
    int r = best_is_row ? best_index : k;
    int c = best_is_row ? k : best_index;
    const TemplateEntry& entry = t.at(rows[r], cols[c]);
    if (entry.kind == TemplateEntry::Kind::Zero) continue;

    int removed_row = rows[r];
    int removed_col = cols[c];
    rows.erase(rows.begin() + r);
    cols.erase(cols.begin() + c);
    Polynomial minor = det_recursive(t, rows, cols);
    rows.insert(rows.begin() + r, removed_row);
    cols.insert(cols.begin() + c, removed_col);

    if (entry.kind == TemplateEntry::Kind::Var) {
      minor = minor * Polynomial::variable(t.var_count, entry.var);
    }
    if ((r + c) % 2 != 0) minor = -minor;
    det = det + minor;
  }
  return det;
}

}  // namespace

Polynomial det_template(const TemplateMatrix& t, Mask columns) {
  std::vector<int> cols = subset_elements(columns);
  if (static_cast<int>(cols.size()) != t.rows) {
    fail(ErrorKind::Internal, "need exactly " + std::to_string(t.rows) + " columns");
  }
  for (int c : cols) {
    if (c < 1 || c > t.cols) fail(ErrorKind::OutOfRange, "column " + std::to_string(c));
  }
  std::vector<int> rows(t.rows);
  for (int i = 0; i < t.rows; ++i) rows[i] = i + 1;
  return det_recursive(t, rows, cols);
}

}  // namespace matrealize
