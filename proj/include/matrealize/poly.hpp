#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "matrealize/rational.hpp"
#include "matrealize/subset.hpp"

namespace matrealize {

// Exponent vectors are packed four bits per variable into one 64-bit word,
// variable t_k at bits 4(k-1)..4(k-1)+3. That caps the project at 16
// variables of per-variable degree 15, far beyond what template minors and
// their byproducts reach; arithmetic throws ExponentOverflow at the cap
// instead of wrapping.
using PackedExp = std::uint64_t;

inline constexpr int kMaxVars = 16;
inline constexpr int kMaxVarDegree = 15;

inline int exp_of(PackedExp e, int var) { return static_cast<int>((e >> (4 * (var - 1))) & 0xf); }
PackedExp exp_with(PackedExp e, int var, int degree);
int exp_total_degree(PackedExp e);
PackedExp exp_add(PackedExp a, PackedExp b);  // throws ExponentOverflow

// Graded reverse-lexicographic term order with t_1 < t_2 < ...; the
// comparator sorts leading term first, so map iteration is print order.
struct TermOrder {
  bool operator()(PackedExp a, PackedExp b) const;
};

// Sparse exact-integer-coefficient multivariate polynomial. Zero
// coefficients are never stored; the zero polynomial has an empty term map.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int var_count) : var_count_(var_count) {}

  static Polynomial constant(int var_count, Int value);
  static Polynomial variable(int var_count, int var);

  int var_count() const { return var_count_; }
  const std::map<PackedExp, Int, TermOrder>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Int constant_value() const;  // requires is_constant()
  int total_degree() const;    // zero polynomial -> -1
  int degree_in(int var) const;
  bool uses_var(int var) const { return degree_in(var) > 0; }
  std::uint32_t used_vars() const;  // bit (k-1) set when t_k occurs
  const Int& leading_coefficient() const;

  void add_term(PackedExp exp, const Int& coeff);

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Int& scalar) const;

  bool operator==(const Polynomial&) const = default;

 private:
  int var_count_ = 0;
  std::map<PackedExp, Int, TermOrder> terms_;
};

Polynomial poly_pow(const Polynomial& base, int exponent);

// Coefficient of t_var^degree, viewed as a polynomial in the other variables.
Polynomial coefficient_in(const Polynomial& p, int var, int degree);

// gcd in Z[t_1,...,t_s] via primitive pseudo-remainder sequences, recursing
// on the highest occurring variable. Result has a positive leading
// coefficient; poly_gcd(a, 0) is a normalized.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

struct ContentPrimitive {
  Int content;            // positive gcd of the coefficients
  Polynomial primitive;   // p / content, sign preserved
};
ContentPrimitive content_primitive(const Polynomial& p);  // throws ZeroPolynomial

// Exact division; returns nothing when b does not divide a.
std::optional<Polynomial> try_divide_exact(const Polynomial& a, const Polynomial& b);

// p with t_var replaced by (numerator / denominator), cleared of
// denominators: returns denominator^deg * p(t_var <- numerator/denominator),
// where deg is the degree of p in t_var. With denominator 1 this is plain
// polynomial substitution.
Polynomial substitute(const Polynomial& p, int var, const Polynomial& numerator,
                      const Int& denominator = 1);
Polynomial substitute(const Polynomial& p, int var, const Rat& value, Int* scale_out = nullptr);

Rat evaluate(const Polynomial& p, std::span<const Rat> point);

// Rank of the symmetric matrix of the homogenized quadric (entries doubled
// to stay integral; the rank is unchanged). Input must be nonzero of total
// degree at most 2.
int quadratic_form_rank(const Polynomial& q);

std::string to_string(const Polynomial& p);
Polynomial parse_polynomial(const std::string& text, int var_count);

// d x m matrix over {0, 1, t_1..t_s}; each variable appears exactly once.
struct TemplateEntry {
  enum class Kind : std::uint8_t { Zero, One, Var };
  Kind kind = Kind::Zero;
  int var = 0;

  bool operator==(const TemplateEntry&) const = default;
};

struct TemplateMatrix {
  int rows = 0, cols = 0;
  int var_count = 0;
  std::vector<TemplateEntry> entries;

  TemplateMatrix() = default;
  TemplateMatrix(int r, int c)
      : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c) {}

  const TemplateEntry& at(int i, int j) const {
    return entries[static_cast<std::size_t>(i - 1) * cols + (j - 1)];
  }
  TemplateEntry& at(int i, int j) {
    return entries[static_cast<std::size_t>(i - 1) * cols + (j - 1)];
  }

  bool operator==(const TemplateMatrix&) const = default;
};

// Exact determinant of the d x d submatrix on the given columns, by cofactor
// expansion along the line with the most constant entries.
Polynomial det_template(const TemplateMatrix& t, Mask columns);

struct PolySystem {
  int var_count = 0;
  std::vector<Polynomial> equalities;
  std::vector<Polynomial> inequalities;
};

}  // namespace matrealize
