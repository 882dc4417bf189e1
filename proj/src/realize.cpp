#include "matrealize/realize.hpp"

#include <algorithm>

#include "matrealize/error.hpp"

namespace matrealize {

TemplateMatrix fill_matrix(int d, int m, Mask basis, const Matroid& matroid) {
  if (matroid.rank() != d || matroid.ground_size() != m) {
    fail(ErrorKind::OutOfRange, "case (d,m) does not match the matroid");
  }
  if (!matroid.is_basis(basis)) {
    fail(ErrorKind::NotABasis, subset_to_string(basis) + " is not a basis");
  }

  // Work over {-1, 0, 1}; -1 entries become the variables at the end.
  std::vector<std::vector<int>> g(d + 1, std::vector<int>(m + 1, -1));
  std::vector<int> basis_elems = subset_elements(basis);

  // Identity block at the basis columns.
  for (int i = 1; i <= d; ++i) {
    for (int k = 1; k <= d; ++k) g[k][basis_elems[i - 1]] = (k == i) ? 1 : 0;
  }

  // Zeros wherever swapping the i-th basis element for column j cannot give
  // a basis.
  for (int j = 1; j <= m; ++j) {
    if (subset_contains(basis, j)) continue;
    for (int i = 1; i <= d; ++i) {
      Mask swapped = subset_add(subset_remove(basis, basis_elems[i - 1]), j);
      if (!matroid.is_basis(swapped)) g[i][j] = 0;
    }
  }

  // Frame pass, column by column: the first nonzero entry of each non-basis
  // column becomes 1.
  for (int j = 1; j <= m; ++j) {
    if (subset_contains(basis, j)) continue;
    for (int i = 1; i <= d; ++i) {
      if (g[i][j] != 0) {
        g[i][j] = 1;
        break;
      }
    }
  }

  // Frame pass, row by row: the first entry that is still neither 0 nor 1
  // becomes 1.
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= m; ++j) {
      if (g[i][j] == -1) {
        g[i][j] = 1;
        break;
      }
    }
  }

  TemplateMatrix t(d, m);
  int next_var = 0;
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= m; ++j) {
      if (g[i][j] == 0) {
        t.at(i, j) = TemplateEntry{TemplateEntry::Kind::Zero, 0};
      } else if (g[i][j] == 1) {
        t.at(i, j) = TemplateEntry{TemplateEntry::Kind::One, 0};
      } else {
        t.at(i, j) = TemplateEntry{TemplateEntry::Kind::Var, ++next_var};
      }
    }
  }
  t.var_count = next_var;
  return t;
}

PolySystem generate_system(const TemplateMatrix& t, const Matroid& matroid) {
  if (t.rows != matroid.rank() || t.cols != matroid.ground_size()) {
    fail(ErrorKind::OutOfRange, "template shape does not match the matroid");
  }
  PolySystem system;
  system.var_count = t.var_count;
  for (Mask subset : subsets_of_size(t.cols, t.rows)) {
    Polynomial minor = det_template(t, subset);
    if (matroid.is_basis(subset)) {
      if (minor.is_zero()) {
        fail(ErrorKind::ContradictionDetected,
             "minor of basis " + subset_to_string(subset) + " vanishes identically");
      }
      if (minor.is_constant()) continue;
      system.inequalities.push_back(content_primitive(minor).primitive);
    } else {
      if (minor.is_zero()) continue;
      if (minor.is_constant()) {
        fail(ErrorKind::ContradictionDetected,
             "minor of non-basis " + subset_to_string(subset) + " is a nonzero constant");
      }
      system.equalities.push_back(content_primitive(minor).primitive);
    }
  }
  return system;
}

Matroid matroid_of_matrix(const RationalMatrix& a) {
  int d = a.rows();
  int m = a.cols();
  if (a.rank() != d) fail(ErrorKind::RankDeficient, "matrix does not have full row rank");
  std::vector<Mask> bases;
  for (Mask subset : subsets_of_size(m, d)) {
    if (a.select_columns(subset).determinant() != 0) bases.push_back(subset);
  }
  return Matroid::create(m, d, std::move(bases));
}

ReductionResult reduce_realization(const RationalMatrix& a,
                                   const std::optional<Matroid>& matroid) {
  int d = a.rows();
  int m = a.cols();
  if (a.rank() != d) fail(ErrorKind::RankDeficient, "matrix does not have full row rank");

  Matroid realized = matroid.has_value() ? *matroid : matroid_of_matrix(a);
  if (realized.rank() != d || realized.ground_size() != m) {
    fail(ErrorKind::OutOfRange, "matroid shape does not match the matrix");
  }

  Mask basis = first_basis_revlex(realized);
  RationalMatrix b = a.select_columns(basis).inverse();
  RationalMatrix reduced = b * a;

  std::vector<int> non_basis;
  for (int j = 1; j <= m; ++j) {
    if (!subset_contains(basis, j)) non_basis.push_back(j);
  }
  RationalMatrix q(d, static_cast<int>(non_basis.size()));
  for (int i = 1; i <= d; ++i) {
    for (std::size_t k = 0; k < non_basis.size(); ++k) {
      q.at(i, static_cast<int>(k) + 1) = reduced.at(i, non_basis[k]);
    }
  }

  FrameScaling scaling = scale_to_frame(q);

  ReductionResult result;
  result.pivot_basis = basis;
  result.G = RationalMatrix(d, d);
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) result.G.at(i, j) = scaling.row_scale[i - 1] * b.at(i, j);
  }

  result.D.assign(m, Rat(1));
  std::vector<int> basis_elems = subset_elements(basis);
  for (int i = 1; i <= d; ++i) result.D[basis_elems[i - 1] - 1] = 1 / scaling.row_scale[i - 1];
  for (std::size_t k = 0; k < non_basis.size(); ++k) {
    result.D[non_basis[k] - 1] = scaling.col_scale[k];
  }

  RationalMatrix ga = result.G * a;
  result.normalized = RationalMatrix(d, m);
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= m; ++j) result.normalized.at(i, j) = ga.at(i, j) * result.D[j - 1];
  }

  if (!satisfies_reduced_conditions(result.normalized, realized)) {
    fail(ErrorKind::Internal, "normalization failed its own contract");
  }
  return result;
}

bool satisfies_reduced_conditions(const RationalMatrix& normalized, const Matroid& matroid) {
  int d = matroid.rank();
  int m = matroid.ground_size();
  if (normalized.rows() != d || normalized.cols() != m) return false;

  // C2: identity block at the revlex-first basis.
  Mask basis = first_basis_revlex(matroid);
  std::vector<int> basis_elems = subset_elements(basis);
  for (int i = 1; i <= d; ++i) {
    for (int k = 1; k <= d; ++k) {
      if (normalized.at(k, basis_elems[i - 1]) != ((k == i) ? 1 : 0)) return false;
    }
  }

  // C3: normal-frame entries of the non-basis block equal 1.
  std::vector<int> non_basis;
  for (int j = 1; j <= m; ++j) {
    if (!subset_contains(basis, j)) non_basis.push_back(j);
  }
  RationalMatrix rest(d, static_cast<int>(non_basis.size()));
  for (int i = 1; i <= d; ++i) {
    for (std::size_t k = 0; k < non_basis.size(); ++k) {
      rest.at(i, static_cast<int>(k) + 1) = normalized.at(i, non_basis[k]);
    }
  }
  for (const FramePos& pos : compute_frame(rest).frame) {
    if (rest.at(pos.first, pos.second) != 1) return false;
  }

  // C1: the minor vanishing pattern realizes the matroid.
  for (Mask subset : subsets_of_size(m, d)) {
    bool nonzero = normalized.select_columns(subset).determinant() != 0;
    if (nonzero != matroid.is_basis(subset)) return false;
  }
  return true;
}

namespace {

// Small rationals in deterministic search order: integers first, then the
// proper fractions with denominator 2 and 3.
const std::vector<Rat>& candidate_values() {
  static const std::vector<Rat> values = [] {
    std::vector<Rat> v;
    for (const char* s : {"0", "1", "2", "3", "-1", "-2", "-3", "1/2", "3/2", "-1/2", "-3/2",
                          "1/3", "2/3", "-1/3", "-2/3"}) {
      v.push_back(parse_rational(s));
    }
    return v;
  }();
  return values;
}

struct Elimination {
  int var;
  Polynomial numerator;  // t_var = -numerator / denominator
  Int denominator;
};

}  // namespace

std::optional<std::vector<Rat>> find_rational_point(const PolySystem& system,
                                                    const WitnessSearchOptions& options) {
  int vc = system.var_count;
  std::vector<Polynomial> eqs = system.equalities;
  std::vector<Elimination> eliminated;
  std::vector<bool> is_eliminated(vc + 1, false);

  // Eliminate variables with a constant-coefficient linear occurrence.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t e = 0; e < eqs.size() && !changed; ++e) {
      for (int k = 1; k <= vc && !changed; ++k) {
        if (is_eliminated[k] || eqs[e].degree_in(k) != 1) continue;
        Polynomial coeff = coefficient_in(eqs[e], k, 1);
        if (!coeff.is_constant()) continue;
        Elimination elim{k, coefficient_in(eqs[e], k, 0), coeff.constant_value()};
        eqs.erase(eqs.begin() + static_cast<std::ptrdiff_t>(e));
        std::vector<Polynomial> next;
        for (const Polynomial& p : eqs) {
          Polynomial s = substitute(p, k, -elim.numerator, elim.denominator);
          if (s.is_zero()) continue;
          if (s.is_constant()) return std::nullopt;  // inconsistent equalities
          next.push_back(std::move(s));
        }
        eqs = std::move(next);
        is_eliminated[k] = true;
        eliminated.push_back(std::move(elim));
        changed = true;
      }
    }
  }

  std::vector<int> free_vars;
  for (int k = 1; k <= vc; ++k) {
    if (!is_eliminated[k]) free_vars.push_back(k);
  }

  const std::vector<Rat>& values = candidate_values();
  int base = static_cast<int>(values.size());
  long tried = 0;

  std::vector<Rat> point(vc, Rat(0));
  std::vector<int> choice(free_vars.size(), 0);

  auto attempt = [&]() -> bool {
    for (std::size_t i = 0; i < free_vars.size(); ++i) point[free_vars[i] - 1] = values[choice[i]];
    // Back-substitute in reverse: each numerator only references variables
    // that are free or eliminated later.
    for (auto it = eliminated.rbegin(); it != eliminated.rend(); ++it) {
      point[it->var - 1] = -evaluate(it->numerator, point) / Rat(it->denominator);
    }
    for (const Polynomial& p : system.equalities) {
      if (evaluate(p, point) != 0) return false;
    }
    for (const Polynomial& p : system.inequalities) {
      if (evaluate(p, point) == 0) return false;
    }
    return true;
  };

  // Assignments ordered by total candidate index, so small witnesses come
  // first no matter how many variables there are.
  std::optional<std::vector<Rat>> found;
  auto descend = [&](auto&& self, std::size_t pos, int remaining) -> bool {
    if (tried >= options.budget) return true;  // stop: budget exhausted
    if (pos == free_vars.size()) {
      if (remaining != 0) return false;
      ++tried;
      if (attempt()) {
        found = point;
        return true;
      }
      return false;
    }
    int cap = std::min(remaining, base - 1);
    for (int v = 0; v <= cap; ++v) {
      choice[pos] = v;
      if (self(self, pos + 1, remaining - v)) return true;
    }
    return false;
  };

  int max_sum = (base - 1) * static_cast<int>(free_vars.size());
  for (int sum = 0; sum <= max_sum; ++sum) {
    if (descend(descend, 0, sum)) break;
    if (tried >= options.budget) break;
  }
  return found;
}

}  // namespace matrealize
