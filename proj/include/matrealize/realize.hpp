#pragma once

#include <optional>
#include <vector>

#include "matrealize/frame.hpp"
#include "matrealize/matroid.hpp"
#include "matrealize/poly.hpp"
#include "matrealize/rational.hpp"

namespace matrealize {

// Builds the d x m template for the given basis of the matroid: an identity
// block at the basis columns, zeros where swapping the i-th basis element
// for column j leaves no basis, ones on the normal frame of the non-basis
// block, and fresh variables (row-major) everywhere else.
TemplateMatrix fill_matrix(int d, int m, Mask basis, const Matroid& matroid);

// One minor per d-subset of columns: equalities from non-bases, inequalities
// from bases. Identically-zero equalities and constant nonzero inequalities
// are dropped; everything kept is reduced to its primitive part. Throws
// ContradictionDetected when a basis minor vanishes identically or a
// non-basis minor is a nonzero constant.
PolySystem generate_system(const TemplateMatrix& t, const Matroid& matroid);

struct ReductionResult {
  RationalMatrix G;              // invertible d x d
  std::vector<Rat> D;            // diagonal of the m x m column scaling
  RationalMatrix normalized;     // G * A * diag(D)
  Mask pivot_basis = 0;
};

// Normalizes a realization: exact elimination on the pivot-basis columns
// followed by the frame scaling, so that the result has an identity block at
// the basis columns and ones on the normal frame of the rest. The minor
// vanishing pattern is verified to match the input's.
ReductionResult reduce_realization(const RationalMatrix& a,
                                   const std::optional<Matroid>& matroid = std::nullopt);

// The matroid realized by the columns of a full-row-rank matrix.
Matroid matroid_of_matrix(const RationalMatrix& a);

// Checks conditions C1 (minors realize the matroid), C2 (identity block at
// the revlex-first basis) and C3 (normal-frame entries equal one).
bool satisfies_reduced_conditions(const RationalMatrix& normalized, const Matroid& matroid);

struct WitnessSearchOptions {
  long budget = 1'000'000;  // candidate assignments tried at most
};

// Best-effort search for a rational point satisfying every equality exactly
// and every inequality nonzero. Variables with a constant-coefficient linear
// occurrence in an equality are eliminated first; remaining free variables
// range over rationals with numerator and denominator in {-3,...,3}. Returns
// the full coordinate vector, or nothing when the budget runs out. Never
// returns a false witness.
std::optional<std::vector<Rat>> find_rational_point(const PolySystem& system,
                                                    const WitnessSearchOptions& options = {});

}  // namespace matrealize
