#pragma once

#include <vector>

#include "matrealize/subset.hpp"

namespace matrealize {

// A matroid given by its basis family. Construction validates the basis
// exchange axiom exhaustively, so no live Matroid value can violate it.
class Matroid {
 public:
  static Matroid create(int ground_size, int rank, std::vector<Mask> bases);
  static Matroid from_tuples(int ground_size, int rank,
                             const std::vector<std::vector<int>>& bases);

  int ground_size() const { return m_; }
  int rank() const { return d_; }

  // Bases in ascending mask order (= revlex order on d-subsets).
  const std::vector<Mask>& bases() const { return bases_; }
  bool is_basis(Mask s) const;

  // Bases as ascending element tuples, sorted tuple-lexicographically; the
  // form used by catalogs and reports.
  std::vector<std::vector<int>> bases_as_tuples() const;

  bool operator==(const Matroid&) const = default;

 private:
  Matroid() = default;

  int m_ = 0;
  int d_ = 0;
  std::vector<Mask> bases_;
};

// max over bases B of |S ∩ B|.
int subset_rank(const Matroid& matroid, Mask subset);

// Bases are the complements of the input's bases; an involution.
Matroid dual_matroid(const Matroid& matroid);

// perm[e-1] is the new label of element e; perm must be a permutation of 1..m.
Matroid relabel(const Matroid& matroid, const std::vector<int>& perm);

struct CanonicalForm {
  Matroid matroid;
  std::vector<int> permutation;  // a relabeling that maps the input onto it
};

// Lexicographically minimal relabeling over all m! permutations, measured on
// the tuple-lex-sorted list of basis tuples.
CanonicalForm canonicalize(const Matroid& matroid);
bool is_canonical(const Matroid& matroid);

// The revlex-minimal basis.
Mask first_basis_revlex(const Matroid& matroid);

// Catalog order: lexicographic on the tuple-lex-sorted basis lists, with a
// strict prefix sorting first.
bool matroid_less(const Matroid& a, const Matroid& b);

}  // namespace matrealize
