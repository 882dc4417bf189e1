#include "matrealize/matroid.hpp"

#include <algorithm>
#include <numeric>

#include "matrealize/error.hpp"

namespace matrealize {

namespace {

// Lexicographic comparison of two families, both sorted by tuple_less.
bool family_tuple_lex_less(const std::vector<Mask>& a, const std::vector<Mask>& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return tuple_less(a[i], b[i]);
  }
  return a.size() < b.size();
}

Mask apply_perm(Mask s, const std::vector<int>& perm) {
  Mask out = 0;
  while (s != 0) {
    int e = std::countr_zero(s) + 1;
    out = subset_add(out, perm[e - 1]);
    s &= s - 1;
  }
  return out;
}

}  // namespace

Matroid Matroid::create(int ground_size, int rank, std::vector<Mask> bases) {
  if (ground_size < 0) fail(ErrorKind::OutOfRange, "negative ground set size");
  if (rank < 0 || rank > ground_size) {
    fail(ErrorKind::OutOfRange, "rank must satisfy 0 <= d <= m");
  }
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  if (bases.empty()) fail(ErrorKind::EmptyBasisFamily, "a matroid needs at least one basis");

  Mask ground = full_set(ground_size);
  for (Mask b : bases) {
    if ((b & ~ground) != 0) {
      fail(ErrorKind::WrongCardinality,
           "basis " + subset_to_string(b) + " uses elements outside {1,...," +
               std::to_string(ground_size) + "}");
    }
    if (subset_size(b) != rank) {
      fail(ErrorKind::WrongCardinality,
           "basis " + subset_to_string(b) + " does not have " + std::to_string(rank) +
               " elements");
    }
  }

  // Basis exchange, checked exhaustively.
  for (Mask b1 : bases) {
    for (Mask b2 : bases) {
      Mask only1 = b1 & ~b2;
      Mask only2 = b2 & ~b1;
      for (Mask xs = only1; xs != 0; xs &= xs - 1) {
        int x = std::countr_zero(xs) + 1;
        bool repaired = false;
        for (Mask ys = only2; ys != 0; ys &= ys - 1) {
          int y = std::countr_zero(ys) + 1;
          Mask candidate = subset_add(subset_remove(b1, x), y);
          if (std::binary_search(bases.begin(), bases.end(), candidate)) {
            repaired = true;
            break;
          }
        }
        if (!repaired) {
          fail(ErrorKind::ExchangeViolation,
               "B1=" + subset_to_string(b1) + ", B2=" + subset_to_string(b2) +
                   ", x=" + std::to_string(x) + " has no exchange partner");
        }
      }
    }
  }

  Matroid matroid;
  matroid.m_ = ground_size;
  matroid.d_ = rank;
  matroid.bases_ = std::move(bases);
  return matroid;
}

Matroid Matroid::from_tuples(int ground_size, int rank,
                             const std::vector<std::vector<int>>& bases) {
  std::vector<Mask> masks;
  masks.reserve(bases.size());
  for (const auto& tuple : bases) {
    for (int e : tuple) {
      if (e < 1 || e > ground_size) {
        fail(ErrorKind::WrongCardinality,
             "element " + std::to_string(e) + " outside {1,...," +
                 std::to_string(ground_size) + "}");
      }
    }
    masks.push_back(subset_from_elements(tuple));
  }
  return create(ground_size, rank, std::move(masks));
}

bool Matroid::is_basis(Mask s) const {
  return std::binary_search(bases_.begin(), bases_.end(), s);
}

std::vector<std::vector<int>> Matroid::bases_as_tuples() const {
  std::vector<Mask> sorted = bases_;
  std::sort(sorted.begin(), sorted.end(), tuple_less);
  std::vector<std::vector<int>> out;
  out.reserve(sorted.size());
  for (Mask b : sorted) out.push_back(subset_elements(b));
  return out;
}

int subset_rank(const Matroid& matroid, Mask subset) {
  if ((subset & ~full_set(matroid.ground_size())) != 0) {
    fail(ErrorKind::OutOfRange, "subset " + subset_to_string(subset) + " not within the ground set");
  }
  int best = 0;
  for (Mask b : matroid.bases()) {
    best = std::max(best, subset_size(subset & b));
  }
  return best;
}

Matroid dual_matroid(const Matroid& matroid) {
  Mask ground = full_set(matroid.ground_size());
  std::vector<Mask> complements;
  complements.reserve(matroid.bases().size());
  for (Mask b : matroid.bases()) complements.push_back(ground & ~b);
  return Matroid::create(matroid.ground_size(), matroid.ground_size() - matroid.rank(),
                         std::move(complements));
}

Matroid relabel(const Matroid& matroid, const std::vector<int>& perm) {
  int m = matroid.ground_size();
  if (static_cast<int>(perm.size()) != m) {
    fail(ErrorKind::NotAPermutation, "permutation has wrong length");
  }
  Mask seen = 0;
  for (int v : perm) {
    if (v < 1 || v > m || subset_contains(seen, v)) {
      fail(ErrorKind::NotAPermutation, "not a permutation of {1,...," + std::to_string(m) + "}");
    }
    seen = subset_add(seen, v);
  }
  std::vector<Mask> mapped;
  mapped.reserve(matroid.bases().size());
  for (Mask b : matroid.bases()) mapped.push_back(apply_perm(b, perm));
  return Matroid::create(m, matroid.rank(), std::move(mapped));
}

CanonicalForm canonicalize(const Matroid& matroid) {
  int m = matroid.ground_size();
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 1);

  std::vector<Mask> best;
  std::vector<int> best_perm;
  std::vector<Mask> work(matroid.bases().size());
  do {
    for (std::size_t i = 0; i < work.size(); ++i) {
      work[i] = apply_perm(matroid.bases()[i], perm);
    }
    std::sort(work.begin(), work.end(), tuple_less);
    if (best.empty() || family_tuple_lex_less(work, best)) {
      best = work;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  return CanonicalForm{Matroid::create(m, matroid.rank(), best), std::move(best_perm)};
}

bool is_canonical(const Matroid& matroid) {
  return canonicalize(matroid).matroid == matroid;
}

Mask first_basis_revlex(const Matroid& matroid) {
  // bases() is in ascending mask order, which is the revlex order.
  return matroid.bases().front();
}

bool matroid_less(const Matroid& a, const Matroid& b) {
  std::vector<Mask> sa = a.bases();
  std::vector<Mask> sb = b.bases();
  std::sort(sa.begin(), sa.end(), tuple_less);
  std::sort(sb.begin(), sb.end(), tuple_less);
  return family_tuple_lex_less(sa, sb);
}

}  // namespace matrealize
