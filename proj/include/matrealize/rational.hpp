#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

#include "matrealize/subset.hpp"

namespace matrealize {

using Int = mpz_class;
using Rat = mpq_class;

Rat parse_rational(const std::string& text);  // "p/q" or integer literal
std::string rational_to_string(const Rat& value);

// Dense matrix over the rationals, 1-based accessors. All arithmetic is
// exact; nothing here ever touches floating point.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);
  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Rat& at(int i, int j) const { return data_[index(i, j)]; }
  Rat& at(int i, int j) { return data_[index(i, j)]; }

  RationalMatrix operator*(const RationalMatrix& other) const;

  // Submatrix of the columns named by a subset mask, in ascending order.
  RationalMatrix select_columns(Mask columns) const;
  RationalMatrix without_row(int i) const;
  RationalMatrix without_col(int j) const;

  Rat determinant() const;  // square matrices only
  int rank() const;
  RationalMatrix inverse() const;  // throws RankDeficient when singular

  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * cols_ + (j - 1);
  }

  int rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

}  // namespace matrealize
