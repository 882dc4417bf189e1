#include "matrealize/rational.hpp"

#include "matrealize/error.hpp"

namespace matrealize {

Rat parse_rational(const std::string& text) {
  if (text.empty()) fail(ErrorKind::ParseError, "empty rational literal");
  try {
    Rat value(text);
    value.canonicalize();
    if (value.get_den() == 0) fail(ErrorKind::ParseError, "zero denominator in '" + text + "'");
    return value;
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::ParseError, "bad rational literal '" + text + "'");
  }
}

std::string rational_to_string(const Rat& value) {
  return value.get_str();
}

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, Rat(0)) {}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix id(n, n);
  for (int i = 1; i <= n; ++i) id.at(i, i) = 1;
  return id;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) fail(ErrorKind::Internal, "matrix shape mismatch in product");
  RationalMatrix out(rows_, other.cols_);
  for (int i = 1; i <= rows_; ++i) {
    for (int k = 1; k <= cols_; ++k) {
      const Rat& lhs = at(i, k);
      if (lhs == 0) continue;
      for (int j = 1; j <= other.cols_; ++j) {
        out.at(i, j) += lhs * other.at(k, j);
      }
    }
  }
  return out;
}

RationalMatrix RationalMatrix::select_columns(Mask columns) const {
  std::vector<int> cols = subset_elements(columns);
  RationalMatrix out(rows_, static_cast<int>(cols.size()));
  for (int i = 1; i <= rows_; ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out.at(i, static_cast<int>(j) + 1) = at(i, cols[j]);
    }
  }
  return out;
}

RationalMatrix RationalMatrix::without_row(int row) const {
  RationalMatrix out(rows_ - 1, cols_);
  for (int i = 1, oi = 1; i <= rows_; ++i) {
    if (i == row) continue;
    for (int j = 1; j <= cols_; ++j) out.at(oi, j) = at(i, j);
    ++oi;
  }
  return out;
}

RationalMatrix RationalMatrix::without_col(int col) const {
  RationalMatrix out(rows_, cols_ - 1);
  for (int i = 1; i <= rows_; ++i) {
    for (int j = 1, oj = 1; j <= cols_; ++j) {
      if (j == col) continue;
      out.at(i, oj++) = at(i, j);
    }
  }
  return out;
}

Rat RationalMatrix::determinant() const {
  if (rows_ != cols_) fail(ErrorKind::Internal, "determinant of non-square matrix");
  RationalMatrix work = *this;
  int n = rows_;
  Rat det(1);
  for (int col = 1; col <= n; ++col) {
    int pivot = 0;
    for (int row = col; row <= n; ++row) {
      if (work.at(row, col) != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot == 0) return Rat(0);
    if (pivot != col) {
      for (int j = col; j <= n; ++j) std::swap(work.at(pivot, j), work.at(col, j));
      det = -det;
    }
    det *= work.at(col, col);
    for (int row = col + 1; row <= n; ++row) {
      if (work.at(row, col) == 0) continue;
      Rat factor = work.at(row, col) / work.at(col, col);
      for (int j = col; j <= n; ++j) work.at(row, j) -= factor * work.at(col, j);
    }
  }
  return det;
}

int RationalMatrix::rank() const {
  RationalMatrix work = *this;
  int rank = 0;
  int row = 1;
  for (int col = 1; col <= cols_ && row <= rows_; ++col) {
    int pivot = 0;
    for (int r = row; r <= rows_; ++r) {
      if (work.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == 0) continue;
    if (pivot != row) {
      for (int j = col; j <= cols_; ++j) std::swap(work.at(pivot, j), work.at(row, j));
    }
    for (int r = row + 1; r <= rows_; ++r) {
      if (work.at(r, col) == 0) continue;
      Rat factor = work.at(r, col) / work.at(row, col);
      for (int j = col; j <= cols_; ++j) work.at(r, j) -= factor * work.at(row, j);
    }
    ++rank;
    ++row;
  }
  return rank;
}

RationalMatrix RationalMatrix::inverse() const {
  if (rows_ != cols_) fail(ErrorKind::Internal, "inverse of non-square matrix");
  int n = rows_;
  RationalMatrix work = *this;
  RationalMatrix inv = identity(n);
  for (int col = 1; col <= n; ++col) {
    int pivot = 0;
    for (int row = col; row <= n; ++row) {
      if (work.at(row, col) != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot == 0) fail(ErrorKind::RankDeficient, "singular matrix has no inverse");
    if (pivot != col) {
      for (int j = 1; j <= n; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    Rat scale = Rat(1) / work.at(col, col);
    for (int j = 1; j <= n; ++j) {
      work.at(col, j) *= scale;
      inv.at(col, j) *= scale;
    }
    for (int row = 1; row <= n; ++row) {
      if (row == col || work.at(row, col) == 0) continue;
      Rat factor = work.at(row, col);
      for (int j = 1; j <= n; ++j) {
        work.at(row, j) -= factor * work.at(col, j);
        inv.at(row, j) -= factor * inv.at(col, j);
      }
    }
  }
  return inv;
}

}  // namespace matrealize
