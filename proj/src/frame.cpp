#include "matrealize/frame.hpp"

#include <algorithm>

#include "matrealize/error.hpp"

namespace matrealize {

BoolMask BoolMask::of(const RationalMatrix& q) {
  BoolMask mask(q.rows(), q.cols());
  for (int i = 1; i <= q.rows(); ++i) {
    for (int j = 1; j <= q.cols(); ++j) {
      mask.set(i, j, q.at(i, j) != 0);
    }
  }
  return mask;
}

BoolMask BoolMask::without_row(int row) const {
  BoolMask out(rows - 1, cols);
  for (int i = 1, oi = 1; i <= rows; ++i) {
    if (i == row) continue;
    for (int j = 1; j <= cols; ++j) out.set(oi, j, at(i, j));
    ++oi;
  }
  return out;
}

BoolMask BoolMask::without_col(int col) const {
  BoolMask out(rows, cols - 1);
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1, oj = 1; j <= cols; ++j) {
      if (j == col) continue;
      out.set(i, oj++, at(i, j));
    }
  }
  return out;
}

BoardStages board_stages(const BoolMask& q) {
  BoardStages stages;
  stages.s0 = PatternBoard(q.rows, q.cols);
  for (int i = 1; i <= q.rows; ++i) {
    for (int j = 1; j <= q.cols; ++j) {
      stages.s0.at(i, j) = q.at(i, j) ? Cell::White : Cell::Black;
    }
  }

  stages.s1 = stages.s0;
  for (int j = 1; j <= q.cols; ++j) {
    for (int i = 1; i <= q.rows; ++i) {
      if (stages.s1.at(i, j) == Cell::White) {
        stages.s1.at(i, j) = Cell::Blue;
        break;
      }
    }
  }

  // A square colored blue is no longer white, so the row pass skips it.
  stages.s2 = stages.s1;
  for (int i = 1; i <= q.rows; ++i) {
    for (int j = 1; j <= q.cols; ++j) {
      if (stages.s2.at(i, j) == Cell::White) {
        stages.s2.at(i, j) = Cell::Red;
        break;
      }
    }
  }

  stages.final = stages.s2;
  for (Cell& cell : stages.final.cells) {
    if (cell == Cell::Blue || cell == Cell::Red) cell = Cell::Green;
  }
  return stages;
}

FrameResult compute_frame(const BoolMask& q) {
  BoardStages stages = board_stages(q);
  FrameResult out;
  out.board = stages.final;
  for (int i = 1; i <= q.rows; ++i) {
    for (int j = 1; j <= q.cols; ++j) {
      if (out.board.at(i, j) == Cell::Green) out.frame.emplace_back(i, j);
    }
  }
  return out;
}

FrameResult compute_frame(const RationalMatrix& q) {
  return compute_frame(BoolMask::of(q));
}

Line deletable_line(const BoolMask& q) {
  bool any_nonzero = false;
  for (std::uint8_t v : q.nonzero) any_nonzero |= (v != 0);
  if (!any_nonzero) fail(ErrorKind::AllZero, "mask has no nonzero entry");

  for (int i = 1; i <= q.rows; ++i) {
    bool nonzero = false;
    for (int j = 1; j <= q.cols; ++j) nonzero |= q.at(i, j);
    if (!nonzero) fail(ErrorKind::ZeroLinePresent, "row " + std::to_string(i) + " is all zero");
  }
  for (int j = 1; j <= q.cols; ++j) {
    bool nonzero = false;
    for (int i = 1; i <= q.rows; ++i) nonzero |= q.at(i, j);
    if (!nonzero) fail(ErrorKind::ZeroLinePresent, "column " + std::to_string(j) + " is all zero");
  }

  BoardStages stages = board_stages(q);

  // nu = last row carrying a blue square. Every line has a white square, so
  // every column has a blue one and nu is well defined.
  int nu = 0;
  for (int i = 1; i <= q.rows; ++i) {
    for (int j = 1; j <= q.cols; ++j) {
      if (stages.s1.at(i, j) == Cell::Blue) nu = i;
    }
  }

  if (nu < q.rows) return Line{Line::Kind::Row, nu + 1};

  // nu == rows: the first column whose blue square sits in that row.
  for (int j = 1; j <= q.cols; ++j) {
    if (stages.s1.at(q.rows, j) == Cell::Blue) return Line{Line::Kind::Col, j};
  }
  fail(ErrorKind::Internal, "no column attains the maximum blue row");
}

FrameScaling scale_to_frame(const RationalMatrix& q) {
  FrameScaling scaling;
  scaling.row_scale.assign(q.rows(), Rat(1));
  scaling.col_scale.assign(q.cols(), Rat(1));

  BoolMask mask = BoolMask::of(q);

  bool all_zero = true;
  for (std::uint8_t v : mask.nonzero) all_zero &= (v == 0);
  if (all_zero) return scaling;

  // Strip an all-zero line first: it carries no frame position, so its
  // scaler stays 1 and the rest is solved on the smaller matrix.
  for (int i = 1; i <= q.rows(); ++i) {
    bool nonzero = false;
    for (int j = 1; j <= q.cols(); ++j) nonzero |= mask.at(i, j);
    if (!nonzero) {
      FrameScaling sub = scale_to_frame(q.without_row(i));
      for (int r = 1, sr = 0; r <= q.rows(); ++r) {
        if (r == i) continue;
        scaling.row_scale[r - 1] = sub.row_scale[sr++];
      }
      scaling.col_scale = std::move(sub.col_scale);
      return scaling;
    }
  }
  for (int j = 1; j <= q.cols(); ++j) {
    bool nonzero = false;
    for (int i = 1; i <= q.rows(); ++i) nonzero |= mask.at(i, j);
    if (!nonzero) {
      FrameScaling sub = scale_to_frame(q.without_col(j));
      for (int c = 1, sc = 0; c <= q.cols(); ++c) {
        if (c == j) continue;
        scaling.col_scale[c - 1] = sub.col_scale[sc++];
      }
      scaling.row_scale = std::move(sub.row_scale);
      return scaling;
    }
  }

  Line line = deletable_line(mask);
  BoardStages stages = board_stages(mask);

  if (line.kind == Line::Kind::Row) {
    int i = line.index;
    int j = 0;
    for (int c = 1; c <= q.cols(); ++c) {
      if (stages.final.at(i, c) == Cell::Green) j = c;
    }
    FrameScaling sub = scale_to_frame(q.without_row(i));
    scaling.col_scale = sub.col_scale;
    for (int r = 1, sr = 0; r <= q.rows(); ++r) {
      if (r == i) continue;
      scaling.row_scale[r - 1] = sub.row_scale[sr++];
    }
    scaling.row_scale[i - 1] = Rat(1) / (sub.col_scale[j - 1] * q.at(i, j));
  } else {
    int j = line.index;
    int i = 0;
    for (int r = 1; r <= q.rows(); ++r) {
      if (stages.final.at(r, j) == Cell::Green) i = r;
    }
    FrameScaling sub = scale_to_frame(q.without_col(j));
    scaling.row_scale = sub.row_scale;
    for (int c = 1, sc = 0; c <= q.cols(); ++c) {
      if (c == j) continue;
      scaling.col_scale[c - 1] = sub.col_scale[sc++];
    }
    scaling.col_scale[j - 1] = Rat(1) / (sub.row_scale[i - 1] * q.at(i, j));
  }
  return scaling;
}

}  // namespace matrealize
