#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "matrealize/rational.hpp"

namespace matrealize {

enum class Cell : std::uint8_t { Black, White, Blue, Red, Green };

// Zero/nonzero occupancy of a matrix. 1-based accessors, like everything
// that talks about board positions.
struct BoolMask {
  int rows = 0, cols = 0;
  std::vector<std::uint8_t> nonzero;  // row-major

  BoolMask() = default;
  BoolMask(int r, int c) : rows(r), cols(c), nonzero(static_cast<std::size_t>(r) * c, 0) {}
  static BoolMask of(const RationalMatrix& q);

  bool at(int i, int j) const { return nonzero[static_cast<std::size_t>(i - 1) * cols + (j - 1)] != 0; }
  void set(int i, int j, bool value) { nonzero[static_cast<std::size_t>(i - 1) * cols + (j - 1)] = value ? 1 : 0; }
  BoolMask without_row(int i) const;
  BoolMask without_col(int j) const;
};

struct PatternBoard {
  int rows = 0, cols = 0;
  std::vector<Cell> cells;

  PatternBoard() = default;
  PatternBoard(int r, int c) : rows(r), cols(c), cells(static_cast<std::size_t>(r) * c, Cell::Black) {}

  Cell at(int i, int j) const { return cells[static_cast<std::size_t>(i - 1) * cols + (j - 1)]; }
  Cell& at(int i, int j) { return cells[static_cast<std::size_t>(i - 1) * cols + (j - 1)]; }

  bool operator==(const PatternBoard&) const = default;
};

// The boards produced by the three coloring passes:
//   s0    black/white occupancy,
//   s1    per column, the first white square from the top turns blue,
//   s2    per row, the first square still white from the left turns red,
//   final blue and red both turn green.
struct BoardStages {
  PatternBoard s0, s1, s2, final;
};

BoardStages board_stages(const BoolMask& q);

using FramePos = std::pair<int, int>;  // (row, col), 1-based

struct FrameResult {
  PatternBoard board;            // the final stage
  std::vector<FramePos> frame;   // green positions, sorted
};

FrameResult compute_frame(const BoolMask& q);
FrameResult compute_frame(const RationalMatrix& q);

struct Line {
  enum class Kind { Row, Col };
  Kind kind;
  int index;
  bool operator==(const Line&) const = default;
};

// A line of the final board with exactly one green square whose deletion
// commutes with the coloring passes. Requires at least one nonzero entry and
// no all-zero line.
Line deletable_line(const BoolMask& q);

struct FrameScaling {
  std::vector<Rat> row_scale;  // diagonal of D1
  std::vector<Rat> col_scale;  // diagonal of D2
};

// Nonsingular diagonal D1, D2 with every normal-frame entry of D1*Q*D2 equal
// to 1, built by peeling deletable lines.
FrameScaling scale_to_frame(const RationalMatrix& q);

}  // namespace matrealize
