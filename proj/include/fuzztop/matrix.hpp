#pragma once

#include <cassert>
#include <vector>

namespace fuzztop {

// Lattice elements are carrier indices; labels are decorative.
using Elem = int;

// Dense row-major matrix of carrier indices.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Elem> v;

  Matrix() = default;
  Matrix(int r, int c, Elem fill = 0) : rows(r), cols(c), v(r * c, fill) {}

  Elem& at(int r, int c) {
    assert(r >= 0 && r < rows && c >= 0 && c < cols);
    return v[static_cast<std::size_t>(r) * cols + c];
  }
  Elem at(int r, int c) const {
    assert(r >= 0 && r < rows && c >= 0 && c < cols);
    return v[static_cast<std::size_t>(r) * cols + c];
  }

  Matrix transposed() const {
    Matrix t(cols, rows);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.v == b.v;
  }
};

}  // namespace fuzztop
