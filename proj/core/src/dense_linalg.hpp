// Copyright 2026 The mgt Authors
// SPDX-License-Identifier: Apache-2.0
//
// Internal rectangular exact linear algebra over FieldElement.

#ifndef MGT_SRC_DENSE_LINALG_HPP
#define MGT_SRC_DENSE_LINALG_HPP

#include <vector>

#include "mgt/fields.hpp"

namespace mgt::detail {

// Row-major rectangular matrix of field elements.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<FieldElement> e;

  static Mat zero(const FieldDescriptor& f, int r, int c) {
    Mat m;
    m.rows = r;
    m.cols = c;
    m.e.assign(static_cast<std::size_t>(r) * c, FieldElement::zero(f));
    return m;
  }

  const FieldElement& at(int i, int j) const { return e[static_cast<std::size_t>(i) * cols + j]; }
  FieldElement& at(int i, int j) { return e[static_cast<std::size_t>(i) * cols + j]; }
};

inline Mat mat_mul(const Mat& a, const Mat& b) {
  Mat r = Mat::zero(a.e.front().field(), a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (a.at(i, k).is_zero_elem()) continue;
      for (int j = 0; j < b.cols; ++j) {
        if (b.at(k, j).is_zero_elem()) continue;
        r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
      }
    }
  return r;
}

// Reduced row echelon form in place; returns pivot column indices.
inline std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int pr = -1;
    for (int r = row; r < m.rows; ++r)
      if (!m.at(r, col).is_zero_elem()) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    if (pr != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(row, j));
    FieldElement inv = m.at(row, col).inverse();
    for (int j = 0; j < m.cols; ++j) m.at(row, j) = m.at(row, j) * inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col).is_zero_elem()) continue;
      FieldElement f = m.at(r, col);
      for (int j = 0; j < m.cols; ++j) m.at(r, j) = m.at(r, j) - f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Basis of the null space, as columns.
inline std::vector<std::vector<FieldElement>> kernel_basis(Mat m) {
  const FieldDescriptor f = m.e.empty() ? FieldDescriptor::rationals() : m.e.front().field();
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<std::vector<FieldElement>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<FieldElement> v(static_cast<std::size_t>(m.cols), FieldElement::zero(f));
    v[static_cast<std::size_t>(free)] = FieldElement::one(f);
    for (std::size_t pi = 0; pi < pivots.size(); ++pi)
      v[static_cast<std::size_t>(pivots[pi])] = -m.at(static_cast<int>(pi), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solves A x = b for one solution; throws if inconsistent.
inline std::vector<FieldElement> solve(const Mat& a, const std::vector<FieldElement>& b) {
  const FieldDescriptor f = a.e.front().field();
  Mat aug = Mat::zero(f, a.rows, a.cols + 1);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols) = b[static_cast<std::size_t>(i)];
  }
  std::vector<int> pivots = rref(aug);
  for (int p : pivots)
    if (p == a.cols) throw SingularMatrixError("inconsistent linear system");
  std::vector<FieldElement> x(static_cast<std::size_t>(a.cols), FieldElement::zero(f));
  for (std::size_t pi = 0; pi < pivots.size(); ++pi)
    x[static_cast<std::size_t>(pivots[pi])] = aug.at(static_cast<int>(pi), a.cols);
  return x;
}

// Extends the given independent columns to a basis of F^n with unit vectors.
inline Mat complete_basis(const FieldDescriptor& f, const std::vector<std::vector<FieldElement>>& cols,
                          int n) {
  Mat chosen = Mat::zero(f, n, n);
  int filled = 0;
  for (const auto& c : cols) {
    for (int i = 0; i < n; ++i) chosen.at(i, filled) = c[static_cast<std::size_t>(i)];
    ++filled;
  }
  for (int unit = 0; unit < n && filled < n; ++unit) {
    Mat probe = Mat::zero(f, n, filled + 1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < filled; ++j) probe.at(i, j) = chosen.at(i, j);
    probe.at(unit, filled) = FieldElement::one(f);
    Mat copy = probe;
    if (static_cast<int>(rref(copy).size()) == filled + 1) {
      for (int i = 0; i < n; ++i) chosen.at(i, filled) = probe.at(i, filled);
      ++filled;
    }
  }
  if (filled < n) throw SingularMatrixError("could not complete basis");
  return chosen;
}

}  // namespace mgt::detail

#endif  // MGT_SRC_DENSE_LINALG_HPP
