#pragma once

#include <vector>

#include "wonderkit/rational.hpp"

namespace wk {

/// Dense integer matrix, row-major.
struct ZMat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> data;

  ZMat() = default;
  ZMat(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, Integer(0)) {}
  static ZMat identity(std::size_t n);
  static ZMat from_rows(const std::vector<ZVec>& rows, std::size_t cols_if_empty = 0);

  Integer& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  ZVec row(std::size_t r) const;
};

ZMat operator*(const ZMat& a, const ZMat& b);

/// D = U * A * V with U, V unimodular and D diagonal, d_1 | d_2 | ... (all >= 0).
struct SmithForm {
  ZMat left;       // U
  ZMat diagonal;   // D
  ZMat right;      // V
  std::vector<Integer> invariant_factors;  // nonzero diagonal entries, in order
};

SmithForm smith_normal_form(const ZMat& a);

}  // namespace wk
