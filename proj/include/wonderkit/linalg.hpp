#pragma once

#include <optional>
#include <vector>

#include "wonderkit/rational.hpp"

namespace wk {

/// Dense row-major matrix over Q.
class QMat {
 public:
  QMat() = default;
  QMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static QMat identity(std::size_t n);
  static QMat from_rows(const std::vector<QVec>& rows, std::size_t cols_if_empty = 0);
  static QMat from_columns(const std::vector<QVec>& cols, std::size_t rows_if_empty = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QVec row(std::size_t r) const;
  QVec col(std::size_t c) const;
  std::vector<QVec> row_list() const;
  std::vector<QVec> column_list() const;

  QMat transpose() const;

  friend QMat operator*(const QMat& a, const QMat& b);
  friend QVec operator*(const QMat& a, const QVec& v);
  friend bool operator==(const QMat& a, const QMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Lexicographic on (shape, entries); used for canonical ordering of group elements.
  friend bool operator<(const QMat& a, const QMat& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  QMat reduced;                     // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon rref(QMat m);
std::size_t rank(const QMat& m);
Rational determinant(QMat m);
std::optional<QMat> inverse(const QMat& m);

/// Some solution of `a x = b`, or nullopt when inconsistent.
std::optional<QVec> solve(const QMat& a, const QVec& b);

/// Basis of the right kernel {x : a x = 0}.
std::vector<QVec> kernel(const QMat& a);

/// Columns completing the (independent) columns of `a` to a basis of Q^rows,
/// chosen greedily among standard unit vectors.
std::vector<QVec> complement_columns(const QMat& a);

/// Reduced echelon basis of the row span; a canonical representative of a subspace.
QMat row_space_basis(const QMat& m);

std::string to_string(const QMat& m);

}  // namespace wk
