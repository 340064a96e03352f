#include "wonderkit/smith.hpp"

#include "wonderkit/errors.hpp"

namespace wk {

ZMat ZMat::identity(std::size_t n) {
  ZMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ZMat ZMat::from_rows(const std::vector<ZVec>& rows, std::size_t cols_if_empty) {
  const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  ZMat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidInput("ragged integer matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

ZVec ZMat::row(std::size_t r) const {
  return ZVec(data.begin() + static_cast<std::ptrdiff_t>(r * cols),
              data.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols));
}

ZMat operator*(const ZMat& a, const ZMat& b) {
  if (a.cols != b.rows) throw InvalidInput("integer matrix shape mismatch");
  ZMat p(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

namespace {

void swap_rows(ZMat& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(a, j), m(b, j));
}
void swap_cols(ZMat& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows; ++i) std::swap(m(i, a), m(i, b));
}
// row[target] -= f * row[source]
void add_row(ZMat& m, std::size_t target, std::size_t source, const Integer& f) {
  for (std::size_t j = 0; j < m.cols; ++j) m(target, j) -= f * m(source, j);
}
void add_col(ZMat& m, std::size_t target, std::size_t source, const Integer& f) {
  for (std::size_t i = 0; i < m.rows; ++i) m(i, target) -= f * m(i, source);
}
void negate_row(ZMat& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols; ++j) m(r, j) = -m(r, j);
}

}  // namespace

SmithForm smith_normal_form(const ZMat& a) {
  ZMat d = a;
  ZMat u = ZMat::identity(a.rows);
  ZMat v = ZMat::identity(a.cols);
  const std::size_t steps = std::min(a.rows, a.cols);

  for (std::size_t t = 0; t < steps; ++t) {
    // pick the nonzero entry of least magnitude in the trailing block
    bool found = false;
    std::size_t pr = t, pc = t;
    for (std::size_t i = t; i < d.rows; ++i)
      for (std::size_t j = t; j < d.cols; ++j)
        if (d(i, j) != 0 && (!found || abs(d(i, j)) < abs(d(pr, pc)))) {
          found = true;
          pr = i;
          pc = j;
        }
    if (!found) break;

    for (;;) {
      swap_rows(d, t, pr);
      swap_rows(u, t, pr);
      swap_cols(d, t, pc);
      swap_cols(v, t, pc);

      bool dirty = false;
      for (std::size_t i = t + 1; i < d.rows; ++i) {
        if (d(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        add_row(d, i, t, q);
        add_row(u, i, t, q);
        if (d(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < d.cols; ++j) {
        if (d(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        add_col(d, j, t, q);
        add_col(v, j, t, q);
        if (d(t, j) != 0) dirty = true;
      }
      if (!dirty) {
        // enforce divisibility of the trailing block by the pivot
        bool divides = true;
        for (std::size_t i = t + 1; i < d.rows && divides; ++i)
          for (std::size_t j = t + 1; j < d.cols; ++j)
            if (d(i, j) % d(t, t) != 0) {
              add_row(d, t, i, Integer(-1));
              add_row(u, t, i, Integer(-1));
              divides = false;
              break;
            }
        if (divides) break;
      }
      // re-select the smallest entry in row t / column t
      pr = t;
      pc = t;
      for (std::size_t i = t; i < d.rows; ++i)
        if (d(i, t) != 0 && abs(d(i, t)) < abs(d(pr, pc))) pr = i, pc = t;
      for (std::size_t j = t; j < d.cols; ++j)
        if (d(t, j) != 0 && abs(d(t, j)) < abs(d(pr, pc))) pr = t, pc = j;
    }
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
  }

  SmithForm out{u, d, v, {}};
  for (std::size_t t = 0; t < steps; ++t)
    if (d(t, t) != 0) out.invariant_factors.push_back(d(t, t));
  return out;
}

}  // namespace wk
