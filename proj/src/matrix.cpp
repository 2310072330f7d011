#include "mutalg/matrix.hpp"

#include <algorithm>
#include <sstream>

#include <gmpxx.h>

#include "mutalg/error.hpp"

namespace mutalg {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("matrix row " + std::to_string(r) + " has the wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<long> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_)};
}

std::vector<long> IntMatrix::column(std::size_t c) const {
  std::vector<long> col(rows_);
  for (std::size_t r = 0; r < rows_; ++r) col[r] = (*this)(r, c);
  return col;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix dimension mismatch in product");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      long aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix r = a;
  for (long& v : r.data_) v = -v;
  return r;
}

namespace {

using RatRows = std::vector<std::vector<mpq_class>>;

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(RatRows& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    mpq_class inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      mpq_class factor = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const IntMatrix& m) {
  RatRows rows(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
  return row_reduce(rows, m.cols()).size();
}

std::optional<IntMatrix> unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  RatRows aug(n, std::vector<mpq_class>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = m(r, c);
    aug[r][n + r] = 1;
  }
  if (row_reduce(aug, n).size() != n) return std::nullopt;
  IntMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const mpq_class& v = aug[r][n + c];
      if (v.get_den() != 1 || !v.get_num().fits_slong_p()) return std::nullopt;
      inv(r, c) = v.get_num().get_si();
    }
  return inv;
}

IntMatrix stack_rows(const IntMatrix& top, const IntMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw Error("column mismatch when stacking matrices");
  IntMatrix m(top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) m(r, c) = top(r, c);
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) m(top.rows() + r, c) = bottom(r, c);
  return m;
}

std::string format_matrix(const IntMatrix& m) {
  std::size_t width = 1;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) width = std::max(width, std::to_string(m(r, c)).size());
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      std::string cell = std::to_string(m(r, c));
      out << (c == 0 ? "" : " ") << std::string(width - cell.size(), ' ') << cell;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace mutalg
