#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace mutalg {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  long& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  long operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<long> row(std::size_t r) const;
  std::vector<long> column(std::size_t c) const;
  IntMatrix transposed() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<long> data_;
};

/// Rank over the rationals (exact elimination).
std::size_t rank(const IntMatrix& m);

/// Integer inverse of a square matrix with determinant +-1, else nullopt.
std::optional<IntMatrix> unimodular_inverse(const IntMatrix& m);

/// Stacks `bottom` under `top`; column counts must agree.
IntMatrix stack_rows(const IntMatrix& top, const IntMatrix& bottom);

/// Aligned text rendering, one row per line.
std::string format_matrix(const IntMatrix& m);

}  // namespace mutalg
