#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace zmlhash {

// Dense row-major matrix of 64-bit floats. All training math runs on this.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);

  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<double>& data() noexcept { return data_; }
  const std::vector<double>& data() const noexcept { return data_; }

  bool all_finite() const noexcept;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// a (r x k) * b (k x c)
Matrix matmul(const Matrix& a, const Matrix& b);

// a (r x k) * b (c x k) transposed; used for score = embeddings * word_vectors^T
Matrix matmul_nt(const Matrix& a, const Matrix& b);

// a (k x r) transposed * b (k x c); used for weight gradients x^T * delta
Matrix matmul_tn(const Matrix& a, const Matrix& b);

std::vector<double> column_sums(const Matrix& m);

}  // namespace zmlhash
