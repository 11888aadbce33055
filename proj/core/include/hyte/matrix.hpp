#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hyte/errors.hpp"

namespace hyte {

// Dense row-major matrix of doubles. Deliberately minimal: the layer
// parameter shapes here are small enough that plain loops beat any
// dependency we could pull in.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0.0) {}
  Matrix(int rows, int cols, std::vector<double> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != static_cast<size_t>(rows_) * cols_)
      throw DimensionError("Matrix: data size does not match rows*cols");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  double at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
  std::span<const double> row(int r) const { return {data_.data() + static_cast<size_t>(r) * cols_, static_cast<size_t>(cols_)}; }
  std::span<double> row(int r) { return {data_.data() + static_cast<size_t>(r) * cols_, static_cast<size_t>(cols_)}; }
  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  // y = W^T x + b, where W is rows x cols, x has length rows, y length cols.
  std::vector<double> transpose_apply(std::span<const double> x, std::span<const double> b) const {
    if (static_cast<int>(x.size()) != rows_)
      throw DimensionError("transpose_apply: input length != rows");
    if (!b.empty() && static_cast<int>(b.size()) != cols_)
      throw DimensionError("transpose_apply: bias length != cols");
    std::vector<double> y(cols_, 0.0);
    for (int r = 0; r < rows_; ++r) {
      const double xr = x[r];
      const double* wrow = data_.data() + static_cast<size_t>(r) * cols_;
      for (int c = 0; c < cols_; ++c) y[c] += wrow[c] * xr;
    }
    if (!b.empty())
      for (int c = 0; c < cols_; ++c) y[c] += b[c];
    return y;
  }

 private:
  int rows_, cols_;
  std::vector<double> data_;
};

}  // namespace hyte
