// Copyright 2026 The feds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FEDS_MATRIX_HPP_
#define FEDS_MATRIX_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace feds {

// Row-major 2D byte matrix. The unit of image-style processing and analysis.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(size_t rows, size_t cols, uint8_t fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(size_t rows, size_t cols, std::vector<uint8_t> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  size_t size() const { return data_.size(); }

  uint8_t& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
  uint8_t at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  uint8_t* row(size_t r) { return data_.data() + r * cols_; }
  const uint8_t* row(size_t r) const { return data_.data() + r * cols_; }

  std::vector<uint8_t>& bytes() { return data_; }
  const std::vector<uint8_t>& bytes() const { return data_; }
  std::span<const uint8_t> span() const { return {data_.data(), data_.size()}; }

  bool same_shape(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  size_t rows_;
  size_t cols_;
  std::vector<uint8_t> data_;
};

}  // namespace feds

#endif  // FEDS_MATRIX_HPP_
