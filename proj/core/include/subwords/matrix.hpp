#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "subwords/words.hpp"

namespace subwords {

/// Dense matrix over arbitrary-precision integers. Row-major storage.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& lhs_ik = at(i, k);
        if (lhs_ik == 0) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
          out.at(i, j) += lhs_ik * rhs.at(k, j);
        }
      }
    }
    return out;
  }

  std::vector<Int> apply(const std::vector<Int>& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("matrix/vector shape mismatch");
    std::vector<Int> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Int acc(0);
      for (std::size_t j = 0; j < cols_; ++j) acc += at(i, j) * v[j];
      out[i] = std::move(acc);
    }
    return out;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Int> data_;
};

}  // namespace subwords
