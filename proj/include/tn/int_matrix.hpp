#pragma once

#include <vector>

#include "tn/bigint.hpp"

namespace tn {

// Dense integer matrix with exact arithmetic.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}
  explicit IntMatrix(const std::vector<std::vector<Int>>& rows);

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Int& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  std::vector<Int> row(int r) const;
  void set_row(int r, const std::vector<Int>& v);

  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const = default;
  bool operator<(const IntMatrix& rhs) const;  // entrywise lexicographic

  // Exact determinant (square matrices), Bareiss fraction-free elimination.
  Int det() const;

  // Inverse of a matrix with determinant +-1; entries stay integral.
  IntMatrix inverse_unimodular() const;

  IntMatrix transpose() const;

  std::string str() const;

 private:
  int rows_, cols_;
  std::vector<Int> data_;
};

}  // namespace tn
