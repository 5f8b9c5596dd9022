#include "tn/int_matrix.hpp"

#include <sstream>

#include "tn/error.hpp"

namespace tn {

IntMatrix::IntMatrix(const std::vector<std::vector<Int>>& rows)
    : rows_(static_cast<int>(rows.size())),
      cols_(rows.empty() ? 0 : static_cast<int>(rows[0].size())) {
  data_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    require(static_cast<int>(r.size()) == cols_, ErrorKind::invalid_input,
            "ragged matrix rows");
    for (const auto& v : r) data_.push_back(v);
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<Int> IntMatrix::row(int r) const {
  std::vector<Int> out(static_cast<std::size_t>(cols_));
  for (int c = 0; c < cols_; ++c) out[static_cast<std::size_t>(c)] = at(r, c);
  return out;
}

void IntMatrix::set_row(int r, const std::vector<Int>& v) {
  require(static_cast<int>(v.size()) == cols_, ErrorKind::invalid_input,
          "row length mismatch");
  for (int c = 0; c < cols_; ++c) at(r, c) = v[static_cast<std::size_t>(c)];
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  require(cols_ == rhs.rows_, ErrorKind::invalid_input,
          "dimension mismatch in matrix product");
  IntMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
    }
  return out;
}

bool IntMatrix::operator<(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_) return rows_ < rhs.rows_;
  if (cols_ != rhs.cols_) return cols_ < rhs.cols_;
  return data_ < rhs.data_;
}

Int IntMatrix::det() const {
  require(rows_ == cols_, ErrorKind::invalid_input, "det of non-square matrix");
  int n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(p, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

IntMatrix IntMatrix::inverse_unimodular() const {
  Int d = det();
  require(d == 1 || d == -1, ErrorKind::invalid_input,
          "matrix is not unimodular");
  int n = rows_;
  // Gauss-Jordan over the rationals would do; with det +-1 we can stay
  // integral via the adjugate. Cofactor expansion is fine at these sizes.
  IntMatrix adj(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(rr, cc) = at(r, c);
          ++cc;
        }
        ++rr;
      }
      Int cof = minor.det();
      if ((i + j) % 2 == 1) cof = -cof;
      adj.at(j, i) = cof;
    }
  if (d == -1)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) adj.at(i, j) = -adj.at(i, j);
  return adj;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << '[';
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << at(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace tn
