#include "tn/norms.hpp"

#include <algorithm>

#include "tn/error.hpp"

namespace tn {

VectorNorm vector_norm(const std::vector<Int>& v) {
  VectorNorm out;
  out.reserve(v.size());
  for (const Int& x : v) out.push_back(abs_int(x));
  return out;
}

MatrixNorm matrix_norm(const IntMatrix& m) {
  MatrixNorm out;
  out.reserve(static_cast<std::size_t>(m.rows()));
  for (int r = m.rows() - 1; r >= 0; --r) out.push_back(vector_norm(m.row(r)));
  return out;
}

IntMatrix standard_representative(const IntMatrix& m) {
  require(m.rows() == m.cols() && m.rows() >= 1, ErrorKind::invalid_input,
          "marking matrix must be square");
  Int d = m.det();
  require(d == 1 || d == -1, ErrorKind::invalid_input,
          "marking matrix must be unimodular");
  int n = m.rows();
  std::vector<std::pair<VectorNorm, std::vector<Int>>> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    auto v = m.row(r);
    rows.emplace_back(vector_norm(v), std::move(v));
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  for (int r = 0; r + 1 < n; ++r)
    require(rows[static_cast<std::size_t>(r)].first !=
                rows[static_cast<std::size_t>(r) + 1].first,
            ErrorKind::internal, "rows of a unimodular matrix share a norm");
  IntMatrix out(n, n);
  for (int r = 0; r < n; ++r) {
    auto& v = rows[static_cast<std::size_t>(r)].second;
    int sign = 0;
    for (const Int& x : v) {
      if (x != 0) { sign = x > 0 ? 1 : -1; break; }
    }
    require(sign != 0, ErrorKind::internal, "zero row in unimodular matrix");
    if (sign < 0)
      for (Int& x : v) x = -x;
    out.set_row(r, v);
  }
  return out;
}

RoseCoset::RoseCoset(const IntMatrix& any_representative)
    : rep_(standard_representative(any_representative)),
      norm_(matrix_norm(rep_)) {}

bool RoseCoset::is_identity() const {
  return rep_ == IntMatrix::identity(rep_.rows());
}

bool RoseCoset::operator<(const RoseCoset& rhs) const {
  if (norm_ != rhs.norm_) return norm_ < rhs.norm_;
  return rep_ < rhs.rep_;
}

RoseCoset right_action(const RoseCoset& rho, const IntMatrix& a) {
  Int d = a.det();
  require(d == 1 || d == -1, ErrorKind::invalid_input,
          "translation matrix must be unimodular");
  return RoseCoset(rho.rep() * a);
}

}  // namespace tn
