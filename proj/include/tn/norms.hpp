#pragma once

#include <vector>

#include "tn/int_matrix.hpp"

namespace tn {

// Norm of an integer vector: the entrywise absolute values, compared
// lexicographically.
using VectorNorm = std::vector<Int>;

VectorNorm vector_norm(const std::vector<Int>& v);

// Norm of a square matrix: row norms listed bottom row first, compared
// lexicographically. Lists the *smallest* row norm first because rows of a
// standard representative are sorted with the largest norm on top.
using MatrixNorm = std::vector<VectorNorm>;

MatrixNorm matrix_norm(const IntMatrix& m);

// Canonical representative of the coset of unimodular M under signed row
// permutations: rows sorted by strictly decreasing norm (largest on top),
// each row scaled so its first nonzero entry is positive. Rows of a
// unimodular matrix can never share a norm, so the sort is unambiguous.
IntMatrix standard_representative(const IntMatrix& m);

// A coset of roses: stored by its standard representative.
class RoseCoset {
 public:
  explicit RoseCoset(const IntMatrix& any_representative);

  const IntMatrix& rep() const { return rep_; }
  int rank() const { return rep_.rows(); }
  const MatrixNorm& norm() const { return norm_; }
  bool is_identity() const;

  bool operator==(const RoseCoset& rhs) const { return rep_ == rhs.rep_; }
  bool operator!=(const RoseCoset& rhs) const { return !(*this == rhs); }
  // Total order: by norm first, entries break ties between distinct cosets
  // of equal norm.
  bool operator<(const RoseCoset& rhs) const;

 private:
  IntMatrix rep_;
  MatrixNorm norm_;
};

// Right translation: the coset of M * A for unimodular A.
RoseCoset right_action(const RoseCoset& rho, const IntMatrix& a);

}  // namespace tn
