#include "tn/smith.hpp"

#include "tn/error.hpp"

namespace tn {

namespace {

void row_swap(IntMatrix& a, IntMatrix& u, int r1, int r2) {
  for (int c = 0; c < a.cols(); ++c) std::swap(a.at(r1, c), a.at(r2, c));
  for (int c = 0; c < u.cols(); ++c) std::swap(u.at(r1, c), u.at(r2, c));
}

void col_swap(IntMatrix& a, IntMatrix& v, int c1, int c2) {
  for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, c1), a.at(r, c2));
  for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, c1), v.at(r, c2));
}

// row r1 += q * row r2
void row_addmul(IntMatrix& a, IntMatrix& u, int r1, int r2, const Int& q) {
  for (int c = 0; c < a.cols(); ++c) a.at(r1, c) += q * a.at(r2, c);
  for (int c = 0; c < u.cols(); ++c) u.at(r1, c) += q * u.at(r2, c);
}

void col_addmul(IntMatrix& a, IntMatrix& v, int c1, int c2, const Int& q) {
  for (int r = 0; r < a.rows(); ++r) a.at(r, c1) += q * a.at(r, c2);
  for (int r = 0; r < v.rows(); ++r) v.at(r, c1) += q * v.at(r, c2);
}

void row_negate(IntMatrix& a, IntMatrix& u, int r) {
  for (int c = 0; c < a.cols(); ++c) a.at(r, c) = -a.at(r, c);
  for (int c = 0; c < u.cols(); ++c) u.at(r, c) = -u.at(r, c);
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& a_in) {
  IntMatrix a = a_in;
  int rows = a.rows(), cols = a.cols();
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  int t = 0;
  while (t < rows && t < cols) {
    // Pivot: nonzero entry of the trailing block with minimal |value|.
    int pr = -1, pc = -1;
    Int best = 0;
    for (int r = t; r < rows; ++r)
      for (int c = t; c < cols; ++c) {
        const Int& x = a.at(r, c);
        if (x == 0) continue;
        Int ax = abs_int(x);
        if (pr < 0 || ax < best) { pr = r; pc = c; best = ax; }
      }
    if (pr < 0) break;
    if (pr != t) row_swap(a, u, t, pr);
    if (pc != t) col_swap(a, v, t, pc);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int r = t + 1; r < rows; ++r) {
        if (a.at(r, t) == 0) continue;
        Int q = floor_div(a.at(r, t), a.at(t, t));
        row_addmul(a, u, r, t, -q);
        if (a.at(r, t) != 0) {
          // Remainder becomes the new, smaller pivot.
          row_swap(a, u, t, r);
          clean = false;
        }
      }
      for (int c = t + 1; c < cols; ++c) {
        if (a.at(t, c) == 0) continue;
        Int q = floor_div(a.at(t, c), a.at(t, t));
        col_addmul(a, v, c, t, -q);
        if (a.at(t, c) != 0) {
          col_swap(a, v, t, c);
          clean = false;
        }
      }
      if (!clean) continue;
      // Enforce divisibility of the trailing block by the pivot.
      for (int r = t + 1; r < rows && clean; ++r)
        for (int c = t + 1; c < cols && clean; ++c)
          if (a.at(r, c) % a.at(t, t) != 0) {
            row_addmul(a, u, t, r, Int(1));
            clean = false;
          }
    }
    if (a.at(t, t) < 0) row_negate(a, u, t);
    ++t;
  }

  Int du = u.det(), dv = v.det();
  require((du == 1 || du == -1) && (dv == 1 || dv == -1), ErrorKind::internal,
          "transform matrices must stay unimodular");
  return SmithResult{a, u, v};
}

}  // namespace tn
