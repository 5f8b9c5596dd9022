#pragma once

#include "tn/int_matrix.hpp"

namespace tn {

// Smith normal form: U * A * V = D with U, V unimodular and D diagonal with
// d_1 | d_2 | ... (nonnegative diagonal entries, zeros trailing).
struct SmithResult {
  IntMatrix d, u, v;
};

SmithResult smith_normal_form(const IntMatrix& a);

}  // namespace tn
