#pragma once

#include <vector>

#include "tn/norms.hpp"

namespace tn {

// All rose cosets whose standard representative has every entry in
// [-bound, bound], in increasing coset order.
std::vector<RoseCoset> enumerate_roses(int rank, int bound);

}  // namespace tn
