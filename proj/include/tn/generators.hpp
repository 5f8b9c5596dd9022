#pragma once

#include <vector>

#include "tn/automorphism.hpp"

namespace tn {

// x_i -> x_k x_i x_k^{-1}, all other generators fixed. Requires i != k.
MarkedAutomorphism magnus_K(int rank, int i, int k);

// x_i -> x_i [x_k, x_l], all other generators fixed. Indices pairwise
// distinct; swapping k and l inverts the element.
MarkedAutomorphism magnus_K3(int rank, int i, int k, int l);

// delta12: x_1 -> x_1 x_2; omega1: x_1 -> x_1^{-1}; pi(i): swap x_i, x_{i+1}.
MarkedAutomorphism out_delta12(int rank);
MarkedAutomorphism out_omega1(int rank);
MarkedAutomorphism out_pi(int rank, int i);

// True iff phi acts trivially on first homology.
bool torelli_membership(const MarkedAutomorphism& phi);

// Checks, in the outer automorphism group, that conjugating the three-index
// move K[2,l,1] by delta12 equals the explicit eight-factor product of
// two- and three-index moves. Rank n >= 3, 3 <= l <= n.
bool verify_appendix_identity(int l, int n);

// Checks that x_i -> x_i [h x_k h^{-1}, h x_l h^{-1}] equals
// P^{-1} K[i,k,l] P, where h = x_{h1} ... x_{hp} (indices differing from i)
// and P conjugates every generator other than x_i by h.
// `h` is given by its letter indices; empty h degenerates to K[i,k,l].
bool verify_conjugation_formula(int n, int i, int k, int l,
                                const std::vector<int>& h);

// x_1, x_2 fixed; x_j -> [x_1,x_2]^{p_j} x_j [x_1,x_2]^{q_j} for j >= 3.
// p and q list the exponents for j = 3..n.
MarkedAutomorphism g_subgroup_element(int rank, const std::vector<long long>& p,
                                      const std::vector<long long>& q);

}  // namespace tn
