#include "tn/blowup.hpp"

#include <vector>

#include "tn/error.hpp"

namespace tn {
namespace {

constexpr int kP = 0, kQ = 1, kR = 2;

std::vector<Int> signed_sum(const IntMatrix& m, const std::vector<int>& coeff) {
  std::vector<Int> out(m.cols());
  for (int r = 0; r < m.rows(); ++r)
    if (coeff[r] != 0)
      for (int c = 0; c < m.cols(); ++c) out[c] += coeff[r] * m.at(r, c);
  return out;
}

Edge unit_edge(int src, int dst, std::vector<Int> label) {
  return Edge{src, dst, std::move(label), Rat{1}};
}

// Participating loop for a sign: +1 runs back to the base vertex, -1 away
// from it, 0 stays a loop at the base.
Edge routed_loop(int sign, int away, std::vector<Int> label) {
  if (sign > 0) return unit_edge(away, kP, std::move(label));
  if (sign < 0) return unit_edge(kP, away, std::move(label));
  return unit_edge(kP, kP, std::move(label));
}

LabelledGraph subordinate_blowup(const RoseCoset& rho, const IdealEdge& sup,
                                 const IdealEdge& sub) {
  const IntMatrix& m = rho.rep();
  std::vector<Edge> edges;
  edges.push_back(unit_edge(kP, kQ, signed_sum(m, sup.coefficients())));
  // The inner edge uses the outer class's signs on the common support; the
  // two differ at most by a global sign, which labels the same edge.
  std::vector<int> inner(sup.rank(), 0);
  for (int i : sub.support()) inner[i] = sup.coefficient(i);
  edges.push_back(unit_edge(kQ, kR, signed_sum(m, inner)));
  for (int i = 0; i < sup.rank(); ++i) {
    int away = sub.coefficient(i) != 0 ? kR : kQ;
    int sign = sub.coefficient(i) != 0 ? inner[i] : sup.coefficient(i);
    edges.push_back(routed_loop(sign, away, m.row(i)));
  }
  return LabelledGraph(rho.rank(), 3, std::move(edges));
}

LabelledGraph shared_letter_blowup(const RoseCoset& rho, const IdealEdge& a,
                                   const IdealEdge& b, int shared) {
  const IntMatrix& m = rho.rep();
  // Scale each class so the shared letter carries +1; classes are only
  // defined up to sign, so this is harmless.
  std::vector<int> ka(a.rank()), kb(b.rank());
  for (int i = 0; i < a.rank(); ++i) {
    ka[i] = a.coefficient(i) * a.coefficient(shared);
    kb[i] = b.coefficient(i) * b.coefficient(shared);
  }
  int ia = -1, jb = -1;
  for (int i = 0; i < a.rank(); ++i) {
    if (i != shared && ka[i] != 0) ia = i;
    if (i != shared && kb[i] != 0) jb = i;
  }

  std::vector<Edge> edges;
  std::vector<Int> la = m.row(ia), lb = m.row(jb);
  for (int c = 0; c < m.cols(); ++c) {
    la[c] = ka[ia] * la[c] + m.at(shared, c);
    lb[c] = m.at(shared, c) + kb[jb] * lb[c];
  }
  edges.push_back(unit_edge(kP, kQ, std::move(la)));
  edges.push_back(unit_edge(kR, kP, std::move(lb)));
  for (int i = 0; i < a.rank(); ++i) {
    if (i == shared)
      edges.push_back(unit_edge(kQ, kR, m.row(i)));
    else if (i == ia)
      edges.push_back(ka[i] > 0 ? unit_edge(kQ, kP, m.row(i))
                                : unit_edge(kP, kQ, m.row(i)));
    else if (i == jb)
      edges.push_back(kb[i] > 0 ? unit_edge(kP, kR, m.row(i))
                                : unit_edge(kR, kP, m.row(i)));
    else
      edges.push_back(unit_edge(kP, kP, m.row(i)));
  }
  return LabelledGraph(rho.rank(), 3, std::move(edges));
}

LabelledGraph disjoint_blowup(const RoseCoset& rho, const IdealEdge& a,
                              const IdealEdge& b) {
  const IntMatrix& m = rho.rep();
  std::vector<Edge> edges;
  edges.push_back(unit_edge(kP, kQ, signed_sum(m, a.coefficients())));
  edges.push_back(unit_edge(kP, kR, signed_sum(m, b.coefficients())));
  for (int i = 0; i < a.rank(); ++i) {
    if (a.coefficient(i) != 0)
      edges.push_back(routed_loop(a.coefficient(i), kQ, m.row(i)));
    else
      edges.push_back(routed_loop(b.coefficient(i), kR, m.row(i)));
  }
  return LabelledGraph(rho.rank(), 3, std::move(edges));
}

}  // namespace

LabelledGraph blowup_1edge(const RoseCoset& rho, const IdealEdge& iota) {
  require(rho.rank() == iota.rank(), ErrorKind::invalid_input,
          "ideal edge rank must match the rose");
  const IntMatrix& m = rho.rep();
  std::vector<Edge> edges;
  edges.push_back(unit_edge(kP, kQ, signed_sum(m, iota.coefficients())));
  for (int i = 0; i < iota.rank(); ++i)
    edges.push_back(routed_loop(iota.coefficient(i), kQ, m.row(i)));
  return LabelledGraph(rho.rank(), 2, std::move(edges));
}

LabelledGraph simultaneous_blowup(const RoseCoset& rho, const IdealEdge& iota,
                                  const IdealEdge& iota_prime) {
  require(rho.rank() == iota.rank() && rho.rank() == iota_prime.rank(),
          ErrorKind::invalid_input, "ideal edge rank must match the rose");
  require(!are_opposite(iota, iota_prime), ErrorKind::invalid_input,
          "opposite ideal edges are never realized simultaneously");
  require(iota != iota_prime, ErrorKind::unsupported,
          "no simultaneous template for a class paired with itself");

  if (is_subordinate(iota_prime, iota))
    return subordinate_blowup(rho, iota, iota_prime);
  if (is_subordinate(iota, iota_prime))
    return subordinate_blowup(rho, iota_prime, iota);

  if (iota.is_two_letter() && iota_prime.is_two_letter()) {
    std::vector<int> sa = iota.support(), sb = iota_prime.support();
    int shared = -1;
    for (int i : sa)
      if (iota_prime.coefficient(i) != 0) shared = i;
    if (shared < 0) return disjoint_blowup(rho, iota, iota_prime);
    return shared_letter_blowup(rho, iota, iota_prime, shared);
  }

  fail(ErrorKind::unsupported,
       "simultaneous blowup supports nested classes or two 2-letter classes "
       "only");
}

}  // namespace tn
