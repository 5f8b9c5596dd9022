#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tn/ideal_edge.hpp"
#include "tn/labelled_graph.hpp"
#include "tn/norms.hpp"

namespace tn {

// One coset per participating row: that row is replaced by the signed sum of
// the participating rows.  These are exactly the other roses whose stars
// contain the 1-edge blowup along iota.
std::vector<RoseCoset> replacement_cosets(const RoseCoset& rho,
                                          const IdealEdge& iota);

// Fast test: the signed sum must have smaller norm than the largest-norm
// participating row.
bool is_descending(const RoseCoset& rho, const IdealEdge& iota);

// Ground-truth variant: some replacement coset has smaller matrix norm.
bool is_descending_oracle(const RoseCoset& rho, const IdealEdge& iota);

// All descending classes at the rose, sorted.
std::vector<IdealEdge> descending_edges(const RoseCoset& rho);

// A descending class and the opposite flipping its largest-norm row never
// both descend; scans every descending class against that one flip.
ValidationReport forbidden_pair_check(const RoseCoset& rho);

// A descending 2-letter class found by scanning the first column that is not
// a signed identity column.  Empty exactly at the identity coset.
std::optional<IdealEdge> descending_witness(const RoseCoset& rho);

// A descending 2-letter class subordinate to a descending iota.  Tries the
// column-analysis candidates first, then falls back to scanning every
// 2-letter restriction; if none descends, the run aborts, since that would
// contradict what this library is built to check.
IdealEdge subordinate_2letter(const RoseCoset& rho, const IdealEdge& iota);

// Descending classes plus which pairs can be realized on one graph (one
// nested in the other, or two non-opposite 2-letter classes).
struct DescendingLinkModel {
  RoseCoset base;
  std::vector<IdealEdge> edges;
  std::vector<std::pair<int, int>> adjacency;  // index pairs, first < second
  bool connected = false;
};

DescendingLinkModel descending_link(const RoseCoset& rho);

bool descending_link_connected(const RoseCoset& rho);

}  // namespace tn
