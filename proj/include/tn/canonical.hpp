#pragma once

#include <string>

#include "tn/labelled_graph.hpp"

namespace tn {

// Total encoding of a labelled graph: two graphs encode equally iff some
// vertex bijection matches their edges, where an edge may be reversed if its
// label is negated at the same time and lengths must agree exactly.
// Exhaustive over vertex bijections, so the vertex count is capped.
std::string canonical_form(const LabelledGraph& g);

// The same graph with vertices renumbered by the optimal bijection and the
// edge list sorted; isomorphic inputs give equal outputs, and relabelling
// is idempotent.
LabelledGraph canonical_relabel(const LabelledGraph& g);

}  // namespace tn
