#pragma once

#include <string>

#include "tn/labelled_graph.hpp"
#include "tn/rank2_tree.hpp"

namespace tn {

// Graphviz text for a labelled graph. Vertices and edges are put in
// canonical order first, so isomorphic inputs produce byte-identical
// output and the export is idempotent.
std::string graph_to_dot(const LabelledGraph& g);

// Graphviz text for the rank-2 star-adjacency tree: one node per coset,
// annotated with its two row slopes; core nodes drawn solid.
std::string rank2_tree_to_dot(const Rank2TreeReport& report);

}  // namespace tn
