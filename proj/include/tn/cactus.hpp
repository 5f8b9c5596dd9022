#pragma once

#include <vector>

#include "tn/labelled_graph.hpp"

namespace tn {

// All embedded circles: loops, parallel pairs, and longer simple cycles.
// Each circle is reported as a sorted list of edge indices.
std::vector<std::vector<int>> embedded_circles(const LabelledGraph& g);

// True iff the graph is a tree of circles: exactly rank-many embedded
// circles, with every edge lying on exactly one of them.
bool is_cactus(const LabelledGraph& g);

// Every combinatorial type of cactus graph over the identity rose with at
// most the given number of vertices: circles carry unit labels, subdividing
// vertices arise from attaching one circle to the interior of another.
// Deduplicated up to isomorphism; sorted by vertex count, then encoding.
std::vector<LabelledGraph> enumerate_cactus_types(int rank, int max_vertices);

}  // namespace tn
