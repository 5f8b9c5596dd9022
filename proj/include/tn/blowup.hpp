#pragma once

#include "tn/ideal_edge.hpp"
#include "tn/labelled_graph.hpp"
#include "tn/norms.hpp"

namespace tn {

// Two-vertex graph realizing one ideal edge at the given rose: a new edge
// labelled with the signed sum of the participating rows, the participating
// loops rerouted between the two vertices according to their signs, and all
// other loops kept at the base vertex.  Every edge has length 1.
LabelledGraph blowup_1edge(const RoseCoset& rho, const IdealEdge& iota);

// Three-vertex graph realizing two ideal edges at once.  Supported pairs:
// one class properly subordinate to the other (either argument order), or
// two distinct two-letter classes that are not opposite.  Opposite classes
// are rejected as invalid input; equal classes and any other shape are
// reported as unsupported.
LabelledGraph simultaneous_blowup(const RoseCoset& rho, const IdealEdge& iota,
                                  const IdealEdge& iota_prime);

}  // namespace tn
