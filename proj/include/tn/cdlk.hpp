#pragma once

#include <vector>

#include "tn/cell_complex.hpp"
#include "tn/labelled_graph.hpp"
#include "tn/norms.hpp"

namespace tn {

struct CdlkResult {
  CellComplexModel model;
  std::vector<LabelledGraph> graphs;  // one representative per cell, same order
};

// All combinatorial blowup types of the rose in which every edge not
// labelled by a row is descending, one cell per isomorphism type, found by
// splitting vertices outward from the rose.  The face relation comes from
// forest collapses that keep at least one non-row edge; cell dimension is
// vertex count minus 2.
CdlkResult completely_descending_link(const RoseCoset& rho);

CellComplexModel completely_descending_complex(const RoseCoset& rho);

}  // namespace tn
