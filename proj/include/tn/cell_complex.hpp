#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tn/bigint.hpp"

namespace tn {

// Combinatorial cell complex: cells are named by canonical graph encodings,
// the face relation lists every proper iterated face, so it is transitively
// closed as stored.
struct CellComplexModel {
  std::vector<std::string> cells;
  std::vector<int> dims;
  std::vector<std::pair<int, int>> faces;  // (cell, proper face)
};

struct HomologyGroup {
  int rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1
};

// Integer homology of the order complex of the face poset: simplices are
// strict chains of cells, boundaries carry alternating signs, and ranks and
// torsion come out of Smith normal forms of the boundary matrices.
std::vector<HomologyGroup> homology(const CellComplexModel& x);

}  // namespace tn
