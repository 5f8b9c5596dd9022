#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "tn/bigint.hpp"
#include "tn/labelled_graph.hpp"
#include "tn/rose_enum.hpp"

namespace tn {

// A point on the integer grid U = (R x Z) u (Z x R).
struct GridPoint {
  Rat x;
  Rat y;
  bool operator==(const GridPoint&) const = default;
};

// Endpoints of one connecting edge: the edge runs from zp's image to z's
// image, and the marking cycle closes up through a grid path from z to zp.
struct PointPair {
  GridPoint z;
  GridPoint zp;
  bool operator==(const PointPair&) const = default;
};

// A configuration of rank-2 circle points: one pair per extra letter.
struct ToyConfiguration {
  int rank = 3;                  // >= 3; pairs.size() == rank - 2
  std::vector<PointPair> pairs;  // pair k corresponds to letter k + 3
};

// A torus of configurations: z circles the lattice point (0,0), zp circles
// (p,q) (after translating the pair).
struct TorusClass {
  int p = 0;
  int q = 0;
  int rank = 3;
};

// Which grid path closes the marking cycle. Labels do not depend on the
// choice; two rules exist so tests can confirm that.
enum class PathRule { horizontal_first, vertical_first };

bool is_normalized(const ToyConfiguration& c);

// Translate each pair by an integer vector putting z on the boundary of the
// fundamental square [0,1)^2.
ToyConfiguration normalized(const ToyConfiguration& c);

// The marked graph of a configuration: both circles subdivided at the point
// images, one unit edge per pair, labels from signed circle traversals of
// the closing paths.
LabelledGraph config_to_graph(const ToyConfiguration& c,
                              PathRule rule = PathRule::horizontal_first);

// The norm-maximal rose whose star meets the torus: connecting-edge columns
// (p', q', e_i) with p' = p+1 for p >= 0 and p-1 otherwise, likewise q'.
RoseCoset max_norm_rose(const TorusClass& t);

// Combinatorial cell structure of one torus of configurations: four germ
// arcs per circling point, so 16 square cells, 32 edge cells, 16 corners.
struct TorusCells {
  TorusClass cls;
  std::vector<std::string> cell_encodings;    // 16, indexed germ(z)*4+germ(zp)
  std::vector<LabelledGraph> cell_graphs;     // representatives, same order
  std::vector<std::array<int, 4>> cell_faces; // per cell, four edge ids in 0..31
  std::vector<std::string> edge_encodings;    // 32 degenerate representatives
  int vertex_count = 16;
  bool closed_surface = false;  // every edge lies in exactly two cells
  int euler_characteristic = 0;
};

TorusCells z_pq_cells(const TorusClass& t);

// The cells of the torus meeting the descending link of its maximal rose:
// an 8-arc circle where one point sits at distance 1/2 along its germ.
struct SphereReport {
  TorusClass cls;
  RoseCoset rose;
  std::vector<std::string> arc_cells;    // 6, cyclic order
  std::vector<std::string> point_cells;  // 6, point k joins arcs k-1 and k
  bool single_circle = false;
  bool completely_descending = false;  // no cell edge realizes an ascent
  bool loops_meet_once = false;  // first two marking circles share one vertex
  bool pass = false;
};

SphereReport sphere_intersection(const TorusClass& t);

// Certified count of independent torus classes over a window of (p,q)
// pairs: maximal roses pairwise distinct plus per-quadrant circle
// certificates. The window must contain (0,0).
int toy_homology_rank(int rank, const std::vector<std::pair<int, int>>& window);

}  // namespace tn
