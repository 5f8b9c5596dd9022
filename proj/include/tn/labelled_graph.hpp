#pragma once

#include <string>
#include <vector>

#include "tn/bigint.hpp"
#include "tn/norms.hpp"

namespace tn {

// One oriented edge.  Reversing orientation and negating the label gives the
// same underlying point, so consumers must treat (src,dst,label) and
// (dst,src,-label) as equal; canonical_form() does this normalization.
struct Edge {
  int src = 0;
  int dst = 0;
  std::vector<Int> label;
  Rat length{1};
  bool operator==(const Edge&) const = default;
};

// A finite connected multigraph with integer label vectors on oriented edges
// and exact rational edge lengths in (0,1].  Vertices are 0..V-1.
class LabelledGraph {
 public:
  LabelledGraph(int rank, int num_vertices, std::vector<Edge> edges);

  int rank() const { return rank_; }
  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_[i]; }

  int valence(int v) const;  // loops count twice
  std::string str() const;

  bool operator==(const LabelledGraph&) const = default;

 private:
  int rank_;
  int num_vertices_;
  std::vector<Edge> edges_;
};

std::string label_str(const std::vector<Int>& label);  // "(1,0,-1)"

struct ValidationReport {
  bool pass = true;
  std::string message;  // first violated condition, with a witness
};

// Checks, in order: connectivity, first-homology rank, minimum valence 3,
// label flow balance at each vertex, absence of separating edges, and the
// rule that two edges sharing a label up to sign must jointly disconnect the
// graph when their interiors are removed.
ValidationReport validate(const LabelledGraph& g);

// True when the edge subset contains no cycle (loops included).
bool is_forest(const LabelledGraph& g, const std::vector<int>& edge_indices);

// Quotient by a forest of edges.  Surviving edges keep labels and lengths;
// vertices are renumbered in increasing order of their smallest member.
LabelledGraph collapse(const LabelledGraph& g,
                       const std::vector<int>& forest_edges);

// All cosets reachable by collapsing a maximal forest, in every way.
// Requires every edge length to be exactly 1.
std::vector<RoseCoset> roses_whose_star_contains(const LabelledGraph& g);

// True iff every row of the coset labels some length-1 edge up to sign.
bool in_star(const LabelledGraph& g, const RoseCoset& rho);

// True iff some length-1 edge carries a label that is not a row up to sign.
// Requires in_star(g, rho).
bool in_frontier(const LabelledGraph& g, const RoseCoset& rho);

}  // namespace tn
