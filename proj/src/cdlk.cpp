#include "tn/cdlk.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <tuple>

#include "tn/canonical.hpp"
#include "tn/descending.hpp"
#include "tn/error.hpp"
#include "tn/ideal_edge.hpp"

namespace tn {
namespace {

// Coefficients of a label in the row basis; entries must stay in {-1,0,1}
// for any graph in the star, so anything larger is a hard failure.
std::vector<int> row_coefficients(const std::vector<Int>& label,
                                  const IntMatrix& inverse) {
  std::vector<int> k(inverse.cols(), 0);
  for (int j = 0; j < inverse.cols(); ++j) {
    Int sum = 0;
    for (int c = 0; c < inverse.rows(); ++c) sum += label[c] * inverse.at(c, j);
    require(sum >= -1 && sum <= 1, ErrorKind::internal,
            "edge label with a row coefficient outside {-1,0,1}");
    k[j] = static_cast<int>(sum);
  }
  return k;
}

int count_nonzero(const std::vector<int>& k) {
  int nz = 0;
  for (int x : k)
    if (x != 0) ++nz;
  return nz;
}

// True when every edge whose label is not a row up to sign realizes a
// descending class, i.e. the graph belongs to the completely descending set.
// non_row_edges counts them on the way.
bool completely_descending(const LabelledGraph& g, const RoseCoset& rho,
                           const IntMatrix& inverse, int* non_row_edges) {
  *non_row_edges = 0;
  for (const Edge& e : g.edges()) {
    std::vector<int> k = row_coefficients(e.label, inverse);
    int nz = count_nonzero(k);
    require(nz > 0, ErrorKind::internal, "zero label on a surviving edge");
    if (nz == 1) continue;  // a row up to sign: part of a subdivided circle
    ++*non_row_edges;
    if (!is_descending(rho, IdealEdge(k))) return false;
  }
  return true;
}

// Split a vertex: half-edges in `side` move to a fresh vertex, and a new
// edge joins old to new, its label forced by flow balance.
LabelledGraph split_vertex(const LabelledGraph& g, int v,
                           const std::vector<std::pair<int, bool>>& side) {
  int w = g.num_vertices();
  std::vector<Edge> edges = g.edges();
  std::vector<Int> in(g.rank()), out(g.rank());
  for (auto [e, at_dst] : side) {
    if (at_dst) {
      edges[e].dst = w;
      for (int c = 0; c < g.rank(); ++c) in[c] += edges[e].label[c];
    } else {
      edges[e].src = w;
      for (int c = 0; c < g.rank(); ++c) out[c] += edges[e].label[c];
    }
  }
  std::vector<Int> label(g.rank());
  for (int c = 0; c < g.rank(); ++c) label[c] = out[c] - in[c];
  edges.push_back(Edge{v, w, std::move(label), Rat{1}});
  return LabelledGraph(g.rank(), w + 1, std::move(edges));
}

}  // namespace

CdlkResult completely_descending_link(const RoseCoset& rho) {
  int n = rho.rank();
  require(n >= 2 && n <= 4, ErrorKind::resource_limit,
          "complete descending-link enumeration supports ranks 2..4");
  const IntMatrix inverse = rho.rep().inverse_unimodular();
  int max_vertices = 2 * n - 2;

  std::vector<Edge> rose_edges;
  for (int i = 0; i < n; ++i)
    rose_edges.push_back(Edge{0, 0, rho.rep().row(i), Rat{1}});
  LabelledGraph rose(n, 1, std::move(rose_edges));

  // Breadth-first over isomorphism types reachable by splits; every collapse
  // of a kept graph stays in the family, so this reaches the whole complex.
  std::map<std::string, LabelledGraph> kept;  // encoding -> representative
  std::deque<LabelledGraph> queue{rose};
  kept.emplace(canonical_form(rose), rose);

  while (!queue.empty()) {
    LabelledGraph g = queue.front();
    queue.pop_front();
    if (g.num_vertices() >= max_vertices) continue;
    for (int v = 0; v < g.num_vertices(); ++v) {
      std::vector<std::pair<int, bool>> half;  // (edge, endpoint-is-dst)
      for (int e = 0; e < g.num_edges(); ++e) {
        if (g.edge(e).src == v) half.emplace_back(e, false);
        if (g.edge(e).dst == v) half.emplace_back(e, true);
      }
      int d = static_cast<int>(half.size());
      if (d < 4) continue;
      // Fix half-edge 0 on the old side; both sides need two half-edges.
      for (unsigned mask = 0; mask < (1u << (d - 1)); ++mask) {
        std::vector<std::pair<int, bool>> side;
        for (int i = 1; i < d; ++i)
          if (mask & (1u << (i - 1))) side.push_back(half[i]);
        int moved = static_cast<int>(side.size());
        if (moved < 2 || d - moved < 2) continue;
        LabelledGraph split = split_vertex(g, v, side);
        const std::vector<Int>& new_label =
            split.edge(split.num_edges() - 1).label;
        if (std::all_of(new_label.begin(), new_label.end(),
                        [](const Int& x) { return x == 0; }))
          continue;  // balanced sides would create a separating edge
        // Validate first: the {-1,0,1} coefficient bound below is only
        // guaranteed for graphs that actually lie in the star.
        if (!validate(split).pass) continue;
        int non_row = 0;
        if (!completely_descending(split, rho, inverse, &non_row)) continue;
        std::string enc = canonical_form(split);
        if (kept.emplace(enc, split).second) queue.push_back(split);
      }
    }
  }

  // Cells are the kept types with at least one non-row edge.
  std::vector<std::tuple<int, std::string, LabelledGraph>> cells;
  for (const auto& [enc, g] : kept) {
    int non_row = 0;
    completely_descending(g, rho, inverse, &non_row);
    if (non_row >= 1)
      cells.emplace_back(g.num_vertices() - 2, enc, g);
  }
  std::sort(cells.begin(), cells.end(),
            [](const auto& a, const auto& b) {
              return std::tie(std::get<0>(a), std::get<1>(a)) <
                     std::tie(std::get<0>(b), std::get<1>(b));
            });

  CdlkResult result;
  std::map<std::string, int> id;
  for (auto& [dim, enc, g] : cells) {
    id[enc] = static_cast<int>(result.model.cells.size());
    result.model.cells.push_back(enc);
    result.model.dims.push_back(dim);
    result.graphs.push_back(g);
  }

  // Faces: collapse every nonempty forest. A collapse can slide off onto a
  // different rose's territory, so only results still over this rose count;
  // of those, the ones keeping a non-row edge stay in the complex. Full
  // forest enumeration lists iterated faces directly, so the relation is
  // transitively closed as stored.
  std::set<std::pair<int, int>> face_pairs;
  for (int c = 0; c < static_cast<int>(result.graphs.size()); ++c) {
    const LabelledGraph& g = result.graphs[c];
    int e_count = g.num_edges();
    for (unsigned mask = 1; mask < (1u << e_count); ++mask) {
      std::vector<int> forest;
      for (int e = 0; e < e_count; ++e)
        if (mask & (1u << e)) forest.push_back(e);
      if (!is_forest(g, forest)) continue;
      LabelledGraph face = collapse(g, forest);
      if (!in_star(face, rho)) continue;
      int non_row = 0;
      completely_descending(face, rho, inverse, &non_row);
      if (non_row == 0) continue;
      auto it = id.find(canonical_form(face));
      require(it != id.end(), ErrorKind::internal,
              "face of a kept cell is missing from the complex: cell " +
                  g.str() + " collapsed to " + face.str());
      face_pairs.emplace(c, it->second);
    }
  }
  result.model.faces.assign(face_pairs.begin(), face_pairs.end());
  return result;
}

CellComplexModel completely_descending_complex(const RoseCoset& rho) {
  return completely_descending_link(rho).model;
}

}  // namespace tn
