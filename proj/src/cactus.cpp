#include "tn/cactus.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>

#include "tn/canonical.hpp"
#include "tn/error.hpp"

namespace tn {
namespace {

void simple_cycle_search(const LabelledGraph& g, int start, int current,
                         std::vector<bool>& on_path_vertex,
                         std::vector<bool>& on_path_edge,
                         std::vector<int>& path,
                         std::set<std::vector<int>>& found) {
  for (int e = 0; e < g.num_edges(); ++e) {
    if (on_path_edge[e]) continue;
    const Edge& edge = g.edge(e);
    if (edge.src == edge.dst) continue;  // loops handled separately
    int other;
    if (edge.src == current)
      other = edge.dst;
    else if (edge.dst == current)
      other = edge.src;
    else
      continue;
    if (other == start && !path.empty()) {
      std::vector<int> circle = path;
      circle.push_back(e);
      std::sort(circle.begin(), circle.end());
      found.insert(std::move(circle));
      continue;
    }
    // Keep the start as the smallest vertex so each circle is found from a
    // single root (twice, once per direction; the set collapses that).
    if (other <= start || on_path_vertex[other]) continue;
    on_path_vertex[other] = true;
    on_path_edge[e] = true;
    path.push_back(e);
    simple_cycle_search(g, start, other, on_path_vertex, on_path_edge, path,
                        found);
    path.pop_back();
    on_path_edge[e] = false;
    on_path_vertex[other] = false;
  }
}

LabelledGraph with_loop(const LabelledGraph& g, int vertex,
                        std::vector<Int> label) {
  std::vector<Edge> edges = g.edges();
  edges.push_back(Edge{vertex, vertex, std::move(label), Rat{1}});
  return LabelledGraph(g.rank(), g.num_vertices(), std::move(edges));
}

LabelledGraph subdivide_edge(const LabelledGraph& g, int e) {
  int w = g.num_vertices();
  std::vector<Edge> edges = g.edges();
  Edge original = edges[e];
  edges[e] = Edge{original.src, w, original.label, Rat{1}};
  edges.push_back(Edge{w, original.dst, original.label, Rat{1}});
  return LabelledGraph(g.rank(), w + 1, std::move(edges));
}

std::vector<Int> unit_label(int rank, int i) {
  std::vector<Int> label(rank);
  label[i] = 1;
  return label;
}

struct FoundType {
  int vertices;
  std::string encoding;
  LabelledGraph graph;
};

void grow_cactus(const LabelledGraph& g, unsigned remaining, int max_vertices,
                 std::set<std::string>& seen, std::vector<FoundType>& out) {
  if (g.num_vertices() > max_vertices) return;
  if (remaining == 0) {
    if (!validate(g).pass) return;
    std::string enc = canonical_form(g);
    if (seen.insert(enc).second)
      out.push_back(FoundType{g.num_vertices(), std::move(enc), g});
    return;
  }
  for (int i = 0; i < g.rank(); ++i) {
    if (!(remaining & (1u << i))) continue;
    unsigned rest = remaining & ~(1u << i);
    for (int v = 0; v < g.num_vertices(); ++v)
      grow_cactus(with_loop(g, v, unit_label(g.rank(), i)), rest, max_vertices,
                  seen, out);
    for (int e = 0; e < g.num_edges(); ++e) {
      LabelledGraph split = subdivide_edge(g, e);
      grow_cactus(with_loop(split, split.num_vertices() - 1,
                            unit_label(g.rank(), i)),
                  rest, max_vertices, seen, out);
    }
  }
}

}  // namespace

std::vector<std::vector<int>> embedded_circles(const LabelledGraph& g) {
  std::set<std::vector<int>> found;
  for (int e = 0; e < g.num_edges(); ++e)
    if (g.edge(e).src == g.edge(e).dst) found.insert({e});
  for (int s = 0; s < g.num_vertices(); ++s) {
    std::vector<bool> on_vertex(g.num_vertices(), false);
    std::vector<bool> on_edge(g.num_edges(), false);
    std::vector<int> path;
    on_vertex[s] = true;
    simple_cycle_search(g, s, s, on_vertex, on_edge, path, found);
  }
  return {found.begin(), found.end()};
}

bool is_cactus(const LabelledGraph& g) {
  std::vector<std::vector<int>> circles = embedded_circles(g);
  if (static_cast<int>(circles.size()) != g.rank()) return false;
  std::vector<int> uses(g.num_edges(), 0);
  for (const auto& circle : circles)
    for (int e : circle) ++uses[e];
  return std::all_of(uses.begin(), uses.end(), [](int u) { return u == 1; });
}

std::vector<LabelledGraph> enumerate_cactus_types(int rank, int max_vertices) {
  require(rank >= 2 && rank <= 6, ErrorKind::invalid_input,
          "cactus enumeration supports ranks 2..6");
  require(max_vertices >= 1 && max_vertices <= 8, ErrorKind::invalid_input,
          "vertex budget must lie in 1..8");

  std::set<std::string> seen;
  std::vector<FoundType> out;
  for (int i = 0; i < rank; ++i) {
    LabelledGraph start(rank, 1, {Edge{0, 0, unit_label(rank, i), Rat{1}}});
    grow_cactus(start, (~0u >> (32 - rank)) & ~(1u << i), max_vertices, seen,
                out);
  }

  std::sort(out.begin(), out.end(), [](const FoundType& a, const FoundType& b) {
    return std::tie(a.vertices, a.encoding) < std::tie(b.vertices, b.encoding);
  });
  std::vector<LabelledGraph> graphs;
  graphs.reserve(out.size());
  for (FoundType& f : out) graphs.push_back(std::move(f.graph));
  return graphs;
}

}  // namespace tn
