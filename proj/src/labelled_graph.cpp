#include "tn/labelled_graph.hpp"

#include <algorithm>
#include <set>

#include "tn/error.hpp"

namespace tn {
namespace {

std::vector<Int> negated(const std::vector<Int>& v) {
  std::vector<Int> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

// Number of connected components on the full vertex set, using only edges
// for which use[e] is true.
int component_count(const LabelledGraph& g, const std::vector<bool>& use) {
  int v = g.num_vertices();
  std::vector<int> parent(v);
  for (int i = 0; i < v; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e = 0; e < g.num_edges(); ++e)
    if (use[e]) parent[find(g.edge(e).src)] = find(g.edge(e).dst);
  int count = 0;
  for (int i = 0; i < v; ++i)
    if (find(i) == i) ++count;
  return count;
}

}  // namespace

LabelledGraph::LabelledGraph(int rank, int num_vertices, std::vector<Edge> edges)
    : rank_(rank), num_vertices_(num_vertices), edges_(std::move(edges)) {
  require(rank_ >= 1, ErrorKind::invalid_input, "graph rank must be positive");
  require(num_vertices_ >= 1, ErrorKind::invalid_input,
          "graph needs at least one vertex");
  for (const Edge& e : edges_) {
    require(e.src >= 0 && e.src < num_vertices_ && e.dst >= 0 &&
                e.dst < num_vertices_,
            ErrorKind::invalid_input, "edge endpoint out of range");
    require(static_cast<int>(e.label.size()) == rank_, ErrorKind::invalid_input,
            "edge label length must equal the rank");
    require(e.length > 0 && e.length <= 1, ErrorKind::invalid_input,
            "edge length must lie in (0,1]");
  }
}

int LabelledGraph::valence(int v) const {
  int count = 0;
  for (const Edge& e : edges_) {
    if (e.src == v) ++count;
    if (e.dst == v) ++count;
  }
  return count;
}

std::string label_str(const std::vector<Int>& label) {
  std::string out = "(";
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (i) out += ",";
    out += to_string(label[i]);
  }
  return out + ")";
}

std::string LabelledGraph::str() const {
  std::string out = "rank=" + std::to_string(rank_) +
                    " V=" + std::to_string(num_vertices_) + " edges:";
  for (const Edge& e : edges_)
    out += " " + std::to_string(e.src) + "->" + std::to_string(e.dst) + " " +
           label_str(e.label) + " len=" + to_string(e.length) + ";";
  return out;
}

ValidationReport validate(const LabelledGraph& g) {
  std::vector<bool> all(g.num_edges(), true);
  if (component_count(g, all) != 1)
    return {false, "graph is not connected"};

  int homology_rank = g.num_edges() - g.num_vertices() + 1;
  if (homology_rank != g.rank())
    return {false, "first homology has rank " + std::to_string(homology_rank) +
                       " but the declared rank is " + std::to_string(g.rank())};

  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.valence(v) < 3)
      return {false, "vertex " + std::to_string(v) + " has valence " +
                         std::to_string(g.valence(v)) + " < 3"};

  for (int v = 0; v < g.num_vertices(); ++v) {
    std::vector<Int> balance(g.rank());
    for (const Edge& e : g.edges())
      for (int i = 0; i < g.rank(); ++i) {
        if (e.dst == v) balance[i] += e.label[i];
        if (e.src == v) balance[i] -= e.label[i];
      }
    if (balance != std::vector<Int>(g.rank()))
      return {false, "label flow is unbalanced at vertex " + std::to_string(v)};
  }

  for (int e = 0; e < g.num_edges(); ++e) {
    if (g.edge(e).src == g.edge(e).dst) continue;  // a loop never separates
    std::vector<bool> use(g.num_edges(), true);
    use[e] = false;
    if (component_count(g, use) != 1)
      return {false, "edge " + std::to_string(e) + " separates the graph"};
  }

  for (int a = 0; a < g.num_edges(); ++a)
    for (int b = a + 1; b < g.num_edges(); ++b) {
      const auto& la = g.edge(a).label;
      const auto& lb = g.edge(b).label;
      if (la != lb && la != negated(lb)) continue;
      std::vector<bool> use(g.num_edges(), true);
      use[a] = use[b] = false;
      if (component_count(g, use) == 1)
        return {false, "edges " + std::to_string(a) + " and " +
                           std::to_string(b) +
                           " share a label up to sign but are not parallel"};
    }

  return {};
}

bool is_forest(const LabelledGraph& g, const std::vector<int>& edge_indices) {
  std::vector<int> parent(g.num_vertices());
  for (int i = 0; i < g.num_vertices(); ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e : edge_indices) {
    require(e >= 0 && e < g.num_edges(), ErrorKind::invalid_input,
            "edge index out of range");
    int a = find(g.edge(e).src), b = find(g.edge(e).dst);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

LabelledGraph collapse(const LabelledGraph& g,
                       const std::vector<int>& forest_edges) {
  require(is_forest(g, forest_edges), ErrorKind::invalid_input,
          "collapse set contains a cycle");
  std::set<int> chosen(forest_edges.begin(), forest_edges.end());
  require(chosen.size() == forest_edges.size(), ErrorKind::invalid_input,
          "collapse set repeats an edge");

  std::vector<int> parent(g.num_vertices());
  for (int i = 0; i < g.num_vertices(); ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e : forest_edges) parent[find(g.edge(e).src)] = find(g.edge(e).dst);

  std::vector<int> new_id(g.num_vertices(), -1);
  int next = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    int r = find(v);
    if (new_id[r] < 0) new_id[r] = next++;
    new_id[v] = new_id[r];
  }

  std::vector<Edge> edges;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (chosen.count(e)) continue;
    Edge copy = g.edge(e);
    copy.src = new_id[copy.src];
    copy.dst = new_id[copy.dst];
    edges.push_back(std::move(copy));
  }
  return LabelledGraph(g.rank(), next, std::move(edges));
}

std::vector<RoseCoset> roses_whose_star_contains(const LabelledGraph& g) {
  for (const Edge& e : g.edges())
    require(e.length == 1, ErrorKind::invalid_input,
            "star membership needs every edge at length 1");

  std::vector<RoseCoset> out;
  int want = g.num_vertices() - 1;
  std::vector<int> chosen;
  auto emit = [&]() {
    LabelledGraph rose = collapse(g, chosen);
    std::vector<std::vector<Int>> rows;
    for (const Edge& e : rose.edges()) rows.push_back(e.label);
    out.emplace_back(IntMatrix(rows));
  };
  // Depth-first choice of a maximal forest; partial sets stay forests.
  auto extend = [&](auto&& self, int first) -> void {
    if (static_cast<int>(chosen.size()) == want) {
      emit();
      return;
    }
    for (int e = first; e < g.num_edges(); ++e) {
      chosen.push_back(e);
      if (is_forest(g, chosen)) self(self, e + 1);
      chosen.pop_back();
    }
  };
  extend(extend, 0);

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool in_star(const LabelledGraph& g, const RoseCoset& rho) {
  require(g.rank() == rho.rank(), ErrorKind::invalid_input,
          "rank mismatch between graph and coset");
  for (int r = 0; r < rho.rank(); ++r) {
    std::vector<Int> row = rho.rep().row(r);
    std::vector<Int> neg = negated(row);
    bool found = false;
    for (const Edge& e : g.edges())
      if (e.length == 1 && (e.label == row || e.label == neg)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

bool in_frontier(const LabelledGraph& g, const RoseCoset& rho) {
  require(in_star(g, rho), ErrorKind::invalid_input,
          "frontier test requires a graph in the star");
  for (const Edge& e : g.edges()) {
    if (e.length != 1) continue;
    bool is_row = false;
    for (int r = 0; r < rho.rank() && !is_row; ++r) {
      std::vector<Int> row = rho.rep().row(r);
      if (e.label == row || e.label == negated(row)) is_row = true;
    }
    if (!is_row) return true;
  }
  return false;
}

}  // namespace tn
