#include "tn/rank2_tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "tn/blowup.hpp"
#include "tn/descending.hpp"
#include "tn/error.hpp"
#include "tn/ideal_edge.hpp"
#include "tn/labelled_graph.hpp"

namespace tn {
namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Returns false when x and y were already connected.
  bool merge(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[x] = y;
    return true;
  }
};

}  // namespace

Fraction row_fraction(const std::vector<Int>& row) {
  require(row.size() == 2, ErrorKind::invalid_input,
          "row_fraction expects a rank-2 row");
  Int a = row[0], b = row[1];
  if (a == 0) return Fraction{1, 0};  // vertical slope, sign irrelevant
  Int g = boost::multiprecision::gcd(a, b);  // matrix rows are already
  a /= g;                                    // primitive; reduce anyway
  b /= g;
  if (a < 0) return Fraction{-b, -a};
  return Fraction{b, a};
}

Rank2TreeReport rank2_tree(int bound) {
  require(bound >= 1, ErrorKind::invalid_input, "bound must be at least 1");
  Rank2TreeReport report;
  report.bound = bound;
  report.vertices = enumerate_roses(2, bound);

  std::map<RoseCoset, int> index;
  for (int i = 0; i < static_cast<int>(report.vertices.size()); ++i)
    index.emplace(report.vertices[i], i);

  for (const RoseCoset& rho : report.vertices) {
    std::array<Fraction, 2> pair{row_fraction(rho.rep().row(0)),
                                 row_fraction(rho.rep().row(1))};
    report.fractions.push_back(pair);
  }

  // Each blowup is shared by the stars of every rose it collapses to; the
  // smallest of those roses is where the Morse gluing attaches the others.
  std::set<std::pair<int, int>> edge_set;
  const std::vector<IdealEdge> classes = all_ideal_edges(2);
  for (const RoseCoset& rho : report.vertices) {
    for (const IdealEdge& iota : classes) {
      LabelledGraph g = blowup_1edge(rho, iota);
      std::vector<RoseCoset> shared = roses_whose_star_contains(g);
      const RoseCoset& least =
          *std::min_element(shared.begin(), shared.end());
      auto least_it = index.find(least);
      if (least_it == index.end()) continue;
      for (const RoseCoset& other : shared) {
        if (other == least) continue;
        auto it = index.find(other);
        if (it == index.end()) continue;
        edge_set.emplace(std::min(least_it->second, it->second),
                         std::max(least_it->second, it->second));
      }
    }
  }
  report.edges.assign(edge_set.begin(), edge_set.end());

  UnionFind components(static_cast<int>(report.vertices.size()));
  report.acyclic = true;
  for (auto [a, b] : report.edges)
    if (!components.merge(a, b)) report.acyclic = false;

  // A coset is in the core when every strictly smaller replacement coset
  // was enumerated, i.e. the bound does not cut off the region below it.
  for (const RoseCoset& rho : report.vertices) {
    bool core = true;
    for (const IdealEdge& iota : classes) {
      for (const RoseCoset& replaced : replacement_cosets(rho, iota)) {
        if (replaced.norm() < rho.norm() && !index.count(replaced))
          core = false;
      }
    }
    report.in_core.push_back(core);
  }

  UnionFind core_components(static_cast<int>(report.vertices.size()));
  for (auto [a, b] : report.edges)
    if (report.in_core[a] && report.in_core[b]) core_components.merge(a, b);
  int core_roots = 0;
  for (int i = 0; i < static_cast<int>(report.vertices.size()); ++i)
    if (report.in_core[i] && core_components.find(i) == i) ++core_roots;
  report.core_connected = core_roots <= 1;

  report.farey_consistent = true;
  for (auto [a, b] : report.edges) {
    bool shares = false;
    for (const Fraction& f : report.fractions[a])
      for (const Fraction& g : report.fractions[b])
        if (f == g) shares = true;
    if (!shares) report.farey_consistent = false;
  }
  return report;
}

}  // namespace tn
