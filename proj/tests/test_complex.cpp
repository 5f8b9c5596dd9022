#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "tn/canonical.hpp"
#include "tn/cdlk.hpp"
#include "tn/cell_complex.hpp"
#include "tn/labelled_graph.hpp"
#include "tn/rose_enum.hpp"

using namespace tn;

namespace {

IntMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<Int>> big;
  for (const auto& r : rows) big.emplace_back(r.begin(), r.end());
  return IntMatrix(big);
}

}  // namespace

TEST_CASE("homology of a point") {
  CellComplexModel x;
  x.cells = {"pt"};
  x.dims = {0};
  std::vector<HomologyGroup> h = homology(x);
  REQUIRE(h.size() >= 1);
  CHECK(h[0].rank == 1);
  CHECK(h[0].torsion.empty());
  for (std::size_t d = 1; d < h.size(); ++d) CHECK(h[d].rank == 0);
}

TEST_CASE("homology of a hollow triangle") {
  CellComplexModel x;
  x.cells = {"a", "b", "c", "ab", "bc", "ca"};
  x.dims = {0, 0, 0, 1, 1, 1};
  x.faces = {{3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 2}, {5, 0}};
  std::vector<HomologyGroup> h = homology(x);
  REQUIRE(h.size() >= 2);
  CHECK(h[0].rank == 1);
  CHECK(h[1].rank == 1);
  CHECK(h[0].torsion.empty());
  CHECK(h[1].torsion.empty());
}

TEST_CASE("homology of a filled triangle") {
  CellComplexModel x;
  x.cells = {"a", "b", "c", "ab", "bc", "ca", "abc"};
  x.dims = {0, 0, 0, 1, 1, 1, 2};
  // Face pairs list every proper iterated face.
  x.faces = {{3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 2}, {5, 0},
             {6, 0}, {6, 1}, {6, 2}, {6, 3}, {6, 4}, {6, 5}};
  std::vector<HomologyGroup> h = homology(x);
  CHECK(h[0].rank == 1);
  for (std::size_t d = 1; d < h.size(); ++d) {
    CHECK(h[d].rank == 0);
    CHECK(h[d].torsion.empty());
  }
}

TEST_CASE("homology detects two-torsion in the six-vertex closed surface") {
  // Minimal 6-vertex triangulation of the non-orientable closed surface
  // with Euler number 1: every edge of K6 plus ten triangles.
  std::vector<std::array<int, 3>> tris = {{1, 2, 3}, {1, 3, 4}, {1, 4, 5},
                                          {1, 5, 6}, {1, 2, 6}, {2, 3, 5},
                                          {3, 4, 6}, {4, 5, 2}, {5, 6, 3},
                                          {6, 2, 4}};
  CellComplexModel x;
  std::map<int, int> vid;
  for (int v = 1; v <= 6; ++v) {
    vid[v] = static_cast<int>(x.cells.size());
    x.cells.push_back("v" + std::to_string(v));
    x.dims.push_back(0);
  }
  std::map<std::pair<int, int>, int> eid;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b) {
      eid[{a, b}] = static_cast<int>(x.cells.size());
      x.cells.push_back("e" + std::to_string(a) + std::to_string(b));
      x.dims.push_back(1);
      x.faces.push_back({eid[{a, b}], vid[a]});
      x.faces.push_back({eid[{a, b}], vid[b]});
    }
  for (const auto& t : tris) {
    std::array<int, 3> s = t;
    std::sort(s.begin(), s.end());
    int f = static_cast<int>(x.cells.size());
    x.cells.push_back("f" + std::to_string(s[0]) + std::to_string(s[1]) +
                      std::to_string(s[2]));
    x.dims.push_back(2);
    x.faces.push_back({f, eid[{s[0], s[1]}]});
    x.faces.push_back({f, eid[{s[0], s[2]}]});
    x.faces.push_back({f, eid[{s[1], s[2]}]});
    x.faces.push_back({f, vid[s[0]]});
    x.faces.push_back({f, vid[s[1]]});
    x.faces.push_back({f, vid[s[2]]});
  }
  std::vector<HomologyGroup> h = homology(x);
  REQUIRE(h.size() >= 3);
  CHECK(h[0].rank == 1);
  CHECK(h[0].torsion.empty());
  CHECK(h[1].rank == 0);
  REQUIRE(h[1].torsion.size() == 1);
  CHECK(h[1].torsion[0] == 2);
  CHECK(h[2].rank == 0);
  CHECK(h[2].torsion.empty());
}

TEST_CASE("identity rose has an empty completely descending complex") {
  CellComplexModel x =
      completely_descending_complex(RoseCoset(IntMatrix::identity(3)));
  CHECK(x.cells.empty());
  CHECK(x.faces.empty());
}

TEST_CASE("completely descending complex of the pinned sample rose") {
  RoseCoset rho(from_rows({{2, 1, 0}, {1, 1, 0}, {0, 0, 1}}));
  CdlkResult result = completely_descending_link(rho);
  const CellComplexModel& x = result.model;
  REQUIRE(x.cells.size() == 13);
  REQUIRE(result.graphs.size() == 13);

  int top = 0;
  for (std::size_t i = 0; i < x.cells.size(); ++i) {
    const LabelledGraph& g = result.graphs[i];
    CHECK(canonical_form(g) == x.cells[i]);
    CHECK(x.dims[i] == g.num_vertices() - 2);
    CHECK(x.dims[i] <= 2);
    CHECK(validate(g).pass);
    CHECK(in_star(g, rho));
    if (x.dims[i] == 2) {
      ++top;
      CHECK(g.num_vertices() == 4);
      CHECK(g.num_edges() == 6);
      for (int v = 0; v < g.num_vertices(); ++v) CHECK(g.valence(v) == 3);
    }
  }
  CHECK(top == 2);

  // Face relation: irreflexive, dimension-decreasing, transitively closed.
  std::set<std::pair<int, int>> pairs(x.faces.begin(), x.faces.end());
  for (auto [c, f] : pairs) {
    CHECK(c != f);
    CHECK(x.dims[f] < x.dims[c]);
  }
  for (auto [c, f] : pairs)
    for (auto [c2, f2] : pairs)
      if (c2 == f) CHECK(pairs.count({c, f2}) == 1);

  std::vector<HomologyGroup> h = homology(x);
  REQUIRE(h.size() >= 2);
  CHECK(h[0].rank == 1);  // connected
  CHECK(h[1].rank == 2);
  for (std::size_t d = 0; d < h.size(); ++d) {
    CHECK(h[d].torsion.empty());
    if (d >= 2) CHECK(h[d].rank == 0);
  }
}

TEST_CASE("cell dimensions and homology bounds over a coset sweep") {
  // First few non-identity rank-3 cosets by norm order.
  std::vector<RoseCoset> roses = enumerate_roses(3, 1);
  int computed = 0;
  for (const RoseCoset& rho : roses) {
    if (rho.is_identity()) continue;
    if (++computed > 12) break;
    CdlkResult result = completely_descending_link(rho);
    CHECK(!result.model.cells.empty());
    for (int d : result.model.dims) CHECK(d <= 2);
    std::vector<HomologyGroup> h = homology(result.model);
    for (std::size_t d = 2; d < h.size(); ++d) {
      CHECK(h[d].rank == 0);
      CHECK(h[d].torsion.empty());
    }
    if (!h.empty()) CHECK(h[0].rank == 1);
  }
  CHECK(computed > 12);
}
