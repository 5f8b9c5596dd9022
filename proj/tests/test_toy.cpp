#include <doctest.h>

#include <map>
#include <set>
#include <string>

#include "tn/canonical.hpp"
#include "tn/error.hpp"
#include "tn/labelled_graph.hpp"
#include "tn/toy.hpp"

using namespace tn;

namespace {

ToyConfiguration single_pair(Rat zx, Rat zy, Rat px, Rat py) {
  ToyConfiguration c;
  c.rank = 3;
  c.pairs = {PointPair{GridPoint{zx, zy}, GridPoint{px, py}}};
  return c;
}

}  // namespace

TEST_CASE("normalization slides each pair into the unit square") {
  ToyConfiguration c = single_pair(Rat(1, 2), Rat(0), Rat(7, 3), Rat(-2));
  CHECK(is_normalized(c));
  ToyConfiguration moved = c;
  moved.pairs[0].z.x += 3;
  moved.pairs[0].zp.x += 3;
  moved.pairs[0].z.y -= 1;
  moved.pairs[0].zp.y -= 1;
  CHECK(!is_normalized(moved));
  ToyConfiguration back = normalized(moved);
  CHECK(is_normalized(back));
  CHECK(back.pairs[0].z.x == Rat(1, 2));
  CHECK(back.pairs[0].zp.y == Rat(-2));
  // Off the grid entirely: both coordinates fractional.
  CHECK_THROWS_AS(
      normalized(single_pair(Rat(1, 2), Rat(1, 2), Rat(0), Rat(0))), Error);
}

TEST_CASE("corner configuration collapses onto exactly the block rose") {
  LabelledGraph g = config_to_graph(single_pair(Rat(0), Rat(0), Rat(2), Rat(1)));
  CHECK(validate(g).pass);
  std::vector<RoseCoset> roses = roses_whose_star_contains(g);
  REQUIRE(roses.size() == 1);
  CHECK(roses[0] == RoseCoset(IntMatrix({{Int(1), Int(0), Int(2)},
                                         {Int(0), Int(1), Int(1)},
                                         {Int(0), Int(0), Int(1)}})));
}

TEST_CASE("arc labels do not depend on the staircase convention") {
  ToyConfiguration c = single_pair(Rat(1, 2), Rat(0), Rat(7, 3), Rat(-2));
  CHECK(canonical_form(config_to_graph(c, PathRule::horizontal_first)) ==
        canonical_form(config_to_graph(c, PathRule::vertical_first)));
  ToyConfiguration d = single_pair(Rat(0), Rat(1, 3), Rat(-1), Rat(5, 2));
  CHECK(canonical_form(config_to_graph(d, PathRule::horizontal_first)) ==
        canonical_form(config_to_graph(d, PathRule::vertical_first)));
}

TEST_CASE("translating a pair never changes the graph") {
  ToyConfiguration c = single_pair(Rat(1, 2), Rat(0), Rat(7, 3), Rat(-2));
  ToyConfiguration moved = c;
  moved.pairs[0].z.x += 3;
  moved.pairs[0].zp.x += 3;
  moved.pairs[0].z.y -= 1;
  moved.pairs[0].zp.y -= 1;
  CHECK(canonical_form(config_to_graph(normalized(moved))) ==
        canonical_form(config_to_graph(c)));
}

TEST_CASE("two mid-edge points give a three-vertex graph") {
  LabelledGraph g =
      config_to_graph(single_pair(Rat(1, 2), Rat(0), Rat(0), Rat(1, 2)));
  CHECK(g.num_vertices() == 3);
  CHECK(validate(g).pass);
}

TEST_CASE("configuration input validation") {
  ToyConfiguration wrong = single_pair(Rat(0), Rat(0), Rat(1), Rat(1));
  wrong.rank = 4;  // rank 4 needs two pairs
  CHECK_THROWS_AS(config_to_graph(wrong), Error);
  ToyConfiguration offgrid = single_pair(Rat(1, 3), Rat(1, 3), Rat(0), Rat(0));
  CHECK_THROWS_AS(config_to_graph(offgrid), Error);
}

TEST_CASE("norm-maximal roses over a window are injective and pinned") {
  CHECK(max_norm_rose({1, 1, 3}) ==
        RoseCoset(IntMatrix({{Int(1), Int(0), Int(2)},
                             {Int(0), Int(1), Int(2)},
                             {Int(0), Int(0), Int(1)}})));
  std::set<RoseCoset> all;
  int count = 0;
  for (int p = -3; p <= 3; ++p)
    for (int q = -3; q <= 3; ++q) {
      all.insert(max_norm_rose({p, q, 3}));
      ++count;
    }
  CHECK(static_cast<int>(all.size()) == count);
  // Rank 4 block roses stay injective on a smaller window.
  std::set<RoseCoset> rank4;
  for (int p = -1; p <= 1; ++p)
    for (int q = -1; q <= 1; ++q) rank4.insert(max_norm_rose({p, q, 4}));
  CHECK(rank4.size() == 9);
}

TEST_CASE("torus cell structure: sixteen cells closing up with Euler zero") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {0, 0}, {2, 1}}) {
    TorusCells cells = z_pq_cells({p, q, 3});
    CHECK(cells.cell_encodings.size() == 16);
    std::set<std::string> distinct(cells.cell_encodings.begin(),
                                   cells.cell_encodings.end());
    CHECK(distinct.size() == 16);
    CHECK(cells.vertex_count == 16);
    CHECK(cells.edge_encodings.size() == 32);
    CHECK(cells.closed_surface);
    CHECK(cells.euler_characteristic == 0);
    REQUIRE(cells.cell_faces.size() == 16);
    std::map<int, int> edge_use;
    for (const auto& faces : cells.cell_faces)
      for (int e : faces) ++edge_use[e];
    for (const auto& [edge, uses] : edge_use) CHECK(uses == 2);
    for (const LabelledGraph& g : cells.cell_graphs)
      CHECK(validate(g).pass);
  }
  CHECK_THROWS_AS(z_pq_cells({1, 1, 4}), Error);
}

TEST_CASE("sphere certificates pass and share their cell counts") {
  SphereReport s11 = sphere_intersection({1, 1, 3});
  CHECK(s11.single_circle);
  CHECK(s11.completely_descending);
  CHECK(s11.loops_meet_once);
  CHECK(s11.pass);
  CHECK(s11.arc_cells.size() == 6);
  CHECK(s11.point_cells.size() == 6);

  SphereReport s21 = sphere_intersection({2, 1, 3});
  CHECK(s21.pass);
  CHECK(s21.arc_cells.size() == s11.arc_cells.size());
  CHECK(s21.point_cells.size() == s11.point_cells.size());

  SphereReport s22 = sphere_intersection({2, 2, 3});
  CHECK(s22.pass);

  CHECK_THROWS_AS(sphere_intersection({0, 1, 3}), Error);
  CHECK_THROWS_AS(sphere_intersection({1, 1, 4}), Error);
}

TEST_CASE("window censuses match the frozen counts") {
  std::vector<std::pair<int, int>> window1;
  for (int p = -1; p <= 1; ++p)
    for (int q = -1; q <= 1; ++q) window1.emplace_back(p, q);
  CHECK(toy_homology_rank(3, window1) == 9);
  CHECK(toy_homology_rank(3, {{0, 0}}) == 1);
  CHECK(toy_homology_rank(4, window1) == 9);

  std::vector<std::pair<int, int>> window2;
  for (int p = -2; p <= 2; ++p)
    for (int q = -2; q <= 2; ++q) window2.emplace_back(p, q);
  CHECK(toy_homology_rank(3, window2) == 25);

  CHECK_THROWS_AS(toy_homology_rank(3, {{1, 1}}), Error);
  CHECK_THROWS_AS(toy_homology_rank(2, {{0, 0}}), Error);
}
