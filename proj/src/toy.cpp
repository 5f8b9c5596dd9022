#include "tn/toy.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "tn/canonical.hpp"
#include "tn/descending.hpp"
#include "tn/error.hpp"
#include "tn/ideal_edge.hpp"
#include "tn/int_matrix.hpp"

namespace tn {
namespace {

Int ceil_rat(const Rat& v) { return -floor_rat(-v); }

Rat frac(const Rat& v) { return v - Rat(floor_rat(v)); }

enum class Spot { wedge, horizontal, vertical };

struct TorusPos {
  Spot spot;
  Rat t;  // position along the circle, in (0,1); unused at the wedge
};

TorusPos torus_position(const GridPoint& p) {
  bool xi = is_integer(p.x), yi = is_integer(p.y);
  require(xi || yi, ErrorKind::invalid_input,
          "configuration point does not lie on a grid line");
  if (xi && yi) return {Spot::wedge, Rat(0)};
  if (yi) return {Spot::horizontal, frac(p.x)};
  return {Spot::vertical, frac(p.y)};
}

// One axis-aligned run of a closing path, along the grid line `level`.
struct Segment {
  bool horizontal;
  Rat from;
  Rat to;
};

GridPoint nearest_corner(const GridPoint& p) {
  if (is_integer(p.x) && is_integer(p.y)) return p;
  if (is_integer(p.y)) return {Rat(floor_rat(p.x)), p.y};
  return {p.x, Rat(floor_rat(p.y))};
}

void push_segment(std::vector<Segment>& out, bool horizontal, const Rat& from,
                  const Rat& to) {
  if (from != to) out.push_back(Segment{horizontal, from, to});
}

// Grid path from z to zp: out to the floor corner, a lattice staircase,
// then in from zp's floor corner.
std::vector<Segment> closing_path(const GridPoint& z, const GridPoint& zp,
                                  PathRule rule) {
  std::vector<Segment> segs;
  GridPoint c1 = nearest_corner(z), c2 = nearest_corner(zp);
  if (!is_integer(z.x))
    push_segment(segs, true, z.x, c1.x);
  else if (!is_integer(z.y))
    push_segment(segs, false, z.y, c1.y);
  if (rule == PathRule::horizontal_first) {
    push_segment(segs, true, c1.x, c2.x);
    push_segment(segs, false, c1.y, c2.y);
  } else {
    push_segment(segs, false, c1.y, c2.y);
    push_segment(segs, true, c1.x, c2.x);
  }
  if (!is_integer(zp.x))
    push_segment(segs, true, c2.x, zp.x);
  else if (!is_integer(zp.y))
    push_segment(segs, false, c2.y, zp.y);
  return segs;
}

// Signed count of full traversals of the circle arc [a,b] by the segment:
// one per unit translate of the arc inside the swept interval.
Int traversals(const Segment& s, const Rat& a, const Rat& b) {
  Rat lo = std::min(s.from, s.to), hi = std::max(s.from, s.to);
  Int m_min = ceil_rat(lo - a), m_max = floor_rat(hi - b);
  if (m_max < m_min) return 0;
  Int count = m_max - m_min + 1;
  return s.to > s.from ? count : Int(-count);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void merge(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

bool is_normalized(const ToyConfiguration& c) {
  for (const PointPair& pr : c.pairs) {
    const GridPoint& z = pr.z;
    bool xi = is_integer(z.x), yi = is_integer(z.y);
    if (!xi && !yi) return false;
    if (z.x < 0 || z.x >= 1 || z.y < 0 || z.y >= 1) return false;
    if (xi && z.x != 0) return false;
    if (yi && z.y != 0) return false;
  }
  return true;
}

ToyConfiguration normalized(const ToyConfiguration& c) {
  ToyConfiguration out = c;
  for (PointPair& pr : out.pairs) {
    torus_position(pr.z);  // rejects off-grid points
    // The integer coordinate floors to itself, so one shift handles every
    // spot: z lands in [0,1) x [0,1) with its grid line through the origin.
    Int dx = -floor_rat(pr.z.x), dy = -floor_rat(pr.z.y);
    pr.z.x += Rat(dx);
    pr.z.y += Rat(dy);
    pr.zp.x += Rat(dx);
    pr.zp.y += Rat(dy);
  }
  return out;
}

LabelledGraph config_to_graph(const ToyConfiguration& c, PathRule rule) {
  int n = c.rank;
  require(n >= 3, ErrorKind::invalid_input, "rank must be at least 3");
  require(static_cast<int>(c.pairs.size()) == n - 2, ErrorKind::invalid_input,
          "expected one point pair per letter beyond the first two");
  require(is_normalized(c), ErrorKind::invalid_input,
          "configuration must be normalized into the fundamental square");

  std::vector<TorusPos> zpos, ppos;
  std::set<Rat> hcut, vcut;
  for (const PointPair& pr : c.pairs) {
    zpos.push_back(torus_position(pr.z));
    ppos.push_back(torus_position(pr.zp));
    for (const TorusPos& pos : {zpos.back(), ppos.back()}) {
      if (pos.spot == Spot::horizontal) hcut.insert(pos.t);
      if (pos.spot == Spot::vertical) vcut.insert(pos.t);
    }
  }

  std::map<Rat, int> hvert, vvert;
  int next_id = 1;  // 0 is the wedge vertex
  for (const Rat& t : hcut) hvert[t] = next_id++;
  for (const Rat& t : vcut) vvert[t] = next_id++;
  auto vertex_of = [&](const TorusPos& pos) {
    if (pos.spot == Spot::wedge) return 0;
    return pos.spot == Spot::horizontal ? hvert[pos.t] : vvert[pos.t];
  };

  // Circle arcs between consecutive breakpoints, plus their parameter
  // intervals so the closing paths can be counted against them.
  std::vector<Edge> edges;
  std::vector<std::pair<Rat, Rat>> spans;
  auto add_circle = [&](const std::set<Rat>& cuts, const std::map<Rat, int>& ids,
                        int base_letter) {
    std::vector<Rat> bp{Rat(0)};
    bp.insert(bp.end(), cuts.begin(), cuts.end());
    bp.push_back(Rat(1));
    for (size_t k = 0; k + 1 < bp.size(); ++k) {
      int src = bp[k] == 0 ? 0 : ids.at(bp[k]);
      int dst = bp[k + 1] == 1 ? 0 : ids.at(bp[k + 1]);
      std::vector<Int> label(n, 0);
      label[base_letter] = 1;
      edges.push_back(Edge{src, dst, std::move(label), Rat(1)});
      spans.emplace_back(bp[k], bp[k + 1]);
    }
  };
  add_circle(hcut, hvert, 0);
  int h_arcs = static_cast<int>(edges.size());
  add_circle(vcut, vvert, 1);

  for (int k = 0; k < n - 2; ++k) {
    for (const Segment& s :
         closing_path(c.pairs[k].z, c.pairs[k].zp, rule)) {
      int lo = s.horizontal ? 0 : h_arcs;
      int hi = s.horizontal ? h_arcs : static_cast<int>(edges.size());
      for (int e = lo; e < hi; ++e)
        edges[e].label[k + 2] += traversals(s, spans[e].first, spans[e].second);
    }
  }

  for (int k = 0; k < n - 2; ++k) {
    std::vector<Int> label(n, 0);
    label[k + 2] = 1;
    edges.push_back(Edge{vertex_of(ppos[k]), vertex_of(zpos[k]),
                         std::move(label), Rat(1)});
  }

  LabelledGraph g(n, next_id, std::move(edges));
  ValidationReport report = validate(g);
  require(report.pass, ErrorKind::internal,
          "configuration graph failed validation: " + report.message);
  return g;
}

RoseCoset max_norm_rose(const TorusClass& t) {
  int n = t.rank;
  require(n >= 3, ErrorKind::invalid_input, "rank must be at least 3");
  Int a = t.p >= 0 ? Int(t.p + 1) : Int(t.p - 1);
  Int b = t.q >= 0 ? Int(t.q + 1) : Int(t.q - 1);
  std::vector<std::vector<Int>> rows(n, std::vector<Int>(n, 0));
  rows[0][0] = 1;
  rows[1][1] = 1;
  for (int j = 2; j < n; ++j) {
    rows[0][j] = a;
    rows[1][j] = b;
    rows[j][j] = 1;
  }
  return RoseCoset(IntMatrix(rows));
}

namespace {

const std::array<std::pair<int, int>, 4> kGermDirs = {
    {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};  // east, north, west, south

GridPoint germ_point(int px, int py, int dir, const Rat& delta) {
  return GridPoint{Rat(px) + delta * kGermDirs[dir].first,
                   Rat(py) + delta * kGermDirs[dir].second};
}

LabelledGraph pair_graph(const GridPoint& z, const GridPoint& zp) {
  ToyConfiguration c;
  c.rank = 3;
  c.pairs = {PointPair{z, zp}};
  return config_to_graph(normalized(c));
}

}  // namespace

TorusCells z_pq_cells(const TorusClass& t) {
  require(t.rank == 3, ErrorKind::unsupported,
          "torus cells are built in rank 3; higher ranks use the product "
          "structure");
  TorusCells out;
  out.cls = t;
  const Rat dz(1, 2), dp(1, 3);  // distinct offsets keep the points apart

  for (int gz = 0; gz < 4; ++gz) {
    for (int gp = 0; gp < 4; ++gp) {
      LabelledGraph g =
          pair_graph(germ_point(0, 0, gz, dz), germ_point(t.p, t.q, gp, dp));
      out.cell_encodings.push_back(canonical_form(g));
      out.cell_graphs.push_back(std::move(g));
      // Circle vertex v sits between germ v and germ v+1, so germ g spans
      // vertices (g+3)%4 and g; edge ids: z-vertex cells first, then
      // zp-vertex cells.
      out.cell_faces.push_back({((gz + 3) % 4) * 4 + gp, gz * 4 + gp,
                                16 + gz * 4 + ((gp + 3) % 4),
                                16 + gz * 4 + gp});
    }
  }

  out.edge_encodings.resize(32);
  for (int v = 0; v < 4; ++v)
    for (int gp = 0; gp < 4; ++gp)
      out.edge_encodings[v * 4 + gp] = canonical_form(
          pair_graph(GridPoint{0, 0}, germ_point(t.p, t.q, gp, dp)));
  for (int gz = 0; gz < 4; ++gz)
    for (int w = 0; w < 4; ++w)
      out.edge_encodings[16 + gz * 4 + w] = canonical_form(pair_graph(
          germ_point(0, 0, gz, dz), GridPoint{Rat(t.p), Rat(t.q)}));

  std::array<int, 32> uses{};
  for (const auto& faces : out.cell_faces)
    for (int f : faces) ++uses[f];
  out.closed_surface =
      std::all_of(uses.begin(), uses.end(), [](int u) { return u == 2; });
  out.vertex_count = 16;
  out.euler_characteristic =
      static_cast<int>(out.cell_encodings.size()) - 32 + out.vertex_count;
  return out;
}

namespace {

GridPoint sphere_z(const Rat& s) {
  if (s <= 0) return GridPoint{Rat(0), -s};  // north germ into the corner
  return GridPoint{s, Rat(0)};               // corner out the east germ
}

GridPoint sphere_zp(const TorusClass& t, const Rat& u) {
  if (u <= 0) return GridPoint{Rat(t.p + 1) + u, Rat(t.q + 1)};  // west side
  return GridPoint{Rat(t.p + 1), Rat(t.q + 1) - u};              // south side
}

bool collapses_onto(const LabelledGraph& g, const std::string& target) {
  int m = g.num_edges();
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> forest;
    for (int e = 0; e < m; ++e)
      if (mask & (1u << e)) forest.push_back(e);
    if (!is_forest(g, forest)) continue;
    if (canonical_form(collapse(g, forest)) == target) return true;
  }
  return false;
}

bool single_embedded_circle(const LabelledGraph& g,
                            const std::vector<int>& edge_ids) {
  if (edge_ids.empty()) return false;
  std::map<int, int> incidence;
  UnionFind uf(g.num_vertices());
  for (int e : edge_ids) {
    incidence[g.edge(e).src] += 1;
    incidence[g.edge(e).dst] += 1;
    uf.merge(g.edge(e).src, g.edge(e).dst);
  }
  for (const auto& [v, count] : incidence)
    if (count != 2) return false;
  int root = uf.find(g.edge(edge_ids.front()).src);
  for (const auto& [v, count] : incidence)
    if (uf.find(v) != root) return false;
  return true;
}

std::vector<int> marking_circle(const LabelledGraph& g, int letter) {
  std::vector<int> ids;
  for (int e = 0; e < g.num_edges(); ++e)
    if (g.edge(e).label[letter] != 0) ids.push_back(e);
  return ids;
}

// No edge may realize an ascending class of the rose: every label whose
// row-coefficient vector has two or more nonzero entries must be descending.
bool no_ascending_edges(const LabelledGraph& g, const RoseCoset& rho,
                        const IntMatrix& inverse) {
  for (const Edge& e : g.edges()) {
    std::vector<int> k(inverse.cols(), 0);
    bool small = true;
    for (int j = 0; j < inverse.cols(); ++j) {
      Int sum = 0;
      for (int c = 0; c < inverse.rows(); ++c)
        sum += e.label[c] * inverse.at(c, j);
      if (sum < -1 || sum > 1) small = false;
      else k[j] = static_cast<int>(sum);
    }
    if (!small) return false;
    int nz = 0;
    for (int x : k)
      if (x != 0) ++nz;
    if (nz <= 1) continue;  // a row up to sign
    if (!is_descending(rho, IdealEdge(k))) return false;
  }
  return true;
}

}  // namespace

SphereReport sphere_intersection(const TorusClass& t) {
  require(t.rank == 3, ErrorKind::unsupported,
          "sphere certificates are built in rank 3");
  require(t.p >= 1 && t.q >= 1, ErrorKind::invalid_input,
          "both winding numbers must be positive");
  SphereReport report{
      .cls = t, .rose = max_norm_rose(t), .arc_cells = {}, .point_cells = {}};
  const IntMatrix inverse = report.rose.rep().inverse_unimodular();

  // The circle is the boundary of the square [-1/2,1/2]^2 in (s,u), where s
  // moves the first point through the wedge corner and u moves the second
  // through its opposite corner. The graph type is constant on each side of
  // a sign change, except that at (1/2,-1/2) and (-1/2,1/2) the two moving
  // points land on the same torus point and the type degenerates. That cuts
  // the circle into six arcs and six points; the parameters below list the
  // points in cyclic order with arc k joining points k and k+1.
  const Rat h(1, 2), m(1, 4);
  const std::array<std::pair<Rat, Rat>, 6> point_params = {
      {{Rat(0), -h}, {h, -h}, {h, Rat(0)}, {Rat(0), h}, {-h, h}, {-h, Rat(0)}}};
  const std::array<std::pair<Rat, Rat>, 6> arc_params = {
      {{m, -h}, {h, -m}, {h, m}, {-m, h}, {-h, m}, {-m, -h}}};
  const std::array<bool, 6> collision = {false, true, false,
                                         false, true, false};

  std::vector<LabelledGraph> graphs;
  for (const auto& [s, u] : point_params) {
    LabelledGraph g = pair_graph(sphere_z(s), sphere_zp(t, u));
    report.point_cells.push_back(canonical_form(g));
    graphs.push_back(std::move(g));
  }
  std::vector<LabelledGraph> arc_graphs;
  for (const auto& [s, u] : arc_params) {
    LabelledGraph g = pair_graph(sphere_z(s), sphere_zp(t, u));
    report.arc_cells.push_back(canonical_form(g));
    arc_graphs.push_back(std::move(g));
  }

  // A combinatorial circle: six pairwise-distinct points, and every arc
  // collapses onto both of its endpoint graphs.
  std::set<std::string> point_set(report.point_cells.begin(),
                                  report.point_cells.end());
  report.single_circle = point_set.size() == 6;
  for (int k = 0; k < 6; ++k) {
    if (!collapses_onto(arc_graphs[k], report.point_cells[k]) ||
        !collapses_onto(arc_graphs[k], report.point_cells[(k + 1) % 6]))
      report.single_circle = false;
  }

  // Membership in the completely descending link: no ascending edge
  // anywhere, and every cell except the two degenerate collision points
  // carries the rose in its star.
  report.completely_descending = true;
  for (int k = 0; k < 6; ++k) {
    if (!in_star(arc_graphs[k], report.rose))
      report.completely_descending = false;
    if (!collision[k] && !in_star(graphs[k], report.rose))
      report.completely_descending = false;
  }
  for (const LabelledGraph& g : arc_graphs) graphs.push_back(g);

  report.loops_meet_once = true;
  for (const LabelledGraph& g : graphs) {
    if (!no_ascending_edges(g, report.rose, inverse))
      report.completely_descending = false;
    std::vector<int> first = marking_circle(g, 0), second = marking_circle(g, 1);
    bool ok = single_embedded_circle(g, first) &&
              single_embedded_circle(g, second);
    if (ok) {
      std::set<int> fv, sv, shared_edges;
      for (int e : first) {
        fv.insert(g.edge(e).src);
        fv.insert(g.edge(e).dst);
      }
      for (int e : second) {
        sv.insert(g.edge(e).src);
        sv.insert(g.edge(e).dst);
        if (std::find(first.begin(), first.end(), e) != first.end())
          shared_edges.insert(e);
      }
      int shared_vertices = 0;
      for (int v : fv)
        if (sv.count(v)) ++shared_vertices;
      ok = shared_vertices == 1 && shared_edges.empty();
    }
    if (!ok) report.loops_meet_once = false;
  }
  report.pass = report.single_circle && report.completely_descending &&
                report.loops_meet_once;
  return report;
}

int toy_homology_rank(int rank,
                      const std::vector<std::pair<int, int>>& window) {
  require(rank >= 3, ErrorKind::invalid_input, "rank must be at least 3");
  std::set<std::pair<int, int>> classes(window.begin(), window.end());
  require(classes.count({0, 0}) == 1, ErrorKind::invalid_input,
          "window must contain (0,0)");

  std::set<RoseCoset> roses;
  for (auto [p, q] : classes) roses.insert(max_norm_rose({p, q, rank}));
  require(roses.size() == classes.size(), ErrorKind::internal,
          "maximal roses must be pairwise distinct over the window");

  std::set<std::pair<int, int>> quadrant;
  for (auto [p, q] : classes)
    if (p != 0 && q != 0) quadrant.emplace(std::abs(p), std::abs(q));
  for (auto [p, q] : quadrant) {
    SphereReport cert = sphere_intersection({p, q, 3});
    require(cert.pass, ErrorKind::internal,
            "sphere certificate failed for a window class");
  }

  // One class per isolated critical pair plus one from the band at (0,0).
  int isolated = static_cast<int>(classes.size()) - 1;
  return isolated + 1;
}

}  // namespace tn
