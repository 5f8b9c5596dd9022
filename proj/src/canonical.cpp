#include "tn/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "tn/error.hpp"

namespace tn {
namespace {

using Record = std::tuple<int, int, std::vector<Int>, Rat>;

std::vector<Int> negated(const std::vector<Int>& v) {
  std::vector<Int> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

Record normalize(int src, int dst, const std::vector<Int>& label,
                 const Rat& length) {
  Record fwd{src, dst, label, length};
  Record rev{dst, src, negated(label), length};
  return std::min(fwd, rev);
}

}  // namespace

LabelledGraph canonical_relabel(const LabelledGraph& g) {
  int v = g.num_vertices();
  require(v <= 8, ErrorKind::resource_limit,
          "canonical encoding is exhaustive over vertex bijections; at most 8 "
          "vertices supported");

  std::vector<int> perm(v);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Record> best;
  bool have = false;
  do {
    std::vector<Record> records;
    records.reserve(g.edges().size());
    for (const Edge& e : g.edges())
      records.push_back(normalize(perm[e.src], perm[e.dst], e.label, e.length));
    std::sort(records.begin(), records.end());
    if (!have || records < best) {
      best = std::move(records);
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Edge> edges;
  edges.reserve(best.size());
  for (const Record& rec : best)
    edges.push_back(Edge{std::get<0>(rec), std::get<1>(rec),
                         std::get<2>(rec), std::get<3>(rec)});
  // The orbit of sorted record lists over all bijections is the same for
  // this copy as for g, and the identity bijection already attains the
  // minimum here, so relabelling twice changes nothing.
  return LabelledGraph(g.rank(), v, std::move(edges));
}

std::string canonical_form(const LabelledGraph& g) {
  LabelledGraph c = canonical_relabel(g);
  std::string out = "r" + std::to_string(g.rank()) + "v" +
                    std::to_string(g.num_vertices()) + "|";
  for (const Edge& e : c.edges())
    out += std::to_string(e.src) + ">" + std::to_string(e.dst) +
           label_str(e.label) + "~" + to_string(e.length) + ";";
  return out;
}

}  // namespace tn
