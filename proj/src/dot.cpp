#include "tn/dot.hpp"

#include <sstream>

#include "tn/canonical.hpp"

namespace tn {
namespace {

std::string fraction_str(const Fraction& f) {
  return to_string(f.num) + "/" + to_string(f.den);
}

std::string rows_str(const IntMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < m.rows(); ++r) {
    if (r) os << "; ";
    for (int c = 0; c < m.cols(); ++c) {
      if (c) os << ",";
      os << m.at(r, c);
    }
  }
  os << "]";
  return os.str();
}

}  // namespace

std::string graph_to_dot(const LabelledGraph& g) {
  LabelledGraph c = canonical_relabel(g);
  std::ostringstream os;
  os << "digraph G {\n";
  for (int v = 0; v < c.num_vertices(); ++v) os << "  v" << v << ";\n";
  for (const Edge& e : c.edges())
    os << "  v" << e.src << " -> v" << e.dst << " [label=\""
       << label_str(e.label) << " len=" << to_string(e.length) << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string rank2_tree_to_dot(const Rank2TreeReport& report) {
  std::ostringstream os;
  os << "graph rank2_tree {\n";
  for (std::size_t i = 0; i < report.vertices.size(); ++i) {
    os << "  v" << i << " [label=\"" << rows_str(report.vertices[i].rep())
       << "\\n" << fraction_str(report.fractions[i][0]) << " | "
       << fraction_str(report.fractions[i][1]) << "\""
       << (report.in_core[i] ? ", style=solid" : ", style=dashed") << "];\n";
  }
  for (const auto& [a, b] : report.edges)
    os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace tn
