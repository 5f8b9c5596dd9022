#include "tn/ideal_edge.hpp"

#include <algorithm>

#include "tn/error.hpp"

namespace tn {

IdealEdge::IdealEdge(const std::vector<int>& coefficients) : k_(coefficients) {
  int nonzero = 0, first = 0;
  for (int c : k_) {
    require(c >= -1 && c <= 1, ErrorKind::invalid_input,
            "ideal edge coefficients must lie in {-1,0,1}");
    if (c != 0 && nonzero++ == 0) first = c;
  }
  require(nonzero >= 2, ErrorKind::invalid_input,
          "an ideal edge needs at least two nonzero coefficients");
  if (first < 0)
    for (int& c : k_) c = -c;
}

std::vector<int> IdealEdge::support() const {
  std::vector<int> s;
  for (int i = 0; i < rank(); ++i)
    if (k_[i] != 0) s.push_back(i);
  return s;
}

int IdealEdge::support_size() const {
  return static_cast<int>(support().size());
}

std::string IdealEdge::str() const {
  std::string out;
  for (int i = 0; i < rank(); ++i) {
    if (k_[i] == 0) continue;
    if (k_[i] > 0 && !out.empty())
      out += "+";
    else if (k_[i] < 0)
      out += "-";
    out += "a" + std::to_string(i + 1);
  }
  return out;
}

IdealEdge opposite(const IdealEdge& iota, int position) {
  require(position >= 0 && position < iota.rank() &&
              iota.coefficient(position) != 0,
          ErrorKind::invalid_input, "opposite needs a nonzero position");
  std::vector<int> k = iota.coefficients();
  k[position] = -k[position];
  return IdealEdge(k);
}

bool are_opposite(const IdealEdge& a, const IdealEdge& b) {
  if (a.rank() != b.rank()) return false;
  int diff = 0, total = 0;
  for (int i = 0; i < a.rank(); ++i) {
    if ((a.coefficient(i) == 0) != (b.coefficient(i) == 0)) return false;
    if (a.coefficient(i) != 0) {
      ++total;
      if (a.coefficient(i) != b.coefficient(i)) ++diff;
    }
  }
  // A single flip at the leading position re-canonicalizes to a flip of all
  // the other signs.
  return diff == 1 || diff == total - 1;
}

bool is_subordinate(const IdealEdge& sub, const IdealEdge& sup) {
  if (sub.rank() != sup.rank()) return false;
  int sign = 0;
  for (int i = 0; i < sub.rank(); ++i) {
    int a = sub.coefficient(i), b = sup.coefficient(i);
    if (a == 0) continue;
    if (b == 0) return false;
    if (sign == 0)
      sign = a * b;
    else if (a * b != sign)
      return false;
  }
  return true;
}

std::vector<IdealEdge> all_ideal_edges(int rank) {
  require(rank >= 2 && rank <= 16, ErrorKind::invalid_input,
          "rank out of range");
  std::vector<IdealEdge> out;
  std::vector<int> k(rank, -1);
  while (true) {
    int nonzero = 0, first = 0;
    for (int c : k)
      if (c != 0 && nonzero++ == 0) first = c;
    if (nonzero >= 2 && first > 0) out.emplace_back(k);
    int i = rank - 1;
    while (i >= 0 && k[i] == 1) k[i--] = -1;
    if (i < 0) break;
    ++k[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tn
