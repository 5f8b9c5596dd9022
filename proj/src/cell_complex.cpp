#include "tn/cell_complex.hpp"

#include <algorithm>
#include <map>

#include "tn/error.hpp"
#include "tn/int_matrix.hpp"
#include "tn/smith.hpp"

namespace tn {
namespace {

// Strict chains of cells, grouped by length; a chain is stored from its
// smallest face up to its largest cell.
std::vector<std::vector<std::vector<int>>> all_chains(
    int n, const std::vector<std::vector<bool>>& below) {
  std::vector<std::vector<std::vector<int>>> by_length;
  std::vector<std::vector<int>> current;
  for (int c = 0; c < n; ++c) current.push_back({c});
  while (!current.empty()) {
    by_length.push_back(current);
    std::vector<std::vector<int>> longer;
    for (const std::vector<int>& chain : current)
      for (int top = 0; top < n; ++top)
        if (below[chain.back()][top]) {
          std::vector<int> extended = chain;
          extended.push_back(top);
          longer.push_back(std::move(extended));
        }
    current = std::move(longer);
  }
  return by_length;
}

int nonzero_diagonal(const SmithResult& s, int rows, int cols) {
  int r = 0;
  for (int i = 0; i < std::min(rows, cols); ++i)
    if (s.d.at(i, i) != 0) ++r;
  return r;
}

}  // namespace

std::vector<HomologyGroup> homology(const CellComplexModel& x) {
  int n = static_cast<int>(x.cells.size());
  if (n == 0) return {};

  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (auto [cell, face] : x.faces) {
    require(cell >= 0 && cell < n && face >= 0 && face < n && cell != face,
            ErrorKind::invalid_input, "malformed face pair");
    below[face][cell] = true;
  }

  auto chains = all_chains(n, below);
  int top = static_cast<int>(chains.size());  // max simplex dimension + 1

  // Index simplices per dimension.
  std::vector<std::map<std::vector<int>, int>> index(top);
  for (int k = 0; k < top; ++k)
    for (int i = 0; i < static_cast<int>(chains[k].size()); ++i)
      index[k][chains[k][i]] = i;

  // Boundary matrix from k-simplices to (k-1)-simplices.
  std::vector<IntMatrix> boundary(top);
  std::vector<int> ranks(top + 1, 0);
  for (int k = 1; k < top; ++k) {
    IntMatrix d(static_cast<int>(chains[k - 1].size()),
                static_cast<int>(chains[k].size()));
    for (int col = 0; col < static_cast<int>(chains[k].size()); ++col) {
      const std::vector<int>& chain = chains[k][col];
      int sign = 1;
      for (std::size_t drop = 0; drop < chain.size(); ++drop) {
        std::vector<int> face;
        for (std::size_t i = 0; i < chain.size(); ++i)
          if (i != drop) face.push_back(chain[i]);
        d.at(index[k - 1].at(face), col) += sign;
        sign = -sign;
      }
    }
    boundary[k] = d;
  }

  std::vector<SmithResult> smith(top);
  for (int k = 1; k < top; ++k) {
    smith[k] = smith_normal_form(boundary[k]);
    ranks[k] = nonzero_diagonal(smith[k], boundary[k].rows(), boundary[k].cols());
  }

  std::vector<HomologyGroup> out(top);
  for (int k = 0; k < top; ++k) {
    int cycles = static_cast<int>(chains[k].size()) - ranks[k];
    out[k].rank = cycles - (k + 1 < top ? ranks[k + 1] : 0);
    if (k + 1 < top) {
      const IntMatrix& d = smith[k + 1].d;
      for (int i = 0; i < std::min(d.rows(), d.cols()); ++i)
        if (d.at(i, i) > 1) out[k].torsion.push_back(d.at(i, i));
    }
  }
  return out;
}

}  // namespace tn
