#include "tn/rose_enum.hpp"

#include <algorithm>
#include <cstdint>

#include "tn/error.hpp"

namespace tn {

namespace {

// Nonzero vectors in [-b, b]^n with positive first nonzero entry, i.e. one
// representative per sign pair, sorted by norm descending then entries.
std::vector<std::vector<Int>> candidate_rows(int n, int b) {
  std::vector<std::vector<Int>> out;
  std::vector<int> cur(n, -b);
  while (true) {
    int first = 0;
    while (first < n && cur[first] == 0) ++first;
    if (first < n && cur[first] > 0) {
      std::vector<Int> row(n);
      for (int i = 0; i < n; ++i) row[i] = cur[i];
      out.push_back(std::move(row));
    }
    int i = n - 1;
    while (i >= 0 && cur[i] == b) cur[i--] = -b;
    if (i < 0) break;
    ++cur[i];
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    VectorNorm nx = vector_norm(x), ny = vector_norm(y);
    if (nx != ny) return ny < nx;
    return x < y;
  });
  return out;
}

uint32_t mod2_mask(const std::vector<Int>& row) {
  uint32_t m = 0;
  for (std::size_t i = 0; i < row.size(); ++i)
    if (row[i] % 2 != 0) m |= 1u << i;
  return m;
}

struct Search {
  int n;
  std::vector<std::vector<Int>> rows;
  std::vector<VectorNorm> norms;
  std::vector<int> block_end;  // index just past the norm block containing i

  std::vector<int> picked;
  std::vector<uint32_t> gf2;  // reduced masks of picked rows
  std::vector<RoseCoset> found;

  // Reduce m against the picked rows mod 2; zero means dependent.
  uint32_t reduce(uint32_t m) const {
    for (uint32_t b : gf2) {
      uint32_t lead = b & ~(b - 1);  // lowest set bit of the stored basis row
      if (m & lead) m ^= b;
    }
    return m;
  }

  void dfs(int from) {
    int depth = static_cast<int>(picked.size());
    if (depth == n) {
      IntMatrix m(n, n);
      for (int r = 0; r < n; ++r) m.set_row(r, rows[picked[r]]);
      Int d = m.det();
      if (d == 1 || d == -1) found.emplace_back(m);
      return;
    }
    for (int i = from; i < static_cast<int>(rows.size()); ++i) {
      uint32_t red = reduce(mod2_mask(rows[i]));
      if (red == 0) continue;
      picked.push_back(i);
      gf2.push_back(red);
      dfs(block_end[i]);  // next row needs strictly smaller norm
      gf2.pop_back();
      picked.pop_back();
    }
  }
};

}  // namespace

std::vector<RoseCoset> enumerate_roses(int rank, int bound) {
  require(rank >= 1, ErrorKind::invalid_input, "rank must be positive");
  require(bound >= 0, ErrorKind::invalid_input, "bound must be nonnegative");
  require(rank <= 16, ErrorKind::resource_limit, "rank too large to enumerate");
  if (bound == 0) return {};

  Search s;
  s.n = rank;
  s.rows = candidate_rows(rank, bound);
  s.norms.reserve(s.rows.size());
  for (const auto& r : s.rows) s.norms.push_back(vector_norm(r));
  s.block_end.assign(s.rows.size(), 0);
  for (int i = static_cast<int>(s.rows.size()) - 1; i >= 0; --i) {
    if (i + 1 < static_cast<int>(s.rows.size()) && s.norms[i] == s.norms[i + 1])
      s.block_end[i] = s.block_end[i + 1];
    else
      s.block_end[i] = i + 1;
  }
  s.dfs(0);
  std::sort(s.found.begin(), s.found.end());
  return s.found;
}

}  // namespace tn
