#include "tn/descending.hpp"

#include <algorithm>

#include "tn/error.hpp"

namespace tn {
namespace {

std::vector<Int> ideal_sum(const IntMatrix& m, const IdealEdge& iota) {
  std::vector<Int> out(m.cols());
  for (int r = 0; r < m.rows(); ++r)
    if (iota.coefficient(r) != 0)
      for (int c = 0; c < m.cols(); ++c)
        out[c] += iota.coefficient(r) * m.at(r, c);
  return out;
}

int sign_of(const Int& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }

// Restriction of iota's coefficients to two support positions.
IdealEdge restriction(const IdealEdge& iota, int a, int b) {
  std::vector<int> k(iota.rank(), 0);
  k[a] = iota.coefficient(a);
  k[b] = iota.coefficient(b);
  return IdealEdge(k);
}

}  // namespace

std::vector<RoseCoset> replacement_cosets(const RoseCoset& rho,
                                          const IdealEdge& iota) {
  require(rho.rank() == iota.rank(), ErrorKind::invalid_input,
          "ideal edge rank must match the rose");
  std::vector<Int> sum = ideal_sum(rho.rep(), iota);
  std::vector<RoseCoset> out;
  for (int i : iota.support()) {
    IntMatrix m = rho.rep();
    m.set_row(i, sum);
    out.emplace_back(m);
  }
  return out;
}

bool is_descending(const RoseCoset& rho, const IdealEdge& iota) {
  require(rho.rank() == iota.rank(), ErrorKind::invalid_input,
          "ideal edge rank must match the rose");
  // Rows are sorted by strictly decreasing norm, so the largest-norm
  // participating row is the first one in the support.
  int top = iota.support().front();
  return vector_norm(ideal_sum(rho.rep(), iota)) <
         vector_norm(rho.rep().row(top));
}

bool is_descending_oracle(const RoseCoset& rho, const IdealEdge& iota) {
  std::vector<RoseCoset> next = replacement_cosets(rho, iota);
  return std::any_of(next.begin(), next.end(), [&](const RoseCoset& sigma) {
    return sigma.norm() < rho.norm();
  });
}

std::vector<IdealEdge> descending_edges(const RoseCoset& rho) {
  std::vector<IdealEdge> out;
  for (const IdealEdge& iota : all_ideal_edges(rho.rank()))
    if (is_descending(rho, iota)) out.push_back(iota);
  return out;
}

ValidationReport forbidden_pair_check(const RoseCoset& rho) {
  for (const IdealEdge& iota : descending_edges(rho)) {
    // Flip the largest-norm participating row: with rows sorted by
    // decreasing norm that is the smallest support index.  Flipping a
    // lesser row can leave both classes descending (both replacement sums
    // may shrink below the dominant row), so only this pair is forbidden.
    IdealEdge flipped = opposite(iota, iota.support().front());
    if (is_descending(rho, flipped))
      return {false, "classes " + iota.str() + " and " + flipped.str() +
                         " both descend at " + rho.rep().str()};
  }
  return {};
}

std::optional<IdealEdge> descending_witness(const RoseCoset& rho) {
  const IntMatrix& m = rho.rep();
  int n = rho.rank();
  for (int k = 0; k < n; ++k) {
    int nonzeros = 0;
    for (int r = 0; r < n; ++r)
      if (m.at(r, k) != 0) ++nonzeros;
    if (nonzeros == 1) {
      // A single-entry column of a unimodular standard representative must
      // be +-1 on the diagonal; anything else breaks the scan's premises.
      require(m.at(k, k) != 0, ErrorKind::internal,
              "single-entry column off the diagonal in a standard "
              "representative");
      continue;
    }
    require(m.at(k, k) != 0, ErrorKind::internal,
            "vanishing diagonal entry in the first mixed column");
    std::vector<int> coeff(n, 0);
    int j = -1;
    for (int r = k + 1; r < n && j < 0; ++r)
      if (m.at(r, k) != 0) j = r;
    if (j >= 0) {
      coeff[k] = 1;
      coeff[j] = -sign_of(m.at(k, k)) * sign_of(m.at(j, k));
    } else {
      for (int r = 0; r < k && j < 0; ++r)
        if (m.at(r, k) != 0) j = r;
      require(j >= 0, ErrorKind::internal,
              "mixed column with no off-diagonal entry");
      coeff[j] = 1;
      coeff[k] = -sign_of(m.at(j, k)) * sign_of(m.at(k, k));
    }
    IdealEdge witness(coeff);
    require(is_descending(rho, witness), ErrorKind::internal,
            "column-scan produced a non-descending witness");
    return witness;
  }
  require(rho.is_identity(), ErrorKind::internal,
          "all columns signed-identity but the coset is not the identity");
  return std::nullopt;
}

IdealEdge subordinate_2letter(const RoseCoset& rho, const IdealEdge& iota) {
  require(is_descending(rho, iota), ErrorKind::invalid_input,
          "subordinate scan expects a descending class");
  if (iota.is_two_letter()) return iota;

  const IntMatrix& m = rho.rep();
  std::vector<int> rows = iota.support();  // already in decreasing-norm order
  // Columns with any participating entry, in order; the deleted ones vanish
  // on every participating row, so they never affect a norm comparison.
  std::vector<int> cols;
  for (int c = 0; c < m.cols(); ++c)
    for (int r : rows)
      if (m.at(r, c) != 0) {
        cols.push_back(c);
        break;
      }
  auto entry = [&](int i, int j) {  // signed rows of the restricted matrix
    return Int(iota.coefficient(rows[i])) * m.at(rows[i], cols[j]);
  };

  std::vector<std::pair<int, int>> candidates;
  int m_rows = static_cast<int>(rows.size());
  int first_col_nonzeros = 0;
  for (int i = 0; i < m_rows; ++i)
    if (entry(i, 0) != 0) ++first_col_nonzeros;
  require(entry(0, 0) != 0, ErrorKind::internal,
          "restricted first column vanishes on the largest row");

  if (first_col_nonzeros >= 2) {
    int flip = sign_of(entry(0, 0));
    for (int i = 1; i < m_rows; ++i)
      if (flip * sign_of(entry(i, 0)) < 0) candidates.emplace_back(0, i);
  } else if (static_cast<int>(cols.size()) >= 2 && m_rows >= 2 &&
             entry(1, 1) != 0) {
    int flip = sign_of(entry(1, 1));
    bool lower = false, negative = false;
    for (int i = 2; i < m_rows; ++i) {
      if (entry(i, 1) != 0) lower = true;
      if (flip * sign_of(entry(i, 1)) < 0) negative = true;
    }
    if (!lower) {
      candidates.emplace_back(0, 1);
    } else if (negative) {
      for (int i = 2; i < m_rows; ++i)
        if (flip * sign_of(entry(i, 1)) < 0) candidates.emplace_back(1, i);
    } else if (flip * sign_of(entry(0, 1)) < 0) {
      for (int i = 2; i < m_rows; ++i)
        if (flip * sign_of(entry(i, 1)) > 0) candidates.emplace_back(0, i);
    }
  }

  for (auto [i, j] : candidates) {
    IdealEdge sub = restriction(iota, rows[i], rows[j]);
    if (is_descending(rho, sub)) return sub;
  }
  // The column analysis is a heuristic; the full scan below is the contract.
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      IdealEdge sub = restriction(iota, rows[i], rows[j]);
      if (is_descending(rho, sub)) return sub;
    }
  fail(ErrorKind::internal,
       "descending class " + iota.str() +
           " has no descending 2-letter restriction at " + rho.rep().str());
}

DescendingLinkModel descending_link(const RoseCoset& rho) {
  require(!rho.is_identity(), ErrorKind::invalid_input,
          "the identity coset has an empty descending link");
  std::vector<IdealEdge> edges = descending_edges(rho);
  require(!edges.empty(), ErrorKind::internal,
          "non-identity coset with an empty descending link");

  DescendingLinkModel model{rho, std::move(edges), {}, false};
  int n = static_cast<int>(model.edges.size());
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const IdealEdge &a = model.edges[i], &b = model.edges[j];
      bool nested = is_subordinate(a, b) || is_subordinate(b, a);
      bool two_letter =
          a.is_two_letter() && b.is_two_letter() && !are_opposite(a, b);
      if (nested || two_letter) {
        model.adjacency.emplace_back(i, j);
        parent[find(i)] = find(j);
      }
    }
  int components = 0;
  for (int i = 0; i < n; ++i)
    if (find(i) == i) ++components;
  model.connected = components == 1;
  return model;
}

bool descending_link_connected(const RoseCoset& rho) {
  return descending_link(rho).connected;
}

}  // namespace tn
