#pragma once

#include <string>
#include <vector>

namespace tn {

// A blowup direction at a rose: coefficients in {-1,0,+1}, at least two
// nonzero.  An edge realizes a direction and its negative simultaneously, so
// classes are stored sign-canonically (first nonzero coefficient +1).
class IdealEdge {
 public:
  // Canonicalizes the sign; rejects vectors with fewer than two nonzero
  // entries or entries outside {-1,0,1}.
  explicit IdealEdge(const std::vector<int>& coefficients);

  int rank() const { return static_cast<int>(k_.size()); }
  const std::vector<int>& coefficients() const { return k_; }
  int coefficient(int i) const { return k_[i]; }  // 0-based

  std::vector<int> support() const;  // 0-based indices of nonzero entries
  int support_size() const;
  bool is_two_letter() const { return support_size() == 2; }

  std::string str() const;  // e.g. "a1-a3+a4"

  bool operator==(const IdealEdge& rhs) const = default;
  bool operator<(const IdealEdge& rhs) const { return k_ < rhs.k_; }

 private:
  std::vector<int> k_;
};

// Flip the coefficient sign at one support position (0-based index into the
// full vector; must be nonzero there).
IdealEdge opposite(const IdealEdge& iota, int position);

// True iff one class arises from the other by flipping exactly one
// coefficient sign.
bool are_opposite(const IdealEdge& a, const IdealEdge& b);

// True iff sub's support is contained in sup's and the coefficients agree on
// it up to a global sign.  Equal classes count as subordinate.
bool is_subordinate(const IdealEdge& sub, const IdealEdge& sup);

// All classes of the given rank, in increasing order.
std::vector<IdealEdge> all_ideal_edges(int rank);

}  // namespace tn
