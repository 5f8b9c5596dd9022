#pragma once

#include <array>
#include <utility>
#include <vector>

#include "tn/bigint.hpp"
#include "tn/rose_enum.hpp"

namespace tn {

// Slope of a matrix row (a,b) as the reduced fraction b/a with
// nonnegative denominator; rows (0,±1) give 1/0.
struct Fraction {
  Int num;
  Int den;
  bool operator==(const Fraction&) const = default;
};

// Star-adjacency picture of the rank-2 coset poset within an entry bound.
// Every 2-vertex graph shared by several stars is resolved onto the
// smallest-norm rose that contains it, which keeps the picture a tree.
struct Rank2TreeReport {
  int bound = 0;
  std::vector<RoseCoset> vertices;            // enumerate_roses(2, bound)
  std::vector<std::pair<int, int>> edges;     // index pairs, first < second
  std::vector<std::array<Fraction, 2>> fractions;  // per vertex, row slopes
  std::vector<bool> in_core;  // all smaller-norm replacements enumerated
  bool acyclic = false;
  bool core_connected = false;
  bool farey_consistent = false;  // adjacent cosets share a slope
};

Fraction row_fraction(const std::vector<Int>& row);

Rank2TreeReport rank2_tree(int bound);

}  // namespace tn
