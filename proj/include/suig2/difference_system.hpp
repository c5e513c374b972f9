#pragma once

#include <vector>

#include "suig2/rational.hpp"

namespace suig2 {

// x_i - x_j <= bound, or < bound when strict. Index -1 stands for the
// constant 0, so unary bounds (x_i <= b, -x_i <= b) need no extra variable.
struct DiffConstraint {
  int i = 0;
  int j = 0;
  Rat bound;
  bool strict = false;
};

struct DifferenceSystem {
  int num_vars = 0;
  std::vector<DiffConstraint> constraints;
};

struct DiffSolution {
  bool feasible = false;
  // feasible: one exact assignment; strict constraints hold with positive
  // slack (at least 1/(4 * num_vars) when all bounds are integers)
  std::vector<Rat> values;
  // infeasible: indices of constraints forming a negative cycle
  std::vector<int> cycle;
};

// Bellman-Ford over the constraint graph with two-part lexicographic weights
// (rational bound, strict-edge count), so strictness never relies on a fudge
// constant chosen before solving.
DiffSolution solve_difference_system(const DifferenceSystem& ds);

}  // namespace suig2
