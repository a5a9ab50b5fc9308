#pragma once

// Exhaustive integer search in a box under linear constraints, with
// bound-based pruning and lexicographic ordering of symmetric blocks.

#include <cstddef>
#include <string>
#include <vector>

#include "tfd/lattice.hpp"

namespace tfd {

// coef . p >= bound
struct LinearConstraint {
  std::vector<Int> coef;
  Int bound = 0;
  std::string origin;
};

struct SearchProblem {
  int nvars = 0;
  std::vector<Int> lo, hi;
  // Assignment order; defaults to 0..nvars-1 when empty.
  std::vector<int> order;
  // Equal-length variable groups. Consecutive blocks must be lexicographically
  // nonincreasing, and each block must appear contiguously in `order`.
  std::vector<std::vector<int>> blocks;
  std::vector<LinearConstraint> constraints;
};

struct SearchStats {
  std::size_t nodes = 0;
};

// All points of the box satisfying every constraint and the block order.
// The first variable's values are split over `jobs` threads; the output
// order does not depend on the thread count.
std::vector<std::vector<Int>> solve_box(const SearchProblem& problem, int jobs = 1, SearchStats* stats = nullptr);

}  // namespace tfd
