#pragma once

#include <vector>

#include "flexdist/types.hpp"

namespace flexdist::lsap {

/// An optimal assignment together with the dual potentials that certify it:
/// row_potential[i] + col_potential[j] <= C(i,j) everywhere, with equality
/// (up to rounding) on every selected entry.
struct Solution {
  Assignment assignment;
  std::vector<double> row_potential;
  std::vector<double> col_potential;
};

/// Kuhn-Munkres (Hungarian) method in its shortest-augmenting-path form,
/// O(m^3) time and O(m^2) space (the matrix itself).
///
/// Optimal assignments are the perfect matchings of the equality subgraph
/// (reduced cost within a tolerance scaled to the matrix magnitude). Among
/// them the one with the smallest floating point total is returned, and the
/// lexicographically smallest `target_of` among equal totals, so results are
/// reproducible across runs and platforms. When the equality subgraph may
/// hold more than 2^16 perfect matchings, the lexicographically smallest one
/// is returned without comparing totals. Problems up to 8x8 are always
/// compared in full.
Solution solve_with_duals(const CostMatrix& costs);

Assignment solve(const CostMatrix& costs);

}  // namespace flexdist::lsap
