#pragma once

#include <cstddef>
#include <vector>

namespace cot {

struct AssignmentResult {
    std::vector<int> row_to_col;
    double total = 0.0;
};

// Exact dense linear assignment, shortest augmenting path with dual
// potentials (Jonker-Volgenant family), O(n^3). cost is n x n row-major
// and must be nonnegative; callers with negative entries shift first.
AssignmentResult solve_assignment(const std::vector<double>& cost, std::size_t n);

}  // namespace cot
