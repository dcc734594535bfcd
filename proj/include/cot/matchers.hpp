#pragma once

#include <string>
#include <vector>

#include "cot/cost.hpp"
#include "cot/geometry.hpp"

namespace cot {

enum class Method { Greedy, Dyck, Optimal, Sorted, BruteForce };

std::string method_name(Method m);

struct MatchEdge {
    int i = 0;       // index into X
    int j = 0;       // index into Y
    double dist = 0.0;
    double cost = 0.0;
};

// Common matching record. perm[i] = j means x_i is matched to y_j
// (0-based). For Greedy, edges are in selection order and step_minima
// is the sequence of per-step surviving minima (equal to the edge
// distances in that order).
struct Matching {
    Method method = Method::Greedy;
    std::vector<int> perm;
    std::vector<MatchEdge> edges;
    std::vector<double> step_minima;  // Greedy only
    double total_cost = 0.0;
};

// Match the globally closest surviving pair, remove both, repeat.
// Independent of the cost function; edge costs are distances (p = 1).
// Ties broken by smallest (i, j) lexicographically.
Matching greedy_match(const PointSet& X, const PointSet& Y);

// 1D only: merge-sort the 2n points, scan with a stack, match a point
// against a top of the opposite color (balanced-parentheses pairing).
// Coincident red/blue coordinates: red first.
Matching dyck_match(const PointSet& X, const PointSet& Y);

// Exact minimum-cost matching under spec via the assignment solver.
// Negative entries (log costs) are handled by a uniform shift, which
// preserves the argmin; the reported cost is un-shifted.
Matching optimal_match(const PointSet& X, const PointSet& Y, const CostSpec& spec);

// 1D only: i-th order statistic of X to i-th order statistic of Y,
// expressed in original indices. Optimal for p >= 1.
Matching sorted_match(const PointSet& X, const PointSet& Y);

// Exhaustive minimum over all n! permutations, n <= 9. OddLogPower
// objectives are compared in the log domain so that large k does not
// overflow. Ties broken lexicographically on the permutation.
Matching brute_force_match(const PointSet& X, const PointSet& Y, const CostSpec& spec);

// W_1: sorted matching in 1D, assignment solver at p = 1 otherwise.
double w1(const PointSet& X, const PointSet& Y);

}  // namespace cot
