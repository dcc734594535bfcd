#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cot/cost.hpp"
#include "cot/geometry.hpp"
#include "cot/matchers.hpp"

namespace cot {

// One circle per matched edge: the pair's midpoint and half-distance
// (the circle through both endpoints).
struct Circle {
    std::vector<double> center;
    double radius = 0.0;
};

struct CircleSet {
    std::vector<Circle> circles;
};

struct NonCrossingReport {
    bool ok = true;
    std::vector<std::pair<int, int>> violations;  // edge index pairs
};

// Per-greedy-step probability that the step's pair is also an edge of
// the optimal matching.
struct AgreementCurve {
    std::vector<double> per_step;
    int trials = 0;
};

struct DisplacementStats {
    double median_dist = 0.0;
    std::size_t count_over_inv_sqrt_n = 0;   // edges with dist > 1/sqrt(n)
    std::size_t count_over_log_sqrt_n = 0;   // edges with dist > log(n)/sqrt(n)
};

// Sum of cost_eval over edge distances (pairwise summation).
double matching_cost(const Matching& m, const CostSpec& spec);

// 1D: every two matched intervals disjoint or strictly nested.
// 2D: no two McCann circles properly intersect (tangency tolerated,
// tolerance 1e-12).
NonCrossingReport noncrossing_check(const Matching& m, const PointSet& X, const PointSet& Y);

CircleSet mccann_circles(const Matching& m, const PointSet& X, const PointSet& Y);

// Monte Carlo over iid uniform instances on [0,1]^d.
AgreementCurve agreement_curve(std::size_t n, int d, const CostSpec& spec, int trials,
                               std::uint64_t seed);

DisplacementStats displacement_stats(const Matching& m, std::size_t n);

// 1D: number of matched pairs whose order-statistic ranks differ by
// more than w.
std::size_t order_deviation(const Matching& m, const PointSet& X, const PointSet& Y, int w);

}  // namespace cot
