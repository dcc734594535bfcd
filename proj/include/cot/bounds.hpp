#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cot/cost.hpp"
#include "cot/geometry.hpp"

namespace cot {

struct BoundContext {
    std::size_t n = 0;
    int d = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
};

// Evaluated inequality lhs <= rhs with slack and pass flag.
struct BoundReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool passed = false;
    BoundContext context;
};

BoundReport make_report(std::string name, double lhs, double rhs, BoundContext ctx = {});

struct BetaEstimate {
    double p = 0.0;
    int d = 0;
    std::size_t n = 0;
    int trials = 0;
    double mean = 0.0;    // mean of n^{p/d - 1} * W_p^p over trials
    double stderr_ = 0.0;  // sample std / sqrt(trials)
};

// Finite-n constant from the three-regime bound's proof:
// B(n, p) = (n+1)^p * sum_{k=1..n} k^{-2p}, summed exactly.
double theorem1_bound(std::size_t n, double p);

// W_p^p(X,Y) <= W_1(X,Y)^p * n^{1-p} (Hoelder).
BoundReport holder_bound_check(const PointSet& X, const PointSet& Y, double p);

// Replays the greedy removal sequence; at each step k emits reports for
//   w1_growth:  W1(X_{k+1}, Y_{k+1}) <= W1(X_k, Y_k) + c_k
//   pigeonhole: c_k <= W1(X_k, Y_k) / (n-k+1)
//   w1_drift:   W1(X_k, Y_k) <= (n+1)/(n-k+2) * W1(X, Y)
//   step_ck:    c_k <= (n+1)/(n-k+1)^2 * W1(X, Y)
std::vector<BoundReport> greedy_recursion_check(const PointSet& X, const PointSet& Y);

// Volume of the unit ball in R^d.
double unit_ball_volume(int d);

// beta_d(p) >= omega_d^{-p/d} * Gamma(1 + p/d), valid for 0 < p < d/2.
double beta_lower_bound(double p, int d);

// Two-sided interval for beta_1(p), 0 < p < 1/2:
// [2^{-p} Gamma(1+p), 2^p / ((1-2p) Gamma(1-p))].
std::pair<double, double> corollary3_interval(double p);

// Monte Carlo estimate of n^{p/d - 1} * W_p^p over iid uniform
// instances on [0,1]^d.
BetaEstimate beta_estimate(double p, int d, std::size_t n, int trials, std::uint64_t seed);

// P(min_i |Y - X_i| >= eps) = (1 - omega_d eps^d)^n for Y away from
// the boundary; 0 once omega_d eps^d > 1.
double nearest_neighbor_tail(std::size_t n, int d, double eps);

// Smallest K <= k_max such that for all k in [K, k_max] the brute-force
// argmin of the (log d)^{2k+1} objective equals the greedy permutation;
// nullopt if not stabilized by k_max.
std::optional<int> prop3_extreme_check(const PointSet& X, const PointSet& Y, int k_max = 200);

}  // namespace cot
