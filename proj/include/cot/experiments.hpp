#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cot/analysis.hpp"
#include "cot/cost.hpp"

namespace cot {

struct ExperimentRow {
    std::string method;
    std::size_t n = 0;
    int d = 0;
    double p = 0.0;
    int trials = 0;
    double mean_cost = 0.0;
    double mean_ratio = 0.0;  // ratio to the exact optimal cost
    double stderr_ = 0.0;     // stderr of the ratio
    std::uint64_t seed = 0;
};

struct ExperimentReport {
    std::vector<ExperimentRow> rows;
    std::uint64_t config_digest = 0;
    std::string tool_version;

    // header method,n,d,p,trials,mean_cost,mean_ratio,stderr,seed
    // 9 significant digits, LF line endings
    std::string to_csv() const;
};

inline constexpr const char* kToolVersion = "0.1.0";

// Mean heuristic/optimal cost ratio per (method, p), fresh iid uniform
// instances per trial, trial t seeded with trial_seed(seed, t).
ExperimentReport ratio_curve(std::size_t n, int d, const std::vector<double>& p_grid,
                             bool with_greedy, bool with_dyck, int trials,
                             std::uint64_t seed);

// Grid of mean greedy/optimal ratios over (d, p).
ExperimentReport dimension_table(std::size_t n, const std::vector<int>& dims,
                                 const std::vector<double>& p_values, int trials,
                                 std::uint64_t seed);

// Step index vs empirical greedy/optimal agreement probability, d = 1.
// CSV: header step,agreement.
std::string agreement_experiment(std::size_t n, const CostSpec& spec, int trials,
                                 std::uint64_t seed);

struct CrossoverResult {
    std::optional<double> p_star;
    double lo = 0.0;  // uncertainty interval (stderr-propagated)
    double hi = 0.0;
};

// Crossing point of the greedy and Dyck mean-ratio curves, linear
// interpolation between grid points.
CrossoverResult crossover_scan(std::size_t n, const std::vector<double>& p_grid, int trials,
                               std::uint64_t seed);

// Interpolation core, exposed so synthetic curves can be injected.
CrossoverResult crossover_from_curves(const std::vector<double>& p_grid,
                                      const std::vector<double>& greedy_mean,
                                      const std::vector<double>& greedy_err,
                                      const std::vector<double>& dyck_mean,
                                      const std::vector<double>& dyck_err);

// Shared float formatting, 9 significant digits.
std::string format_g9(double v);

}  // namespace cot
