#include "cot/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "cot/instances.hpp"
#include "cot/matchers.hpp"
#include "cot/parallel.hpp"
#include "cot/rng.hpp"

namespace cot {

std::string format_g9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string ExperimentReport::to_csv() const {
    std::string out = "method,n,d,p,trials,mean_cost,mean_ratio,stderr,seed\n";
    for (const auto& r : rows) {
        out += r.method;
        out += ',' + std::to_string(r.n);
        out += ',' + std::to_string(r.d);
        out += ',' + format_g9(r.p);
        out += ',' + std::to_string(r.trials);
        out += ',' + format_g9(r.mean_cost);
        out += ',' + format_g9(r.mean_ratio);
        out += ',' + format_g9(r.stderr_);
        out += ',' + std::to_string(r.seed);
        out += '\n';
    }
    return out;
}

namespace {

struct MeanErr {
    double mean = 0.0;
    double err = 0.0;
};

MeanErr mean_stderr(const std::vector<double>& v) {
    MeanErr me;
    me.mean = pairwise_sum(v) / static_cast<double>(v.size());
    if (v.size() > 1) {
        double ss = 0.0;
        for (double x : v) ss += (x - me.mean) * (x - me.mean);
        me.err = std::sqrt(ss / static_cast<double>(v.size() - 1)) /
                 std::sqrt(static_cast<double>(v.size()));
    }
    return me;
}

std::uint64_t digest_words(std::initializer_list<std::uint64_t> words) {
    std::uint64_t h = 0x243F6A8885A308D3ULL;
    for (std::uint64_t w : words) h = mix64(h ^ w);
    return h;
}

}  // namespace

ExperimentReport ratio_curve(std::size_t n, int d, const std::vector<double>& p_grid,
                             bool with_greedy, bool with_dyck, int trials,
                             std::uint64_t seed) {
    if (p_grid.empty()) throw std::invalid_argument("ratio_curve: empty p grid");
    for (double p : p_grid)
        if (!(p > 0.0 && p <= 1.0))
            throw std::invalid_argument("ratio_curve: p grid must lie in (0, 1]");
    if (with_dyck && d != 1)
        throw std::invalid_argument("ratio_curve: dyck requires d = 1");
    if (trials < 1) throw std::invalid_argument("ratio_curve: trials must be >= 1");

    const std::size_t np = p_grid.size();
    // per trial: greedy cost, dyck cost, optimal cost for each p
    std::vector<std::vector<double>> gcost(np, std::vector<double>(trials)),
        dcost(np, std::vector<double>(trials)), ocost(np, std::vector<double>(trials));

    parallel_for(trials, [&](int t) {
        InstanceSpec is;
        is.n = n;
        is.d = d;
        is.seed = trial_seed(seed, static_cast<std::uint64_t>(t));
        const Instance inst = generate(is);
        const Matching g = with_greedy ? greedy_match(inst.X, inst.Y) : Matching{};
        const Matching dy = with_dyck ? dyck_match(inst.X, inst.Y) : Matching{};
        for (std::size_t ip = 0; ip < np; ++ip) {
            const CostSpec spec = CostSpec::power(p_grid[ip]);
            ocost[ip][static_cast<std::size_t>(t)] =
                optimal_match(inst.X, inst.Y, spec).total_cost;
            if (with_greedy)
                gcost[ip][static_cast<std::size_t>(t)] = matching_cost(g, spec);
            if (with_dyck)
                dcost[ip][static_cast<std::size_t>(t)] = matching_cost(dy, spec);
        }
    });

    ExperimentReport rep;
    rep.tool_version = kToolVersion;
    rep.config_digest = digest_words({n, static_cast<std::uint64_t>(d),
                                      static_cast<std::uint64_t>(trials), seed, np});
    auto emit = [&](const char* method, const std::vector<std::vector<double>>& cost) {
        for (std::size_t ip = 0; ip < np; ++ip) {
            std::vector<double> ratios(static_cast<std::size_t>(trials));
            for (int t = 0; t < trials; ++t)
                ratios[static_cast<std::size_t>(t)] =
                    cost[ip][static_cast<std::size_t>(t)] / ocost[ip][static_cast<std::size_t>(t)];
            const MeanErr me = mean_stderr(ratios);
            ExperimentRow row;
            row.method = method;
            row.n = n;
            row.d = d;
            row.p = p_grid[ip];
            row.trials = trials;
            row.mean_cost = mean_stderr(cost[ip]).mean;
            row.mean_ratio = me.mean;
            row.stderr_ = me.err;
            row.seed = seed;
            rep.rows.push_back(std::move(row));
        }
    };
    if (with_greedy) emit("greedy", gcost);
    if (with_dyck) emit("dyck", dcost);
    return rep;
}

ExperimentReport dimension_table(std::size_t n, const std::vector<int>& dims,
                                 const std::vector<double>& p_values, int trials,
                                 std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("dimension_table: n must be >= 2");
    ExperimentReport rep;
    rep.tool_version = kToolVersion;
    rep.config_digest = digest_words({n, dims.size(), p_values.size(),
                                      static_cast<std::uint64_t>(trials), seed});
    for (double p : p_values) {
        for (int d : dims) {
            const ExperimentReport sub = ratio_curve(n, d, {p}, true, false, trials,
                                                     mix64(seed ^ static_cast<std::uint64_t>(d)));
            rep.rows.push_back(sub.rows.front());
        }
    }
    return rep;
}

std::string agreement_experiment(std::size_t n, const CostSpec& spec, int trials,
                                 std::uint64_t seed) {
    const AgreementCurve curve = agreement_curve(n, 1, spec, trials, seed);
    std::string out = "step,agreement\n";
    for (std::size_t s = 0; s < curve.per_step.size(); ++s)
        out += std::to_string(s + 1) + ',' + format_g9(curve.per_step[s]) + '\n';
    return out;
}

CrossoverResult crossover_from_curves(const std::vector<double>& p_grid,
                                      const std::vector<double>& greedy_mean,
                                      const std::vector<double>& greedy_err,
                                      const std::vector<double>& dyck_mean,
                                      const std::vector<double>& dyck_err) {
    CrossoverResult res;
    for (std::size_t i = 0; i + 1 < p_grid.size(); ++i) {
        const double d0 = greedy_mean[i] - dyck_mean[i];
        const double d1 = greedy_mean[i + 1] - dyck_mean[i + 1];
        if (d0 == 0.0) {
            res.p_star = p_grid[i];
            res.lo = res.hi = p_grid[i];
            return res;
        }
        if (d0 * d1 < 0.0) {
            const double slope = (d1 - d0) / (p_grid[i + 1] - p_grid[i]);
            const double p_star = p_grid[i] - d0 / slope;
            const double s0 = std::hypot(greedy_err[i], dyck_err[i]);
            const double s1 = std::hypot(greedy_err[i + 1], dyck_err[i + 1]);
            const double sigma = std::max(s0, s1) / std::abs(slope);
            res.p_star = p_star;
            res.lo = std::max(p_grid[i], p_star - sigma);
            res.hi = std::min(p_grid[i + 1], p_star + sigma);
            return res;
        }
    }
    return res;  // no crossing in the grid
}

CrossoverResult crossover_scan(std::size_t n, const std::vector<double>& p_grid, int trials,
                               std::uint64_t seed) {
    const ExperimentReport rep = ratio_curve(n, 1, p_grid, true, true, trials, seed);
    const std::size_t np = p_grid.size();
    std::vector<double> gm(np), ge(np), dm(np), de(np);
    for (std::size_t i = 0; i < np; ++i) {
        gm[i] = rep.rows[i].mean_ratio;
        ge[i] = rep.rows[i].stderr_;
        dm[i] = rep.rows[np + i].mean_ratio;
        de[i] = rep.rows[np + i].stderr_;
    }
    return crossover_from_curves(p_grid, gm, ge, dm, de);
}

}  // namespace cot
