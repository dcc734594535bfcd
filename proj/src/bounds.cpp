#include "cot/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "cot/analysis.hpp"
#include "cot/instances.hpp"
#include "cot/matchers.hpp"
#include "cot/parallel.hpp"
#include "cot/rng.hpp"

namespace cot {

BoundReport make_report(std::string name, double lhs, double rhs, BoundContext ctx) {
    BoundReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs - lhs;
    r.passed = lhs <= rhs + 1e-9 * std::max(1.0, std::abs(rhs));
    r.context = ctx;
    return r;
}

double theorem1_bound(std::size_t n, double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("theorem1_bound: requires 0 < p < 1");
    if (n < 1) throw std::invalid_argument("theorem1_bound: n must be >= 1");
    double s = 0.0;
    for (std::size_t k = n; k >= 1; --k)  // small terms first
        s += std::pow(static_cast<double>(k), -2.0 * p);
    return std::pow(static_cast<double>(n) + 1.0, p) * s;
}

BoundReport holder_bound_check(const PointSet& X, const PointSet& Y, double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("holder_bound_check: requires 0 < p < 1");
    const std::size_t n = X.size();
    const double lhs = optimal_match(X, Y, CostSpec::power(p)).total_cost;
    const double rhs = std::pow(w1(X, Y), p) * std::pow(static_cast<double>(n), 1.0 - p);
    return make_report("holder", lhs, rhs, {n, X.dim(), p, 0});
}

namespace {

PointSet subset(const PointSet& P, const std::vector<int>& keep) {
    std::vector<double> coords;
    coords.reserve(keep.size() * static_cast<std::size_t>(P.dim()));
    for (int i : keep) {
        const auto pt = P.point(static_cast<std::size_t>(i));
        coords.insert(coords.end(), pt.begin(), pt.end());
    }
    return PointSet(std::move(coords), P.dim());
}

}  // namespace

std::vector<BoundReport> greedy_recursion_check(const PointSet& X, const PointSet& Y) {
    const std::size_t n = X.size();
    if (n > 200)
        throw std::invalid_argument("greedy_recursion_check: n > 200 (needs a W1 solve per step)");
    const Matching g = greedy_match(X, Y);
    const double w1_full = w1(X, Y);

    std::vector<int> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) xs[i] = static_cast<int>(i);
    ys = xs;

    std::vector<BoundReport> reports;
    double w1_k = w1_full;
    for (std::size_t k = 1; k <= n; ++k) {
        const double ck = g.step_minima[k - 1];
        const double surv = static_cast<double>(n - k + 1);
        const BoundContext ctx{n, X.dim(), 1.0, 0};

        reports.push_back(make_report("pigeonhole[k=" + std::to_string(k) + "]", ck,
                                      w1_k / surv, ctx));
        reports.push_back(make_report("w1_drift[k=" + std::to_string(k) + "]", w1_k,
                                      (static_cast<double>(n) + 1.0) / (surv + 1.0) * w1_full,
                                      ctx));
        reports.push_back(make_report("step_ck[k=" + std::to_string(k) + "]", ck,
                                      (static_cast<double>(n) + 1.0) / (surv * surv) * w1_full,
                                      ctx));

        // remove the k-th greedy pair and recompute W1
        const MatchEdge& e = g.edges[k - 1];
        xs.erase(std::find(xs.begin(), xs.end(), e.i));
        ys.erase(std::find(ys.begin(), ys.end(), e.j));
        if (k < n) {
            const double w1_next = w1(subset(X, xs), subset(Y, ys));
            reports.push_back(make_report("w1_growth[k=" + std::to_string(k) + "]", w1_next,
                                          w1_k + ck, ctx));
            w1_k = w1_next;
        }
    }
    return reports;
}

double unit_ball_volume(int d) {
    if (d < 1) throw std::invalid_argument("unit_ball_volume: d must be >= 1");
    // pi^{d/2} / Gamma(1 + d/2), evaluated via omega_d = (2*pi/d) * omega_{d-2}
    // so that small integer dimensions (omega_1 = 2, omega_2 = pi) are exact
    double v = (d % 2 == 0) ? 1.0 : 2.0;
    for (int k = (d % 2 == 0) ? 2 : 3; k <= d; k += 2) v *= 2.0 * std::numbers::pi / k;
    return v;
}

double beta_lower_bound(double p, int d) {
    if (!(p > 0.0 && p < d / 2.0))
        throw std::invalid_argument("beta_lower_bound: requires 0 < p < d/2");
    return std::pow(unit_ball_volume(d), -p / d) * std::tgamma(1.0 + p / static_cast<double>(d));
}

std::pair<double, double> corollary3_interval(double p) {
    if (!(p > 0.0 && p < 0.5))
        throw std::invalid_argument("corollary3_interval: requires 0 < p < 1/2");
    const double low = std::pow(2.0, -p) * std::tgamma(1.0 + p);
    const double high = std::pow(2.0, p) / ((1.0 - 2.0 * p) * std::tgamma(1.0 - p));
    return {low, high};
}

BetaEstimate beta_estimate(double p, int d, std::size_t n, int trials, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("beta_estimate: n must be >= 2");
    if (trials < 1) throw std::invalid_argument("beta_estimate: trials must be >= 1");
    const double scale = std::pow(static_cast<double>(n), p / d - 1.0);

    std::vector<double> vals(static_cast<std::size_t>(trials));
    parallel_for(trials, [&](int t) {
        InstanceSpec is;
        is.n = n;
        is.d = d;
        is.seed = trial_seed(seed, static_cast<std::uint64_t>(t));
        const Instance inst = generate(is);
        vals[static_cast<std::size_t>(t)] =
            scale * optimal_match(inst.X, inst.Y, CostSpec::power(p)).total_cost;
    });

    BetaEstimate est;
    est.p = p;
    est.d = d;
    est.n = n;
    est.trials = trials;
    est.mean = pairwise_sum(vals) / trials;
    if (trials > 1) {
        double ss = 0.0;
        for (double v : vals) ss += (v - est.mean) * (v - est.mean);
        est.stderr_ = std::sqrt(ss / (trials - 1)) / std::sqrt(static_cast<double>(trials));
    }
    return est;
}

double nearest_neighbor_tail(std::size_t n, int d, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("nearest_neighbor_tail: eps must be > 0");
    const double mass = unit_ball_volume(d) * std::pow(eps, d);
    if (mass > 1.0) return 0.0;
    return std::pow(1.0 - mass, static_cast<double>(n));
}

std::optional<int> prop3_extreme_check(const PointSet& X, const PointSet& Y, int k_max) {
    const std::size_t n = X.size();
    if (n > 7)
        throw std::invalid_argument("prop3_extreme_check: n > 7");
    const DistanceMatrix dm = distance_matrix(X, Y);
    std::set<double> seen;
    for (double d : dm.entries()) {
        if (!(d > 0.0 && d < 1.0))
            throw std::domain_error("prop3_extreme_check: pairwise distances must lie in (0, 1)");
        if (!seen.insert(d).second)
            throw std::invalid_argument("prop3_extreme_check: pairwise distances must be unique");
    }

    const Matching g = greedy_match(X, Y);
    std::vector<char> agree(static_cast<std::size_t>(k_max) + 1, 0);
    for (int k = 0; k <= k_max; ++k) {
        const Matching b = brute_force_match(X, Y, CostSpec::odd_log_power(k));
        agree[static_cast<std::size_t>(k)] = (b.perm == g.perm) ? 1 : 0;
    }
    if (!agree[static_cast<std::size_t>(k_max)]) return std::nullopt;
    int K = k_max;
    while (K > 0 && agree[static_cast<std::size_t>(K) - 1]) --K;
    return K;
}

}  // namespace cot
