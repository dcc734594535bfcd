#include "cot/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "cot/instances.hpp"
#include "cot/parallel.hpp"
#include "cot/rng.hpp"

namespace cot {

double matching_cost(const Matching& m, const CostSpec& spec) {
    std::vector<double> costs(m.edges.size());
    for (std::size_t k = 0; k < m.edges.size(); ++k)
        costs[k] = cost_eval(spec, m.edges[k].dist);
    return pairwise_sum(costs);
}

CircleSet mccann_circles(const Matching& m, const PointSet& X, const PointSet& Y) {
    if (X.dim() > 2)
        throw std::invalid_argument("mccann_circles: supported only for d in {1, 2}");
    CircleSet cs;
    cs.circles.reserve(m.edges.size());
    for (const auto& e : m.edges) {
        const auto a = X.point(static_cast<std::size_t>(e.i));
        const auto b = Y.point(static_cast<std::size_t>(e.j));
        Circle c;
        c.center.resize(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) c.center[k] = 0.5 * (a[k] + b[k]);
        c.radius = 0.5 * e.dist;
        cs.circles.push_back(std::move(c));
    }
    return cs;
}

NonCrossingReport noncrossing_check(const Matching& m, const PointSet& X, const PointSet& Y) {
    constexpr double eps = 1e-12;
    NonCrossingReport rep;
    const std::size_t n = m.edges.size();

    if (X.dim() == 1) {
        std::vector<double> lo(n), hi(n);
        for (std::size_t k = 0; k < n; ++k) {
            const double a = X.point(static_cast<std::size_t>(m.edges[k].i))[0];
            const double b = Y.point(static_cast<std::size_t>(m.edges[k].j))[0];
            lo[k] = std::min(a, b);
            hi[k] = std::max(a, b);
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) {
                // cross iff the intervals partially overlap (neither
                // disjoint nor nested), strictly up to eps
                const bool cross =
                    (lo[a] + eps < lo[b] && lo[b] + eps < hi[a] && hi[a] + eps < hi[b]) ||
                    (lo[b] + eps < lo[a] && lo[a] + eps < hi[b] && hi[b] + eps < hi[a]);
                if (cross) {
                    rep.ok = false;
                    rep.violations.emplace_back(static_cast<int>(a), static_cast<int>(b));
                }
            }
        return rep;
    }

    if (X.dim() == 2) {
        const CircleSet cs = mccann_circles(m, X, Y);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) {
                const auto& ca = cs.circles[a];
                const auto& cb = cs.circles[b];
                const double dx = ca.center[0] - cb.center[0];
                const double dy = ca.center[1] - cb.center[1];
                const double cd = std::sqrt(dx * dx + dy * dy);
                const bool intersect = std::abs(ca.radius - cb.radius) + eps < cd &&
                                       cd < ca.radius + cb.radius - eps;
                if (intersect) {
                    rep.ok = false;
                    rep.violations.emplace_back(static_cast<int>(a), static_cast<int>(b));
                }
            }
        return rep;
    }

    throw std::invalid_argument("noncrossing_check: supported only for d in {1, 2}");
}

AgreementCurve agreement_curve(std::size_t n, int d, const CostSpec& spec, int trials,
                               std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("agreement_curve: trials must be >= 1");
    std::vector<std::vector<char>> hits(static_cast<std::size_t>(trials));

    parallel_for(trials, [&](int t) {
        InstanceSpec is;
        is.family = Family::UniformIID;
        is.n = n;
        is.d = d;
        is.seed = trial_seed(seed, static_cast<std::uint64_t>(t));
        const Instance inst = generate(is);
        const Matching g = greedy_match(inst.X, inst.Y);
        const Matching o = optimal_match(inst.X, inst.Y, spec);
        std::vector<char> h(n, 0);
        for (std::size_t step = 0; step < n; ++step) {
            const auto& e = g.edges[step];
            h[step] = (o.perm[static_cast<std::size_t>(e.i)] == e.j) ? 1 : 0;
        }
        hits[static_cast<std::size_t>(t)] = std::move(h);
    });

    AgreementCurve curve;
    curve.trials = trials;
    curve.per_step.assign(n, 0.0);
    for (const auto& h : hits)
        for (std::size_t step = 0; step < n; ++step) curve.per_step[step] += h[step];
    for (double& v : curve.per_step) v /= trials;
    return curve;
}

DisplacementStats displacement_stats(const Matching& m, std::size_t n) {
    DisplacementStats st;
    if (m.edges.empty()) return st;
    std::vector<double> d(m.edges.size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = m.edges[k].dist;
    std::sort(d.begin(), d.end());
    const std::size_t sz = d.size();
    st.median_dist = (sz % 2 == 1) ? d[sz / 2] : 0.5 * (d[sz / 2 - 1] + d[sz / 2]);
    const double t1 = 1.0 / std::sqrt(static_cast<double>(n));
    const double t2 = std::log(static_cast<double>(n)) / std::sqrt(static_cast<double>(n));
    for (double x : d) {
        if (x > t1) ++st.count_over_inv_sqrt_n;
        if (x > t2) ++st.count_over_log_sqrt_n;
    }
    return st;
}

std::size_t order_deviation(const Matching& m, const PointSet& X, const PointSet& Y, int w) {
    if (X.dim() != 1)
        throw std::invalid_argument("order_deviation: requires dimension 1");
    const std::size_t n = X.size();
    auto ranks = [](const PointSet& P) {
        const std::size_t n = P.size();
        std::vector<int> order(n), rank(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&P](int a, int b) {
            return P.point(static_cast<std::size_t>(a))[0] < P.point(static_cast<std::size_t>(b))[0];
        });
        for (std::size_t r = 0; r < n; ++r) rank[static_cast<std::size_t>(order[r])] = static_cast<int>(r);
        return rank;
    };
    const std::vector<int> rx = ranks(X), ry = ranks(Y);
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(rx[i] - ry[static_cast<std::size_t>(m.perm[i])]) > w) ++count;
    return count;
}

}  // namespace cot
