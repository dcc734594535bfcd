#include "cot/matchers.hpp"

#include "cot/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace cot {

namespace {

void require_same_size(const PointSet& X, const PointSet& Y) {
    if (X.size() != Y.size())
        throw std::invalid_argument("matcher: |X| != |Y|");
    if (X.dim() != Y.dim())
        throw std::invalid_argument("matcher: dimension mismatch");
    if (X.size() == 0)
        throw std::invalid_argument("matcher: empty point sets");
}

double total_of(const std::vector<MatchEdge>& edges) {
    std::vector<double> costs(edges.size());
    for (std::size_t k = 0; k < edges.size(); ++k) costs[k] = edges[k].cost;
    return pairwise_sum(costs);
}

Matching from_perm(Method method, const PointSet& X, const PointSet& Y,
                   const std::vector<int>& perm, const CostSpec& spec) {
    Matching m;
    m.method = method;
    m.perm = perm;
    m.edges.reserve(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        const double d = distance(X.point(i), Y.point(static_cast<std::size_t>(perm[i])));
        m.edges.push_back({static_cast<int>(i), perm[i], d, cost_eval(spec, d)});
    }
    m.total_cost = total_of(m.edges);
    return m;
}

}  // namespace

std::string method_name(Method m) {
    switch (m) {
        case Method::Greedy: return "greedy";
        case Method::Dyck: return "dyck";
        case Method::Optimal: return "optimal";
        case Method::Sorted: return "sorted";
        case Method::BruteForce: return "brute_force";
    }
    return "?";
}

Matching greedy_match(const PointSet& X, const PointSet& Y) {
    require_same_size(X, Y);
    const std::size_t n = X.size();

    struct Pair {
        double dist;
        int i, j;
    };
    std::vector<Pair> pairs;
    pairs.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto xi = X.point(i);
        for (std::size_t j = 0; j < n; ++j)
            pairs.push_back({distance(xi, Y.point(j)), static_cast<int>(i), static_cast<int>(j)});
    }
    std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
        if (a.dist != b.dist) return a.dist < b.dist;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });

    Matching m;
    m.method = Method::Greedy;
    m.perm.assign(n, -1);
    std::vector<char> x_used(n, 0), y_used(n, 0);
    for (const Pair& pr : pairs) {
        if (x_used[static_cast<std::size_t>(pr.i)] || y_used[static_cast<std::size_t>(pr.j)])
            continue;
        x_used[static_cast<std::size_t>(pr.i)] = 1;
        y_used[static_cast<std::size_t>(pr.j)] = 1;
        m.perm[static_cast<std::size_t>(pr.i)] = pr.j;
        m.edges.push_back({pr.i, pr.j, pr.dist, pr.dist});
        m.step_minima.push_back(pr.dist);
        if (m.edges.size() == n) break;
    }
    m.total_cost = total_of(m.edges);
    return m;
}

Matching dyck_match(const PointSet& X, const PointSet& Y) {
    require_same_size(X, Y);
    if (X.dim() != 1)
        throw std::invalid_argument("dyck_match: requires dimension 1");
    const std::size_t n = X.size();

    struct Event {
        double x;
        int color;  // 0 = red (X), 1 = blue (Y)
        int idx;
    };
    std::vector<Event> ev;
    ev.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) ev.push_back({X.point(i)[0], 0, static_cast<int>(i)});
    for (std::size_t j = 0; j < n; ++j) ev.push_back({Y.point(j)[0], 1, static_cast<int>(j)});
    std::stable_sort(ev.begin(), ev.end(), [](const Event& a, const Event& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.color < b.color;  // red before blue at equal coordinate
    });

    Matching m;
    m.method = Method::Dyck;
    m.perm.assign(n, -1);
    std::vector<Event> stack;
    for (const Event& e : ev) {
        if (stack.empty() || stack.back().color == e.color) {
            stack.push_back(e);
            continue;
        }
        const Event top = stack.back();
        stack.pop_back();
        const int i = (top.color == 0) ? top.idx : e.idx;
        const int j = (top.color == 0) ? e.idx : top.idx;
        m.perm[static_cast<std::size_t>(i)] = j;
        const double d = std::abs(X.point(static_cast<std::size_t>(i))[0] -
                                  Y.point(static_cast<std::size_t>(j))[0]);
        m.edges.push_back({i, j, d, d});
    }
    // counts are equal, so the stack drains
    m.total_cost = total_of(m.edges);
    return m;
}

Matching optimal_match(const PointSet& X, const PointSet& Y, const CostSpec& spec) {
    require_same_size(X, Y);
    const std::size_t n = X.size();
    const DistanceMatrix dm = distance_matrix(X, Y);

    std::vector<double> cost(n * n);
    for (std::size_t e = 0; e < n * n; ++e) cost[e] = cost_eval(spec, dm.entries()[e]);

    const double lo = *std::min_element(cost.begin(), cost.end());
    if (lo < 0.0)
        for (double& c : cost) c -= lo;

    const AssignmentResult res = solve_assignment(cost, n);

    Matching m;
    m.method = Method::Optimal;
    m.perm = res.row_to_col;
    m.edges.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = static_cast<std::size_t>(m.perm[i]);
        m.edges.push_back({static_cast<int>(i), static_cast<int>(j), dm(i, j),
                           cost_eval(spec, dm(i, j))});
    }
    m.total_cost = total_of(m.edges);
    return m;
}

Matching sorted_match(const PointSet& X, const PointSet& Y) {
    require_same_size(X, Y);
    if (X.dim() != 1)
        throw std::invalid_argument("sorted_match: requires dimension 1");
    const std::size_t n = X.size();

    std::vector<int> xo(n), yo(n);
    std::iota(xo.begin(), xo.end(), 0);
    std::iota(yo.begin(), yo.end(), 0);
    auto by_coord = [](const PointSet& P) {
        return [&P](int a, int b) {
            return P.point(static_cast<std::size_t>(a))[0] < P.point(static_cast<std::size_t>(b))[0];
        };
    };
    std::stable_sort(xo.begin(), xo.end(), by_coord(X));
    std::stable_sort(yo.begin(), yo.end(), by_coord(Y));

    std::vector<int> perm(n);
    for (std::size_t r = 0; r < n; ++r)
        perm[static_cast<std::size_t>(xo[r])] = yo[r];
    return from_perm(Method::Sorted, X, Y, perm, CostSpec::power(1.0));
}

namespace {

double objective_score(const DistanceMatrix& dm, const std::vector<int>& perm,
                       const CostSpec& spec) {
    const std::size_t n = dm.n();
    std::vector<double> costs(n);
    for (std::size_t i = 0; i < n; ++i)
        costs[i] = cost_eval(spec, dm(i, static_cast<std::size_t>(perm[i])));
    return pairwise_sum(costs);
}

double logsumexp(const std::vector<double>& v) {
    if (v.empty()) return -std::numeric_limits<double>::infinity();
    const double mx = *std::max_element(v.begin(), v.end());
    double s = 0.0;
    for (double x : v) s += std::exp(x - mx);
    return mx + std::log(s);
}

// Every OddLogPower term (log d)^(2k+1) is negative for d in (0,1), so the
// objective order is the reverse of the order on the sums of magnitudes.
// A scalar per-permutation score cannot resolve that order in double
// precision once two permutations share a dominant (tiny-distance) edge, so
// compare permutations pairwise: cancel shared edges exactly, then compare
// the remaining magnitudes in the log domain. lmat(i,j) holds
// (2k+1) * log|log d(i,j)|.
bool oddlog_less(const std::vector<double>& lmat, std::size_t n, const std::vector<int>& a,
                 const std::vector<int>& b) {
    std::vector<double> va, vb;
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) {
            va.push_back(lmat[i * n + static_cast<std::size_t>(a[i])]);
            vb.push_back(lmat[i * n + static_cast<std::size_t>(b[i])]);
        }
    // larger magnitude sum means a more negative objective, i.e. smaller
    return logsumexp(va) > logsumexp(vb);
}

}  // namespace

Matching brute_force_match(const PointSet& X, const PointSet& Y, const CostSpec& spec) {
    require_same_size(X, Y);
    const std::size_t n = X.size();
    if (n > 9)
        throw std::invalid_argument("brute_force_match: instance too large (n > 9)");
    const DistanceMatrix dm = distance_matrix(X, Y);

    std::vector<int> perm(n), best(n);
    std::iota(perm.begin(), perm.end(), 0);
    best = perm;
    if (spec.kind == CostKind::OddLogPower) {
        const double e = 2.0 * spec.k + 1.0;
        std::vector<double> lmat(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const double d = dm(i, j);
                if (d <= 0.0 || d >= 1.0)
                    throw std::domain_error(
                        "brute_force_match: odd log power requires distances in (0,1)");
                lmat[i * n + j] = e * std::log(-std::log(d));
            }
        while (std::next_permutation(perm.begin(), perm.end()))
            if (oddlog_less(lmat, n, perm, best)) best = perm;
    } else {
        double best_score = objective_score(dm, perm, spec);
        while (std::next_permutation(perm.begin(), perm.end())) {
            const double s = objective_score(dm, perm, spec);
            if (s < best_score) {
                best_score = s;
                best = perm;
            }
        }
    }
    Matching m = from_perm(Method::BruteForce, X, Y, best,
                           spec.kind == CostKind::OddLogPower ? CostSpec::power(1.0) : spec);
    if (spec.kind == CostKind::OddLogPower) {
        for (auto& e : m.edges) e.cost = cost_eval(spec, e.dist);
        std::vector<double> costs(m.edges.size());
        for (std::size_t i = 0; i < costs.size(); ++i) costs[i] = m.edges[i].cost;
        m.total_cost = pairwise_sum(costs);
    }
    m.method = Method::BruteForce;
    return m;
}

double w1(const PointSet& X, const PointSet& Y) {
    if (X.dim() == 1) return sorted_match(X, Y).total_cost;
    return optimal_match(X, Y, CostSpec::power(1.0)).total_cost;
}

}  // namespace cot
