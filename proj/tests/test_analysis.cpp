#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cot/analysis.hpp"
#include "cot/matchers.hpp"
#include "cot/rng.hpp"

using namespace cot;

namespace {

PointSet pts1d(std::vector<double> xs) { return PointSet::from_1d(std::move(xs)); }

PointSet random_pts(std::size_t n, int d, SplitMix64& rng) {
    std::vector<double> c(n * static_cast<std::size_t>(d));
    for (double& x : c) x = rng.next_double();
    return PointSet(std::move(c), d);
}

Matching explicit_matching(const PointSet& X, const PointSet& Y, std::vector<int> perm) {
    Matching m;
    m.method = Method::Optimal;
    m.perm = std::move(perm);
    for (std::size_t i = 0; i < m.perm.size(); ++i) {
        const double d = distance(X.point(i), Y.point(static_cast<std::size_t>(m.perm[i])));
        m.edges.push_back({static_cast<int>(i), m.perm[i], d, d});
    }
    return m;
}

}  // namespace

TEST_CASE("matching_cost examples") {
    const auto Z = pts1d({0.3, 0.9});
    const Matching id = explicit_matching(Z, Z, {0, 1});
    CHECK(matching_cost(id, CostSpec::power(0.4)) == 0.0);

    const Matching dyck = dyck_match(pts1d({6.0, 6.7, 7.0, 8.0}), pts1d({6.3, 7.5, 9.0, 10.0}));
    CHECK(matching_cost(dyck, CostSpec::power(1.0)) == doctest::Approx(5.1).epsilon(1e-12));

    const Matching g = greedy_match(pts1d({0.0, 0.2, 0.9}), pts1d({0.11, 0.5, 1.0}));
    CHECK(matching_cost(g, CostSpec::power(0.5)) ==
          doctest::Approx(std::sqrt(0.09) + std::sqrt(0.1) + std::sqrt(0.5)).epsilon(1e-12));
    // greedy cost under Power p is exactly sum of step minima^p
    double direct = 0.0;
    for (double c : g.step_minima) direct += std::pow(c, 0.5);
    CHECK(matching_cost(g, CostSpec::power(0.5)) == doctest::Approx(direct).epsilon(1e-15));
}

TEST_CASE("noncrossing_check in 1D") {
    const auto X = pts1d({0.0, 0.5});
    const auto Y = pts1d({1.0, 1.5});
    const auto crossing = noncrossing_check(explicit_matching(X, Y, {0, 1}), X, Y);
    CHECK_FALSE(crossing.ok);
    REQUIRE(crossing.violations.size() == 1);
    CHECK(crossing.violations[0] == std::make_pair(0, 1));

    const auto Xn = pts1d({0.0, 0.2});
    const auto Yn = pts1d({1.0, 0.4});
    CHECK(noncrossing_check(explicit_matching(Xn, Yn, {0, 1}), Xn, Yn).ok);  // nested
}

TEST_CASE("greedy output is non-crossing in 1D") {
    SplitMix64 rng(7);
    for (int t = 0; t < 100; ++t) {
        const auto X = random_pts(25, 1, rng);
        const auto Y = random_pts(25, 1, rng);
        CHECK(noncrossing_check(greedy_match(X, Y), X, Y).ok);
    }
}

TEST_CASE("optimal matching under concave power cost is non-crossing in 1D") {
    SplitMix64 rng(8);
    for (int t = 0; t < 40; ++t) {
        const auto X = random_pts(20, 1, rng);
        const auto Y = random_pts(20, 1, rng);
        CHECK(noncrossing_check(optimal_match(X, Y, CostSpec::power(0.5)), X, Y).ok);
    }
}

TEST_CASE("2D circle predicate: separated, nested, tangent, intersecting") {
    // Two horizontal edges give circles centered on the x-axis; vary the gap
    // to exercise each branch of the strict intersection predicate.
    auto pair2d = [](double ax, double ay, double bx, double by, double cx, double cy,
                     double dx, double dy) {
        const PointSet X({ax, ay, cx, cy}, 2);
        const PointSet Y({bx, by, dx, dy}, 2);
        return std::make_pair(X, Y);
    };
    {  // disjoint: radii 0.5 each, centers 2 apart
        auto [X, Y] = pair2d(0, 0, 1, 0, 2, 0, 3, 0);
        CHECK(noncrossing_check(explicit_matching(X, Y, {0, 1}), X, Y).ok);
    }
    {  // nested: radius 2 circle centered at 0 contains radius 0.5 at 0.5
        auto [X, Y] = pair2d(-2, 0, 2, 0, 0, 0, 1, 0);
        CHECK(noncrossing_check(explicit_matching(X, Y, {0, 1}), X, Y).ok);
    }
    {  // externally tangent: radii 0.5, centers exactly 1 apart — not flagged
        auto [X, Y] = pair2d(0, 0, 1, 0, 1, 0, 2, 0);
        CHECK(noncrossing_check(explicit_matching(X, Y, {0, 1}), X, Y).ok);
    }
    {  // proper intersection: radii 0.5, centers 0.5 apart
        auto [X, Y] = pair2d(0, 0, 1, 0, 0.5, 0, 1.5, 0);
        const auto rep = noncrossing_check(explicit_matching(X, Y, {0, 1}), X, Y);
        CHECK_FALSE(rep.ok);
        REQUIRE(rep.violations.size() == 1);
        CHECK(rep.violations[0] == std::make_pair(0, 1));
    }
}

TEST_CASE("noncrossing_check rejects d >= 3") {
    const PointSet X({0, 0, 0}, 3), Y({1, 1, 1}, 3);
    CHECK_THROWS_AS(noncrossing_check(explicit_matching(X, Y, {0}), X, Y),
                    std::invalid_argument);
}

TEST_CASE("mccann_circles") {
    const auto X = pts1d({0.0});
    const auto Y = pts1d({1.0});
    const auto cs = mccann_circles(explicit_matching(X, Y, {0}), X, Y);
    CHECK(cs.circles[0].center[0] == doctest::Approx(0.5));
    CHECK(cs.circles[0].radius == doctest::Approx(0.5));

    const PointSet X2({0.0, 0.0}, 2), Y2({0.0, 1.0}, 2);
    const auto cs2 = mccann_circles(explicit_matching(X2, Y2, {0}), X2, Y2);
    CHECK(cs2.circles[0].center[0] == doctest::Approx(0.0));
    CHECK(cs2.circles[0].center[1] == doctest::Approx(0.5));
    CHECK(cs2.circles[0].radius == doctest::Approx(0.5));

    const auto Xf = pts1d({6.7});
    const auto Yf = pts1d({10.0});
    const auto cs3 = mccann_circles(explicit_matching(Xf, Yf, {0}), Xf, Yf);
    CHECK(cs3.circles[0].center[0] == doctest::Approx(8.35));
    CHECK(cs3.circles[0].radius == doctest::Approx(1.65));
}

TEST_CASE("agreement on the two-point crossing instance") {
    // greedy picks (0.6, 0.5), then (0.0, 1.1); the optimal p=0.5
    // matching is the same crossing, so both steps agree
    const auto X = pts1d({0.0, 0.6});
    const auto Y = pts1d({0.5, 1.1});
    const Matching g = greedy_match(X, Y);
    const Matching o = optimal_match(X, Y, CostSpec::power(0.5));
    CHECK(g.edges[0].i == 1);
    CHECK(g.edges[0].j == 0);
    for (const auto& e : g.edges)
        CHECK(o.perm[static_cast<std::size_t>(e.i)] == e.j);
}

TEST_CASE("agreement_curve is in [0,1] and seed-deterministic") {
    const AgreementCurve a = agreement_curve(12, 1, CostSpec::power(0.2), 20, 99);
    const AgreementCurve b = agreement_curve(12, 1, CostSpec::power(0.2), 20, 99);
    REQUIRE(a.per_step.size() == 12);
    for (std::size_t s = 0; s < 12; ++s) {
        CHECK(a.per_step[s] >= 0.0);
        CHECK(a.per_step[s] <= 1.0);
        CHECK(a.per_step[s] == b.per_step[s]);
    }
}

TEST_CASE("displacement_stats") {
    const auto Z = pts1d({0.1, 0.7});
    const auto zero = displacement_stats(explicit_matching(Z, Z, {0, 1}), 2);
    CHECK(zero.median_dist == 0.0);
    CHECK(zero.count_over_inv_sqrt_n == 0);
    CHECK(zero.count_over_log_sqrt_n == 0);

    const auto X = pts1d({0.0, 0.25, 0.5, 0.75});
    const auto Y = pts1d({0.125, 0.375, 0.625, 0.875});
    const auto st = displacement_stats(greedy_match(X, Y), 4);
    CHECK(st.median_dist == doctest::Approx(0.125));
    CHECK(st.count_over_inv_sqrt_n == 0);  // 0.125 < 1/2
    CHECK(st.count_over_log_sqrt_n == 0);
}

TEST_CASE("order_deviation") {
    SplitMix64 rng(17);
    const auto X = random_pts(20, 1, rng);
    const auto Y = random_pts(20, 1, rng);
    CHECK(order_deviation(sorted_match(X, Y), X, Y, 0) == 0);

    const auto Xn = pts1d({0.1, 0.2});
    const auto Yn = pts1d({0.3, 0.4});
    CHECK(order_deviation(dyck_match(Xn, Yn), Xn, Yn, 0) == 2);

    const auto Xa = pts1d({0.0, 0.25, 0.5, 0.75});
    const auto Ya = pts1d({0.125, 0.375, 0.625, 0.875});
    CHECK(order_deviation(greedy_match(Xa, Ya), Xa, Ya, 0) == 0);
}
