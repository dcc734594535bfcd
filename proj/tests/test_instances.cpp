#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "cot/analysis.hpp"
#include "cot/instances.hpp"
#include "cot/matchers.hpp"

using namespace cot;

namespace {

InstanceSpec spec_of(Family f, std::size_t n, int d, std::uint64_t seed, double delta = 0.1) {
    InstanceSpec s;
    s.family = f;
    s.n = n;
    s.d = d;
    s.seed = seed;
    s.delta = delta;
    return s;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// FNV-1a, used only to freeze golden file contents
std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

}  // namespace

TEST_CASE("alternating family") {
    const Instance inst = generate(spec_of(Family::Alternating, 2, 1, 0));
    CHECK(inst.X.coords() == std::vector<double>{0.0, 0.5});
    CHECK(inst.Y.coords() == std::vector<double>{0.25, 0.75});
    CHECK_THROWS_AS(generate(spec_of(Family::Alternating, 2, 2, 0)), std::invalid_argument);
}

TEST_CASE("alternating closed forms") {
    // power-of-two n keeps every coordinate dyadic, so all adjacent gaps are
    // bitwise-identical and greedy's deterministic tie-break pairs each red
    // with the blue to its right; other n perturb the ties by 1 ulp
    for (std::size_t n : {4u, 16u, 64u}) {
        const Instance inst = generate(spec_of(Family::Alternating, n, 1, 0));
        for (double p : {0.3, 0.7, 1.0}) {
            const double g = matching_cost(greedy_match(inst.X, inst.Y), CostSpec::power(p));
            const double expect = n * std::pow(1.0 / (2.0 * n), p);
            CHECK(g == doctest::Approx(expect).epsilon(1e-12));
        }
        CHECK(w1(inst.X, inst.Y) == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("uniform family determinism") {
    const Instance a = generate(spec_of(Family::UniformIID, 50, 3, 99));
    const Instance b = generate(spec_of(Family::UniformIID, 50, 3, 99));
    CHECK(a.X == b.X);
    CHECK(a.Y == b.Y);
    const Instance c = generate(spec_of(Family::UniformIID, 50, 3, 100));
    CHECK(a.X.coords() != c.X.coords());
}

TEST_CASE("cluster split ranges and lower bounds") {
    const Instance inst = generate(spec_of(Family::ClusterSplit, 3, 1, 7, 0.1));
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(inst.X.point(i)[0] >= 0.9);
        CHECK(inst.Y.point(i)[0] <= 0.1);
    }
    // Fig. 4 left regime: both greedy and W1 scale with n
    const Instance big = generate(spec_of(Family::ClusterSplit, 20, 1, 8, 0.1));
    const double p = 0.4;
    const double g = matching_cost(greedy_match(big.X, big.Y), CostSpec::power(p));
    CHECK(g >= 20.0 * std::pow(0.8, p) - 1e-9);
    CHECK(w1(big.X, big.Y) >= 20.0 * 0.8 - 1e-9);

    CHECK_THROWS_AS(generate(spec_of(Family::ClusterSplit, 3, 2, 7, 0.1)), std::invalid_argument);
    CHECK_THROWS_AS(generate(spec_of(Family::ClusterSplit, 3, 1, 7, 0.3)), std::invalid_argument);
}

TEST_CASE("json round trip is exact") {
    const Instance inst = generate(spec_of(Family::UniformIID, 40, 2, 123));
    const Instance back = from_json(to_json(inst));
    CHECK(back.X == inst.X);
    CHECK(back.Y == inst.Y);
    CHECK(back.spec.seed == inst.spec.seed);
    CHECK(to_json(back) == to_json(inst));
}

TEST_CASE("json errors name the offending field") {
    CHECK_THROWS_WITH_AS(
        from_json(R"({"version":1,"n":2,"d":1,"family":"uniform","seed":0,"X":[[0.1],[0.2]],"Y":[[0.3]]})"),
        doctest::Contains("'X', 'Y'"), std::runtime_error);
    CHECK_THROWS_WITH_AS(
        from_json(R"({"version":2,"n":1,"d":1,"family":"uniform","seed":0,"X":[[0.1]],"Y":[[0.3]]})"),
        doctest::Contains("version"), std::runtime_error);
    CHECK_THROWS_AS(from_json("{not json"), std::runtime_error);
    CHECK_THROWS_WITH_AS(
        from_json(R"({"version":1,"n":1,"d":2,"family":"uniform","seed":0,"X":[[0.1]],"Y":[[0.3]]})"),
        doctest::Contains("dimension"), std::runtime_error);
}

TEST_CASE("golden instance file") {
    const std::string path = std::string(TEST_DATA_DIR) + "/uniform_n1000_seed42.json";
    const std::string bytes = read_file(path);
    // frozen digest of the committed golden file
    CHECK(fnv1a(bytes) == 0xCB41030FDCFB0DF3ULL);
    const Instance inst = from_json(bytes);
    CHECK(inst.X.size() == 1000);
    const Instance regen = generate(spec_of(Family::UniformIID, 1000, 1, 42));
    CHECK(regen.X == inst.X);
    CHECK(regen.Y == inst.Y);
    CHECK(to_json(regen) == bytes);
}

TEST_CASE("save/load through a file") {
    const Instance inst = generate(spec_of(Family::Alternating, 5, 1, 0));
    const std::string path = "/tmp/cot_test_instance.json";
    save(inst, path);
    const Instance back = load(path);
    CHECK(back.X == inst.X);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load("/nonexistent/path.json"), std::runtime_error);
}
