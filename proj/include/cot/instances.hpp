#pragma once

#include <cstdint>
#include <string>

#include "cot/geometry.hpp"

namespace cot {

enum class Family { UniformIID, ClusterSplit, Alternating, Explicit };

std::string family_name(Family f);
Family family_from_name(const std::string& s);

struct InstanceSpec {
    Family family = Family::UniformIID;
    std::size_t n = 1;
    int d = 1;
    std::uint64_t seed = 0;
    double delta = 0.1;  // ClusterSplit half-width, in (0, 1/4)
};

struct Instance {
    PointSet X, Y;
    InstanceSpec spec;
};

// Deterministic: a pure function of spec.
//   UniformIID   - 2nd uniform variates from SplitMix64(seed), X first.
//   ClusterSplit - 1D; reds uniform in [1-delta, 1], blues in [0, delta].
//   Alternating  - 1D; reds at (2i-2)/(2n), blues at (2i-1)/(2n).
Instance generate(const InstanceSpec& spec);

// JSON schema: {version: 1, n, d, family, seed, params, X: [[...]], Y: [[...]]}.
// Round trip is exact (doubles serialized shortest-round-trip).
void save(const Instance& inst, const std::string& path);
Instance load(const std::string& path);

std::string to_json(const Instance& inst);
Instance from_json(const std::string& text);

}  // namespace cot
