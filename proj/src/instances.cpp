#include "cot/instances.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "cot/rng.hpp"

namespace cot {

using nlohmann::json;

std::string family_name(Family f) {
    switch (f) {
        case Family::UniformIID: return "uniform";
        case Family::ClusterSplit: return "clusters";
        case Family::Alternating: return "alternating";
        case Family::Explicit: return "explicit";
    }
    return "?";
}

Family family_from_name(const std::string& s) {
    if (s == "uniform") return Family::UniformIID;
    if (s == "clusters") return Family::ClusterSplit;
    if (s == "alternating") return Family::Alternating;
    if (s == "explicit") return Family::Explicit;
    throw std::invalid_argument("unknown instance family: " + s);
}

Instance generate(const InstanceSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("generate: n must be >= 1");
    if (spec.d < 1) throw std::invalid_argument("generate: d must be >= 1");
    const std::size_t n = spec.n;
    const std::size_t nd = n * static_cast<std::size_t>(spec.d);

    switch (spec.family) {
        case Family::UniformIID: {
            SplitMix64 rng(spec.seed);
            std::vector<double> xs(nd), ys(nd);
            for (double& c : xs) c = rng.next_double();
            for (double& c : ys) c = rng.next_double();
            return {PointSet(std::move(xs), spec.d), PointSet(std::move(ys), spec.d), spec};
        }
        case Family::ClusterSplit: {
            if (spec.d != 1)
                throw std::invalid_argument("generate: clusters family is 1D only");
            if (!(spec.delta > 0.0 && spec.delta < 0.25))
                throw std::invalid_argument("generate: clusters delta must be in (0, 1/4)");
            SplitMix64 rng(spec.seed);
            std::vector<double> xs(n), ys(n);
            for (double& c : xs) c = 1.0 - spec.delta + spec.delta * rng.next_double();
            for (double& c : ys) c = spec.delta * rng.next_double();
            return {PointSet(std::move(xs), 1), PointSet(std::move(ys), 1), spec};
        }
        case Family::Alternating: {
            if (spec.d != 1)
                throw std::invalid_argument("generate: alternating family is 1D only");
            std::vector<double> xs(n), ys(n);
            for (std::size_t i = 1; i <= n; ++i) {
                xs[i - 1] = static_cast<double>(2 * i - 2) / static_cast<double>(2 * n);
                ys[i - 1] = static_cast<double>(2 * i - 1) / static_cast<double>(2 * n);
            }
            return {PointSet(std::move(xs), 1), PointSet(std::move(ys), 1), spec};
        }
        case Family::Explicit:
            throw std::invalid_argument("generate: explicit instances come from files");
    }
    throw std::logic_error("generate: unknown family");
}

std::string to_json(const Instance& inst) {
    json j;
    j["version"] = 1;
    j["n"] = inst.X.size();
    j["d"] = inst.X.dim();
    j["family"] = family_name(inst.spec.family);
    j["seed"] = inst.spec.seed;
    json params = json::object();
    if (inst.spec.family == Family::ClusterSplit) params["delta"] = inst.spec.delta;
    j["params"] = params;
    auto pts = [](const PointSet& P) {
        json a = json::array();
        for (std::size_t i = 0; i < P.size(); ++i) {
            json row = json::array();
            for (double c : P.point(i)) row.push_back(c);
            a.push_back(row);
        }
        return a;
    };
    j["X"] = pts(inst.X);
    j["Y"] = pts(inst.Y);
    return j.dump(2) + "\n";
}

Instance from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("instance parse error: ") + e.what());
    }
    if (!j.contains("version") || j["version"].get<int>() != 1)
        throw std::runtime_error("instance schema error: unsupported version (field 'version')");
    for (const char* f : {"n", "d", "family", "seed", "X", "Y"})
        if (!j.contains(f))
            throw std::runtime_error(std::string("instance parse error: missing field '") + f + "'");

    InstanceSpec spec;
    spec.n = j["n"].get<std::size_t>();
    spec.d = j["d"].get<int>();
    spec.family = family_from_name(j["family"].get<std::string>());
    spec.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("params") && j["params"].contains("delta"))
        spec.delta = j["params"]["delta"].get<double>();

    auto pts = [&](const char* field) {
        std::vector<double> coords;
        for (const auto& row : j[field]) {
            if (row.size() != static_cast<std::size_t>(spec.d))
                throw std::runtime_error(std::string("instance parse error: point in '") + field +
                                         "' has wrong dimension");
            for (const auto& c : row) coords.push_back(c.get<double>());
        }
        return PointSet(std::move(coords), spec.d);
    };
    PointSet X = pts("X"), Y = pts("Y");
    if (X.size() != Y.size())
        throw std::runtime_error("instance parse error: |X| != |Y| (fields 'X', 'Y')");
    if (X.size() != spec.n)
        throw std::runtime_error("instance parse error: field 'n' disagrees with |X|");
    return {std::move(X), std::move(Y), spec};
}

void save(const Instance& inst, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("save: cannot open " + path);
    out << to_json(inst);
}

Instance load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load: cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return from_json(text);
}

}  // namespace cot
