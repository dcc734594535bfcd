#include "cot/geometry.hpp"

namespace cot {

DistanceMatrix distance_matrix(const PointSet& X, const PointSet& Y) {
    if (X.size() != Y.size())
        throw std::invalid_argument("distance_matrix: |X| != |Y|");
    if (X.dim() != Y.dim())
        throw std::invalid_argument("distance_matrix: dimension mismatch");
    const std::size_t n = X.size();
    std::vector<double> entries(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto xi = X.point(i);
        for (std::size_t j = 0; j < n; ++j)
            entries[i * n + j] = distance(xi, Y.point(j));
    }
    return DistanceMatrix(n, std::move(entries));
}

double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 8) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

}  // namespace cot
