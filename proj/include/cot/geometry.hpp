#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace cot {

// n points in R^d, flat row-major storage. Immutable after construction.
class PointSet {
public:
    PointSet() : dim_(1) {}

    PointSet(std::vector<double> coords, int dim)
        : coords_(std::move(coords)), dim_(dim) {
        if (dim_ < 1)
            throw std::invalid_argument("PointSet: dim must be >= 1");
        if (coords_.size() % static_cast<std::size_t>(dim_) != 0)
            throw std::invalid_argument("PointSet: coordinate count not divisible by dim");
        for (double c : coords_)
            if (!std::isfinite(c))
                throw std::invalid_argument("PointSet: coordinates must be finite");
    }

    static PointSet from_1d(std::vector<double> xs) { return PointSet(std::move(xs), 1); }

    int dim() const { return dim_; }
    std::size_t size() const { return coords_.size() / static_cast<std::size_t>(dim_); }

    std::span<const double> point(std::size_t i) const {
        return {coords_.data() + i * static_cast<std::size_t>(dim_),
                static_cast<std::size_t>(dim_)};
    }

    const std::vector<double>& coords() const { return coords_; }

    bool operator==(const PointSet&) const = default;

private:
    std::vector<double> coords_;
    int dim_;
};

inline double distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("distance: dimension mismatch");
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double t = a[k] - b[k];
        s += t * t;
    }
    return std::sqrt(s);
}

// Dense n x n grid, entry (i, j) = d(x_i, y_j), row-major.
class DistanceMatrix {
public:
    DistanceMatrix(std::size_t n, std::vector<double> entries)
        : n_(n), entries_(std::move(entries)) {
        if (entries_.size() != n_ * n_)
            throw std::invalid_argument("DistanceMatrix: entry count != n*n");
    }

    std::size_t n() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    const std::vector<double>& entries() const { return entries_; }

private:
    std::size_t n_;
    std::vector<double> entries_;
};

DistanceMatrix distance_matrix(const PointSet& X, const PointSet& Y);

// Tree (pairwise) summation; error grows like log n instead of n.
double pairwise_sum(std::span<const double> v);

}  // namespace cot
