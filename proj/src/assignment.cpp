#include "cot/assignment.hpp"

#include <limits>
#include <stdexcept>

namespace cot {

AssignmentResult solve_assignment(const std::vector<double>& cost, std::size_t n) {
    if (cost.size() != n * n)
        throw std::invalid_argument("solve_assignment: cost size != n*n");
    const double inf = std::numeric_limits<double>::infinity();

    // 1-based arrays; p[j] = row matched to column j.
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);

    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = static_cast<int>(i);
        std::size_t j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const std::size_t i0 = static_cast<std::size_t>(p[j0]);
            std::size_t j1 = 0;
            double delta = inf;
            const double* row = cost.data() + (i0 - 1) * n;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = row[j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = static_cast<int>(j0);
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[static_cast<std::size_t>(p[j])] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const std::size_t j1 = static_cast<std::size_t>(way[j0]);
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    AssignmentResult res;
    res.row_to_col.assign(n, -1);
    for (std::size_t j = 1; j <= n; ++j)
        if (p[j] != 0) res.row_to_col[static_cast<std::size_t>(p[j]) - 1] = static_cast<int>(j) - 1;
    for (std::size_t i = 0; i < n; ++i)
        res.total += cost[i * n + static_cast<std::size_t>(res.row_to_col[i])];
    return res;
}

}  // namespace cot
