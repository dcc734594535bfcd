#pragma once

#include <cmath>
#include <stdexcept>

namespace cot {

enum class CostKind { Power, LogDistance, OddLogPower };

// Concave cost descriptor: |x-y|^p with 0 < p <= 1, log|x-y|, or
// (log|x-y|)^{2k+1}.
struct CostSpec {
    CostKind kind = CostKind::Power;
    double p = 1.0;   // Power only
    int k = 0;        // OddLogPower only; exponent is 2k+1

    static CostSpec power(double p) {
        if (!(p > 0.0 && p <= 1.0))
            throw std::invalid_argument("CostSpec: Power requires 0 < p <= 1");
        return {CostKind::Power, p, 0};
    }
    static CostSpec log_distance() { return {CostKind::LogDistance, 0.0, 0}; }
    static CostSpec odd_log_power(int k) {
        if (k < 0)
            throw std::invalid_argument("CostSpec: OddLogPower requires k >= 0");
        return {CostKind::OddLogPower, 0.0, k};
    }
};

// 0^p = 0 by continuous extension. Log costs require dist > 0; the odd
// log power additionally requires dist < 1 so the log is negative.
inline double cost_eval(const CostSpec& spec, double dist) {
    if (dist < 0.0)
        throw std::invalid_argument("cost_eval: negative distance");
    switch (spec.kind) {
        case CostKind::Power:
            return dist == 0.0 ? 0.0 : std::pow(dist, spec.p);
        case CostKind::LogDistance:
            if (dist == 0.0)
                throw std::domain_error("cost_eval: log cost undefined at distance 0");
            return std::log(dist);
        case CostKind::OddLogPower: {
            if (dist == 0.0)
                throw std::domain_error("cost_eval: log cost undefined at distance 0");
            if (dist >= 1.0)
                throw std::domain_error("cost_eval: odd log power requires distance < 1");
            const double l = std::log(dist);
            return std::pow(l, 2 * spec.k + 1);
        }
    }
    throw std::logic_error("cost_eval: unknown cost kind");
}

}  // namespace cot
