// Compares the serial and OpenMP trial loops on the same workload and
// checks that they produce identical results.
#include <chrono>
#include <cstdio>
#include <vector>

#include "cot/instances.hpp"
#include "cot/matchers.hpp"
#include "cot/parallel.hpp"
#include "cot/rng.hpp"

using namespace cot;

namespace {

double trial_cost(int t, std::size_t n) {
    InstanceSpec is;
    is.n = n;
    is.d = 1;
    is.seed = trial_seed(7, static_cast<std::uint64_t>(t));
    const Instance inst = generate(is);
    return optimal_match(inst.X, inst.Y, CostSpec::power(0.5)).total_cost;
}

template <typename Loop>
double timed(Loop&& loop, int trials, std::size_t n, std::vector<double>& out, double& secs) {
    out.assign(static_cast<std::size_t>(trials), 0.0);
    const auto t0 = std::chrono::steady_clock::now();
    loop(trials, [&](int t) { out[static_cast<std::size_t>(t)] = trial_cost(t, n); });
    secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return pairwise_sum(out);
}

}  // namespace

int main(int argc, char** argv) {
    const std::size_t n = argc > 1 ? static_cast<std::size_t>(std::atoi(argv[1])) : 200;
    const int trials = argc > 2 ? std::atoi(argv[2]) : 32;

    std::vector<double> serial_out, parallel_out;
    double serial_secs = 0.0, parallel_secs = 0.0;
    const double s = timed([](int c, auto&& b) { serial_for(c, b); }, trials, n, serial_out,
                           serial_secs);
    const double p = timed([](int c, auto&& b) { parallel_for(c, b); }, trials, n, parallel_out,
                           parallel_secs);

    std::printf("n=%zu trials=%d threads=%d\n", n, trials, thread_count());
    std::printf("serial:   %.3f s  total=%.9g\n", serial_secs, s);
    std::printf("parallel: %.3f s  total=%.9g  speedup=%.2fx\n", parallel_secs, p,
                serial_secs / parallel_secs);
    if (serial_out != parallel_out) {
        std::printf("MISMATCH: serial and parallel results differ\n");
        return 1;
    }
    std::printf("results identical\n");
    return 0;
}
