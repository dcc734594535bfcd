#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cot/analysis.hpp"
#include "cot/bounds.hpp"
#include "cot/experiments.hpp"
#include "cot/instances.hpp"
#include "cot/matchers.hpp"
#include "cot/parallel.hpp"
#include "cot/rng.hpp"
#include "cot/svg.hpp"

namespace {

using namespace cot;

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << bytes;
}

// "a:b:s" inclusive of both endpoints when (b-a)/s is integral,
// or a comma-separated list.
std::vector<double> parse_grid(const std::string& s) {
    std::vector<double> vals;
    if (s.find(':') != std::string::npos) {
        double a, b, st;
        if (std::sscanf(s.c_str(), "%lf:%lf:%lf", &a, &b, &st) != 3 || st <= 0.0)
            throw CLI::ValidationError("--p-grid", "expected a:b:s with s > 0");
        for (double p = a; p <= b + 1e-12; p += st) vals.push_back(p);
        return vals;
    }
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        vals.push_back(std::stod(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    return vals;
}

CostSpec parse_cost(const std::string& s) {
    if (s == "log") return CostSpec::log_distance();
    if (s.rfind("pow:", 0) == 0) return CostSpec::power(std::stod(s.substr(4)));
    throw CLI::ValidationError("--cost", "expected pow:<p> or log");
}

int print_reports(const std::vector<BoundReport>& reports) {
    bool all_ok = true;
    for (const auto& r : reports) {
        std::printf("%-4s %s lhs=%.9g rhs=%.9g slack=%.3g\n", r.passed ? "PASS" : "FAIL",
                    r.name.c_str(), r.lhs, r.rhs, r.slack);
        all_ok = all_ok && r.passed;
    }
    return all_ok ? 0 : 1;
}

Instance random_uniform(std::size_t n, int d, std::uint64_t seed) {
    InstanceSpec is;
    is.n = n;
    is.d = d;
    is.seed = seed;
    return generate(is);
}

int run_verify(const std::string& suite, int trials, std::uint64_t seed) {
    std::vector<BoundReport> reports;
    if (suite == "theorem1") {
        for (double p : {0.1, 0.25, 0.4, 0.5, 0.75})
            for (std::size_t n : {10u, 100u})
                for (int d : {1, 2})
                    for (int t = 0; t < trials; ++t) {
                        const Instance inst = random_uniform(n, d, trial_seed(seed, static_cast<std::uint64_t>(t) * 1000 + n + static_cast<std::uint64_t>(d)));
                        const Matching g = greedy_match(inst.X, inst.Y);
                        const double lhs = matching_cost(g, CostSpec::power(p));
                        const double rhs = theorem1_bound(n, p) * std::pow(w1(inst.X, inst.Y), p);
                        reports.push_back(make_report("theorem1", lhs, rhs, {n, d, p, seed}));
                    }
    } else if (suite == "recursion") {
        for (int t = 0; t < trials; ++t) {
            const Instance inst = random_uniform(50, 1, trial_seed(seed, static_cast<std::uint64_t>(t)));
            auto rs = greedy_recursion_check(inst.X, inst.Y);
            reports.insert(reports.end(), rs.begin(), rs.end());
        }
    } else if (suite == "holder") {
        for (double p : {0.1, 0.3, 0.49})
            for (int t = 0; t < trials; ++t) {
                const Instance inst = random_uniform(40, 1, trial_seed(seed, static_cast<std::uint64_t>(t)));
                reports.push_back(holder_bound_check(inst.X, inst.Y, p));
            }
    } else if (suite == "prop2") {
        const double p = 0.2;
        const BetaEstimate est = beta_estimate(p, 1, 500, trials, seed);
        reports.push_back(make_report("prop2_lower", beta_lower_bound(p, 1),
                                      est.mean + 3.0 * est.stderr_, {est.n, 1, p, seed}));
    } else if (suite == "prop3") {
        for (int t = 0; t < trials; ++t) {
            SplitMix64 rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
            std::vector<double> xs(5), ys(5);
            for (double& c : xs) c = 0.4 * rng.next_double();
            for (double& c : ys) c = 0.4 * rng.next_double();
            const PointSet X = PointSet::from_1d(xs), Y = PointSet::from_1d(ys);
            const auto K = prop3_extreme_check(X, Y, 200);
            reports.push_back(make_report("prop3_stabilizes",
                                          K ? static_cast<double>(*K) : 1e18, 200.0,
                                          {5, 1, 0.0, seed}));
        }
    } else if (suite == "lemma1") {
        const std::size_t n = 100;
        const double eps = 0.01;
        const double expect = nearest_neighbor_tail(n, 1, eps);
        const int samples = std::max(trials, 100000);
        long hits = 0;
        SplitMix64 rng(seed);
        for (int s = 0; s < samples; ++s) {
            const double y = eps + (1.0 - 2.0 * eps) * rng.next_double();
            bool far = true;
            for (std::size_t i = 0; i < n && far; ++i)
                far = std::abs(y - rng.next_double()) >= eps;
            if (far) ++hits;
        }
        const double emp = static_cast<double>(hits) / samples;
        const double sig = std::sqrt(expect * (1.0 - expect) / samples);
        reports.push_back(make_report("lemma1_tail_lo", expect - 3.0 * sig, emp, {n, 1, 0.0, seed}));
        reports.push_back(make_report("lemma1_tail_hi", emp, expect + 3.0 * sig, {n, 1, 0.0, seed}));
    } else {
        throw CLI::ValidationError("--suite",
                                   "expected theorem1|recursion|holder|prop2|prop3|lemma1");
    }
    return print_reports(reports);
}

int run(int argc, char** argv) {
    CLI::App app{"Bipartite point-set matching under concave transport costs"};
    app.require_subcommand(1);

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
    std::string gen_family = "uniform", gen_out;
    std::size_t gen_n = 100;
    int gen_d = 1;
    std::uint64_t gen_seed = 0;
    double gen_delta = 0.1;
    gen_cmd->add_option("--family", gen_family, "uniform|clusters|alternating");
    gen_cmd->add_option("--n", gen_n)->required();
    gen_cmd->add_option("--d", gen_d);
    gen_cmd->add_option("--seed", gen_seed);
    gen_cmd->add_option("--delta", gen_delta, "clusters half-width");
    gen_cmd->add_option("--out", gen_out)->required();

    // match
    auto* match_cmd = app.add_subcommand("match", "Match a saved instance");
    std::string match_in, match_method = "greedy", match_cost = "pow:1", match_out, match_svg;
    match_cmd->add_option("--in", match_in)->required();
    match_cmd->add_option("--method", match_method, "greedy|dyck|optimal|sorted");
    match_cmd->add_option("--cost", match_cost, "pow:<p>|log");
    match_cmd->add_option("--out", match_out);
    match_cmd->add_option("--svg", match_svg);

    // ratio-curve
    auto* curve_cmd = app.add_subcommand("ratio-curve", "Mean heuristic/optimal cost ratios");
    std::string curve_grid = "0.05:0.95:0.05", curve_out;
    std::size_t curve_n = 250;
    int curve_trials = 200;
    std::uint64_t curve_seed = 1;
    curve_cmd->add_option("--n", curve_n);
    curve_cmd->add_option("--p-grid", curve_grid);
    curve_cmd->add_option("--trials", curve_trials);
    curve_cmd->add_option("--seed", curve_seed);
    curve_cmd->add_option("--out", curve_out)->required();

    // table
    auto* table_cmd = app.add_subcommand("table", "Greedy/optimal ratio over (d, p) grid");
    std::string table_dims = "1,2,3,4,5,10", table_ps = "1,0.5,0.2,0.1", table_out;
    std::size_t table_n = 100;
    int table_trials = 200;
    std::uint64_t table_seed = 1;
    table_cmd->add_option("--n", table_n);
    table_cmd->add_option("--dims", table_dims);
    table_cmd->add_option("--p", table_ps);
    table_cmd->add_option("--trials", table_trials);
    table_cmd->add_option("--seed", table_seed);
    table_cmd->add_option("--out", table_out)->required();

    // agreement
    auto* agree_cmd = app.add_subcommand("agreement", "Greedy step vs optimal agreement");
    std::string agree_cost = "pow:0.1", agree_out;
    std::size_t agree_n = 100;
    int agree_trials = 200;
    std::uint64_t agree_seed = 1;
    agree_cmd->add_option("--n", agree_n);
    agree_cmd->add_option("--cost", agree_cost);
    agree_cmd->add_option("--trials", agree_trials);
    agree_cmd->add_option("--seed", agree_seed);
    agree_cmd->add_option("--out", agree_out)->required();

    // crossover
    auto* cross_cmd = app.add_subcommand("crossover", "Greedy/Dyck ratio-curve crossing");
    std::string cross_grid = "0.1:0.9:0.1";
    std::size_t cross_n = 250;
    int cross_trials = 100;
    std::uint64_t cross_seed = 1;
    cross_cmd->add_option("--n", cross_n);
    cross_cmd->add_option("--p-grid", cross_grid);
    cross_cmd->add_option("--trials", cross_trials);
    cross_cmd->add_option("--seed", cross_seed);

    // beta
    auto* beta_cmd = app.add_subcommand("beta", "Monte Carlo estimate of the limit constant");
    double beta_p = 0.2;
    int beta_d = 1, beta_trials = 50;
    std::size_t beta_n = 1000;
    std::uint64_t beta_seed = 1;
    beta_cmd->add_option("--p", beta_p);
    beta_cmd->add_option("--d", beta_d);
    beta_cmd->add_option("--n", beta_n);
    beta_cmd->add_option("--trials", beta_trials);
    beta_cmd->add_option("--seed", beta_seed);

    // verify-bounds
    auto* verify_cmd = app.add_subcommand("verify-bounds", "Numerically check proved inequalities");
    std::string verify_suite;
    int verify_trials = 20;
    std::uint64_t verify_seed = 1;
    verify_cmd->add_option("--suite", verify_suite, "theorem1|recursion|holder|prop2|prop3|lemma1")
        ->required();
    verify_cmd->add_option("--trials", verify_trials);
    verify_cmd->add_option("--seed", verify_seed);

    // render
    auto* render_cmd = app.add_subcommand("render", "Render a matching to SVG");
    std::string render_matching_path, render_in, render_out;
    render_cmd->add_option("--matching", render_matching_path)->required();
    render_cmd->add_option("--in", render_in, "instance file with the point coordinates")
        ->required();
    render_cmd->add_option("--out", render_out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors exit 2
    }

    if (*gen_cmd) {
        InstanceSpec spec;
        spec.family = family_from_name(gen_family);
        spec.n = gen_n;
        spec.d = gen_d;
        spec.seed = gen_seed;
        spec.delta = gen_delta;
        save(generate(spec), gen_out);
        return 0;
    }

    if (*match_cmd) {
        const Instance inst = load(match_in);
        const CostSpec spec = parse_cost(match_cost);
        Matching m;
        if (match_method == "greedy") m = greedy_match(inst.X, inst.Y);
        else if (match_method == "dyck") m = dyck_match(inst.X, inst.Y);
        else if (match_method == "sorted") m = sorted_match(inst.X, inst.Y);
        else if (match_method == "optimal") m = optimal_match(inst.X, inst.Y, spec);
        else throw CLI::ValidationError("--method", "expected greedy|dyck|optimal|sorted");
        for (auto& e : m.edges) e.cost = cost_eval(spec, e.dist);
        m.total_cost = matching_cost(m, spec);
        std::printf("method=%s n=%zu total_cost=%.9g\n", method_name(m.method).c_str(),
                    inst.X.size(), m.total_cost);
        if (!match_out.empty()) write_file(match_out, matching_to_json(m, match_cost));
        if (!match_svg.empty()) write_file(match_svg, render_matching(m, inst.X, inst.Y));
        return 0;
    }

    if (*curve_cmd) {
        const auto grid = parse_grid(curve_grid);
        const ExperimentReport rep =
            ratio_curve(curve_n, 1, grid, true, true, curve_trials, curve_seed);
        write_file(curve_out, rep.to_csv());
        return 0;
    }

    if (*table_cmd) {
        std::vector<int> dims;
        for (double d : parse_grid(table_dims)) dims.push_back(static_cast<int>(d));
        const ExperimentReport rep =
            dimension_table(table_n, dims, parse_grid(table_ps), table_trials, table_seed);
        write_file(table_out, rep.to_csv());
        return 0;
    }

    if (*agree_cmd) {
        write_file(agree_out,
                   agreement_experiment(agree_n, parse_cost(agree_cost), agree_trials, agree_seed));
        return 0;
    }

    if (*cross_cmd) {
        const CrossoverResult res =
            crossover_scan(cross_n, parse_grid(cross_grid), cross_trials, cross_seed);
        if (res.p_star)
            std::printf("p_star=%.9g interval=[%.9g,%.9g]\n", *res.p_star, res.lo, res.hi);
        else
            std::printf("p_star=none\n");
        return 0;
    }

    if (*beta_cmd) {
        const BetaEstimate est = beta_estimate(beta_p, beta_d, beta_n, beta_trials, beta_seed);
        std::printf("p=%.9g d=%d n=%zu trials=%d mean=%.9g stderr=%.9g lower_bound=%.9g\n",
                    est.p, est.d, est.n, est.trials, est.mean, est.stderr_,
                    beta_lower_bound(beta_p, beta_d));
        if (beta_d == 1 && beta_p < 0.5) {
            const auto [lo, hi] = corollary3_interval(beta_p);
            std::printf("interval=[%.9g,%.9g]\n", lo, hi);
        }
        return 0;
    }

    if (*verify_cmd) return run_verify(verify_suite, verify_trials, verify_seed);

    if (*render_cmd) {
        const Instance inst = load(render_in);
        std::ifstream in(render_matching_path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open matching file: " + render_matching_path);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        const Matching m = matching_from_json(text);
        write_file(render_out, render_matching(m, inst.X, inst.Y));
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::Error&) {
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
}
