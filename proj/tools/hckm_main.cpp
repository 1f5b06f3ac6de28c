#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hckm/driver.hpp"
#include "hckm/io.hpp"
#include "hckm/oracle.hpp"
#include "hckm/rng.hpp"

namespace {

using namespace hckm;

int log_level() {
    const char* env = std::getenv("HCKM_LOG");
    if (!env) return 0;
    const std::string v(env);
    if (v == "debug") return 2;
    if (v == "info") return 1;
    return 0;
}

struct InputOptions {
    std::string input;
    std::string format = "csv";
    std::string blobs;  // count,per_blob,sigma,spread[,dim]
    std::uint64_t seed = 0;
};

std::vector<Point> load_points(const InputOptions& opts) {
    if (!opts.input.empty())
        return load_dataset(opts.input,
                            opts.format == "json" ? DatasetFormat::Json : DatasetFormat::Csv);
    if (!opts.blobs.empty()) {
        BlobSpec spec;
        spec.seed = opts.seed;
        char comma;
        std::istringstream in(opts.blobs);
        if (!(in >> spec.count >> comma >> spec.per_blob >> comma >> spec.sigma >> comma >>
              spec.spread))
            throw Error("bad --blobs spec, expected count,per_blob,sigma,spread[,dim]");
        if (in >> comma >> spec.dim) {
        }
        return generate_instance(spec);
    }
    throw Error("either --input or --blobs is required");
}

void add_input_flags(CLI::App* cmd, InputOptions& opts) {
    cmd->add_option("--input", opts.input, "dataset file");
    cmd->add_option("--format", opts.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--blobs", opts.blobs, "synthetic blobs: count,per_blob,sigma,spread[,dim]");
}

int run_solve(const InputOptions& in_opts, int k, std::int64_t u, double epsilon,
              const SubroutineConfig& cfg_in, const DriverOptions& drv,
              const std::string& output) {
    Instance instance{load_points(in_opts), k, u};
    SubroutineConfig config = cfg_in;
    config.epsilon_prime = epsilon / 36.0;

    DriverOptions options = drv;
    if (log_level() >= 1) {
        options.progress_every = 1000;
        options.on_progress = [](std::uint64_t done, std::uint64_t total) {
            std::cerr << "swept " << done << "/" << total << " compositions\n";
        };
    }
    const Solution solution = solve_hckm(instance, config, options);
    const std::string json = solution_to_json(solution, instance, config);
    if (output.empty())
        std::cout << json;
    else
        emit_solution(solution, instance, config, output);
    if (log_level() >= 1)
        std::cerr << "cost_d=" << solution.cost_after_recenter.cost_d << " after "
                  << solution.compositions_evaluated << " compositions in "
                  << solution.wall_time_ms << " ms\n";
    return 0;
}

int run_oracle(const InputOptions& in_opts, int k, std::int64_t u) {
    Instance instance{load_points(in_opts), k, u};
    const OracleResult result = exact_hckm(instance);
    nlohmann::ordered_json doc;
    doc["opt_cost"] = result.opt_cost;
    doc["labels"] = result.opt_partition.labels;
    doc["nodes_explored"] = result.nodes_explored;
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int run_bench(int seeds, int k, std::int64_t u, double epsilon, const std::string& blobs,
              const std::string& output) {
    std::ostringstream csv;
    csv << "seed,n,k,u,cost_d,opt,ratio,compositions,wall_ms\n";
    for (int s = 0; s < seeds; ++s) {
        InputOptions in_opts;
        in_opts.blobs = blobs;
        in_opts.seed = s;
        Instance instance{load_points(in_opts), k, u};
        SubroutineConfig config;
        config.epsilon_prime = epsilon / 36.0;
        config.rng_seed = s;
        const Solution solution = solve_hckm(instance, config);
        double opt = -1.0, ratio = -1.0;
        if (instance.n() <= 10) {
            opt = exact_hckm(instance).opt_cost;
            ratio = opt > 0 ? solution.cost_after_recenter.cost_d / opt
                            : (solution.cost_after_recenter.cost_d > 0 ? -1.0 : 1.0);
        }
        csv << s << "," << instance.n() << "," << k << "," << u << ","
            << solution.cost_after_recenter.cost_d << "," << opt << "," << ratio << ","
            << solution.compositions_evaluated << "," << solution.wall_time_ms << "\n";
    }
    if (output.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(output);
        if (!out) throw Error("cannot write " + output);
        out << csv.str();
    }
    return 0;
}

int run_check(const InputOptions& in_opts, int k, std::int64_t u, std::uint64_t seed) {
    Instance instance{load_points(in_opts), k, u};
    instance.validate();
    Rng rng(seed);
    bool ok = true;
    auto report = [&](const std::string& name, bool pass) {
        std::cout << (pass ? "PASS" : "FAIL") << " " << name << "\n";
        ok = ok && pass;
    };

    const int n = instance.n();
    bool triangles = true, quads = true;
    for (int t = 0; t < 10000; ++t) {
        const Point& a = instance.points[rng.next_below(n)];
        const Point& b = instance.points[rng.next_below(n)];
        const Point& c = instance.points[rng.next_below(n)];
        const Point& d = instance.points[rng.next_below(n)];
        triangles = triangles && check_extended_triangle(a, b, c);
        quads = quads && check_four_point(a, c, d, b);
    }
    report("extended-triangle-inequality", triangles);
    report("four-point-inequality", quads);

    if (check_feasibility(instance)) {
        SubroutineConfig config;
        config.rng_seed = seed;
        const auto S = run_subroutine(instance, config);
        const auto index = build_voronoi_index(instance, S);
        bool sandwich = true;
        for (int t = 0; t < 100; ++t) {
            // Random feasible partition: points in random order fill clusters.
            Partition p;
            p.labels.assign(n, -1);
            std::vector<std::int64_t> sizes(instance.k, 0);
            for (int j = 0; j < n; ++j) {
                int c;
                do {
                    c = static_cast<int>(rng.next_below(instance.k));
                } while (sizes[c] >= instance.u);
                p.labels[j] = c;
                ++sizes[c];
            }
            for (int c = 0; c < instance.k; ++c)
                p.centers.push_back(instance.points[rng.next_below(n)]);
            sandwich = sandwich && verify_sandwich(instance, index, p).holds;
        }
        report("sandwich-cost_d-le-3cost_h", sandwich);
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hard-capacitated k-means solver"};
    app.require_subcommand(1);

    InputOptions in_opts;
    int k = 2;
    std::int64_t u = 1;
    double epsilon = 0.36;
    SubroutineConfig config;
    DriverOptions driver_opts;
    std::string output;
    int bench_seeds = 5;

    auto* solve_cmd = app.add_subcommand("solve", "run the FPT approximation algorithm");
    add_input_flags(solve_cmd, in_opts);
    solve_cmd->add_option("--k", k, "number of clusters")->required();
    solve_cmd->add_option("--u", u, "uniform cluster capacity")->required();
    solve_cmd->add_option("--epsilon", epsilon, "epsilon (epsilon' = epsilon/36)");
    solve_cmd->add_option("--seed", config.rng_seed, "RNG seed");
    solve_cmd->add_option("--overseed-factor", config.overseed_factor, "beta in |S| target");
    solve_cmd->add_option("--lloyd-rounds", config.lloyd_rounds, "Lloyd iterations");
    solve_cmd->add_option("--workers", driver_opts.workers, "sweep worker threads");
    solve_cmd->add_flag("--no-prune", [&](std::int64_t) { driver_opts.prune = false; },
                        "disable the per-slot composition cap");
    solve_cmd->add_option("--subroutine", driver_opts.subroutine, "registered subroutine name");
    solve_cmd->add_option("--output", output, "write solution JSON here");

    auto* oracle_cmd = app.add_subcommand("oracle", "exact brute-force solve (n <= 10)");
    add_input_flags(oracle_cmd, in_opts);
    oracle_cmd->add_option("--k", k)->required();
    oracle_cmd->add_option("--u", u)->required();

    std::string bench_blobs = "3,3,0.3,10";
    auto* bench_cmd = app.add_subcommand("bench", "seed sweep, CSV ratio table");
    bench_cmd->add_option("--seeds", bench_seeds, "number of seeds");
    bench_cmd->add_option("--blobs", bench_blobs, "count,per_blob,sigma,spread[,dim]");
    bench_cmd->add_option("--k", k)->required();
    bench_cmd->add_option("--u", u)->required();
    bench_cmd->add_option("--epsilon", epsilon);
    bench_cmd->add_option("--output", output, "CSV path");

    auto* check_cmd = app.add_subcommand("check", "run invariant suites on an instance");
    add_input_flags(check_cmd, in_opts);
    check_cmd->add_option("--k", k)->required();
    check_cmd->add_option("--u", u)->required();
    check_cmd->add_option("--seed", config.rng_seed);

    CLI11_PARSE(app, argc, argv);

    try {
        in_opts.seed = config.rng_seed;
        if (solve_cmd->parsed())
            return run_solve(in_opts, k, u, epsilon, config, driver_opts, output);
        if (oracle_cmd->parsed()) return run_oracle(in_opts, k, u);
        if (bench_cmd->parsed()) return run_bench(bench_seeds, k, u, epsilon, bench_blobs, output);
        if (check_cmd->parsed()) return run_check(in_opts, k, u, config.rng_seed);
    } catch (const InfeasibleError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
