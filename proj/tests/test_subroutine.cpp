#include <doctest.h>

#include <algorithm>
#include <limits>

#include "hckm/io.hpp"
#include "hckm/metrics.hpp"
#include "hckm/subroutine.hpp"

using namespace hckm;

TEST_CASE("representing set size stays within [k, n]") {
    SubroutineConfig cfg;
    for (double eps : {1e-4, 0.01, 0.3, 0.9}) {
        cfg.epsilon_prime = eps;
        for (int n : {1, 5, 40}) {
            for (int k = 1; k <= n; ++k) {
                const int m = representing_set_size(n, k, cfg);
                CHECK(m >= k);
                CHECK(m <= n);
            }
        }
    }
}

TEST_CASE("m capped at n returns the data set itself") {
    Instance inst;
    inst.points = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    inst.k = 1;
    inst.u = 4;
    SubroutineConfig cfg;  // default target is far above n=4
    const auto S = run_subroutine(inst, cfg);
    REQUIRE(S.size() == 4);
    CHECK(build_voronoi_index(inst, S).voronoi_cost == 0.0);
}

TEST_CASE("n = k forces S = X up to order") {
    Instance inst;
    inst.points = {{0, 0}, {5, 0}, {0, 5}};
    inst.k = 3;
    inst.u = 1;
    const auto S = run_subroutine(inst, SubroutineConfig{});
    REQUIRE(S.size() == 3);
    CHECK(build_voronoi_index(inst, S).voronoi_cost == 0.0);
}

TEST_CASE("determinism: same seed, same S") {
    BlobSpec spec{3, 8, 0.5, 10, 2, 11};
    Instance inst{generate_instance(spec), 3, 10};
    SubroutineConfig cfg;
    cfg.rng_seed = 99;
    cfg.epsilon_prime = 0.3;
    const auto a = run_subroutine(inst, cfg);
    const auto b = run_subroutine(inst, cfg);
    CHECK(a == b);
    cfg.rng_seed = 100;
    CHECK(run_subroutine(inst, cfg) != a);
}

TEST_CASE("Lloyd rounds never increase the assignment cost") {
    BlobSpec spec{4, 10, 0.8, 12, 3, 5};
    Instance inst{generate_instance(spec), 4, 12};
    SubroutineConfig cfg;
    cfg.epsilon_prime = 0.2;
    cfg.lloyd_rounds = 15;
    std::vector<double> costs;
    run_subroutine(inst, cfg, &costs);
    REQUIRE(!costs.empty());
    for (std::size_t t = 1; t < costs.size(); ++t) CHECK(costs[t] <= costs[t - 1] + 1e-9);
}

TEST_CASE("well-separated blobs: S beats the blob partition cost") {
    BlobSpec spec{3, 20, 0.1, 10, 2, 3};
    Instance inst{generate_instance(spec), 3, 60};
    // Upper bound on the optimal 3-means cost: the blob partition itself.
    double blob_cost = 0.0;
    for (int b = 0; b < 3; ++b) {
        std::vector<Point> members(inst.points.begin() + 20 * b,
                                   inst.points.begin() + 20 * (b + 1));
        const Point ctr = centroid(members);
        for (const Point& x : members) blob_cost += dist_d(x, ctr);
    }
    const auto S = run_subroutine(inst, SubroutineConfig{});
    CHECK(S.size() >= 3);
    CHECK(build_voronoi_index(inst, S).voronoi_cost <= blob_cost);
}

TEST_CASE("measure_lambda1") {
    Instance inst;
    inst.points = {{0, 0}, {1, 0}, {4, 0}};
    inst.k = 2;
    inst.u = 3;
    // S = X: zero cost.
    CHECK(measure_lambda1(inst, inst.points, 2.0) == 0.0);
    // S equal to optimal centers: lambda1 = 1.
    const double opt = 0.5;  // split {0,1} | {4}: 2*(0.5)^2
    CHECK(measure_lambda1(inst, {{0.5, 0}, {4, 0}}, opt) == doctest::Approx(1.0));
    CHECK(measure_lambda1(inst, {{0.5, 0}, {4, 0}}, 0.0) ==
          std::numeric_limits<double>::infinity());
    CHECK(measure_lambda1(inst, inst.points, 0.0) == 1.0);
}

TEST_CASE("subroutine registry") {
    CHECK_THROWS_AS(get_subroutine("nope"), Error);
    register_subroutine("first-points", [](const Instance& inst, const SubroutineConfig&) {
        return std::vector<Point>(inst.points.begin(), inst.points.begin() + inst.k);
    });
    Instance inst;
    inst.points = {{0, 0}, {9, 9}, {1, 1}};
    inst.k = 2;
    inst.u = 2;
    const auto S = get_subroutine("first-points")(inst, {});
    CHECK(S == std::vector<Point>{{0, 0}, {9, 9}});
    const auto names = subroutine_names();
    CHECK(std::find(names.begin(), names.end(), "d2-lloyd") != names.end());
}
