#include <doctest.h>

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "hckm/driver.hpp"
#include "hckm/io.hpp"

using namespace hckm;

TEST_CASE("CSV parsing") {
    const auto points = parse_dataset("0,0\n3,4\n", DatasetFormat::Csv);
    REQUIRE(points.size() == 2);
    CHECK(points[1] == Point{3, 4});

    CHECK_THROWS_WITH_AS(parse_dataset("0,0\n1\n", DatasetFormat::Csv),
                         "ragged row at line 2", Error);
    CHECK_THROWS_AS(parse_dataset("", DatasetFormat::Csv), Error);
    CHECK_THROWS_AS(parse_dataset("a,b\n", DatasetFormat::Csv), Error);
    CHECK_THROWS_AS(parse_dataset("1,nan\n", DatasetFormat::Csv), Error);
}

TEST_CASE("JSON parsing") {
    const auto points = parse_dataset("[[1,2,3]]", DatasetFormat::Json);
    REQUIRE(points.size() == 1);
    CHECK(points[0] == Point{1, 2, 3});
    CHECK_THROWS_AS(parse_dataset("[[1,2],[3]]", DatasetFormat::Json), Error);
    CHECK_THROWS_AS(parse_dataset("{\"x\": 1}", DatasetFormat::Json), Error);
    CHECK_THROWS_AS(parse_dataset("[[1,\"a\"]]", DatasetFormat::Json), Error);
}

TEST_CASE("blob generator") {
    SUBCASE("sigma 0 degenerates to copies") {
        const auto points = generate_instance({2, 3, 0.0, 10, 2, 123});
        REQUIRE(points.size() == 6);
        CHECK(points[0] == points[1]);
        CHECK(points[0] == points[2]);
        CHECK(points[3] == points[4]);
        CHECK(points[0] != points[3]);
    }
    SUBCASE("deterministic per seed") {
        CHECK(generate_instance({1, 5, 1.0, 0, 2, 7}) == generate_instance({1, 5, 1.0, 0, 2, 7}));
        CHECK(generate_instance({1, 5, 1.0, 3, 2, 7}) != generate_instance({1, 5, 1.0, 3, 2, 8}));
    }
}

TEST_CASE("solution JSON round trip") {
    Instance inst{generate_instance({2, 4, 0.3, 10, 2, 20}), 2, 5};
    SubroutineConfig cfg;
    cfg.rng_seed = 20;
    const Solution sol = solve_hckm(inst, cfg);

    const std::string path = "hckm_test_solution.json";
    emit_solution(sol, inst, cfg, path);
    std::ifstream in(path);
    REQUIRE(in.good());
    const auto doc = nlohmann::json::parse(in);
    std::remove(path.c_str());

    // Recompute cost_d from the emitted labels and centers.
    Partition p;
    p.labels = doc["labels"].get<std::vector<int>>();
    p.centers = doc["centers"].get<std::vector<Point>>();
    const double recomputed = evaluate_cost_d(inst, p);
    CHECK(recomputed == doctest::Approx(doc["cost_d"].get<double>()).epsilon(1e-9));
    CHECK(doc["compositions_evaluated"].get<std::uint64_t>() == sol.compositions_evaluated);
    CHECK(doc["config"]["k"].get<int>() == inst.k);

    CHECK_THROWS_AS(emit_solution(sol, inst, cfg, "no_such_dir/x.json"), Error);
}
