#include <doctest.h>

#include "hckm/metrics.hpp"
#include "hckm/rng.hpp"

using namespace hckm;

namespace {
Point random_point(Rng& rng, int dim, double extent = 1.0) {
    Point p(dim);
    for (double& c : p) c = rng.next_double() * extent;
    return p;
}
}  // namespace

TEST_CASE("dist_d basics") {
    CHECK(dist_d({0, 0}, {3, 4}) == doctest::Approx(25.0));
    CHECK(dist_d({1.5, -2}, {1.5, -2}) == 0.0);
    CHECK(dist_d({1, 1, 1}, {2, 2, 2}) == doctest::Approx(3.0));
    CHECK_THROWS_AS(dist_d({1, 2}, {1, 2, 3}), Error);
}

TEST_CASE("build_voronoi_index") {
    Instance inst;
    inst.k = 2;
    inst.u = 1;

    SUBCASE("points coincide with S") {
        inst.points = {{0, 0}, {10, 0}};
        const auto index = build_voronoi_index(inst, {{0, 0}, {10, 0}});
        CHECK(index.per_region_count == std::vector<std::int64_t>{1, 1});
        CHECK(index.voronoi_cost == 0.0);
        CHECK(index.region_of == std::vector<int>{0, 1});
    }
    SUBCASE("nearest center wins") {
        inst.points = {{1, 0}};
        const auto index = build_voronoi_index(inst, {{0, 0}, {10, 0}});
        CHECK(index.region_of == std::vector<int>{0});
        CHECK(index.voronoi_cost == doctest::Approx(1.0));
    }
    SUBCASE("ties break to the lowest index") {
        inst.points = {{5, 0}};
        const auto index = build_voronoi_index(inst, {{0, 0}, {10, 0}});
        CHECK(dist_d({5, 0}, {0, 0}) == dist_d({5, 0}, {10, 0}));
        CHECK(index.region_of == std::vector<int>{0});
    }
    SUBCASE("empty S rejected") {
        inst.points = {{0, 0}};
        CHECK_THROWS_AS(build_voronoi_index(inst, {}), Error);
    }
}

TEST_CASE("dist_h") {
    Instance inst;
    inst.points = {{1, 0}};
    inst.k = 1;
    inst.u = 1;
    const auto index = build_voronoi_index(inst, {{0, 0}, {10, 0}});

    // Both endpoints in S: first and third terms vanish.
    CHECK(dist_h({0, 0}, {10, 0}, index) == doctest::Approx(100.0));
    // y is x's representing point.
    CHECK(dist_h({1, 0}, {0, 0}, index) == doctest::Approx(1.0));
    // Three-term sum: 1 + 100 + 0.
    CHECK(dist_h({1, 0}, {10, 0}, index) == doctest::Approx(101.0));
    // Symmetry.
    CHECK(dist_h({10, 0}, {1, 0}, index) == dist_h({1, 0}, {10, 0}, index));
    // No identity of indiscernibles: h(x,x) = 2 d(x, pi(x)).
    CHECK(dist_h({1, 0}, {1, 0}, index) == doctest::Approx(2.0));
}

TEST_CASE("extended triangle inequality") {
    CHECK(check_extended_triangle({1, 2}, {1, 2}, {7, -3}));
    // Tight at the midpoint: 4 <= 2(1+1).
    CHECK(check_extended_triangle({0, 0}, {2, 0}, {1, 0}));
    Rng rng(42);
    for (int t = 0; t < 10000; ++t) {
        const Point i = random_point(rng, 5), j = random_point(rng, 5), k = random_point(rng, 5);
        CHECK(check_extended_triangle(i, j, k));
    }
}

TEST_CASE("four point inequality") {
    CHECK(check_four_point({3, 3}, {3, 3}, {3, 3}, {3, 3}));
    // Collinear equally spaced: 9 <= 3(1+1+1).
    CHECK(check_four_point({0}, {1}, {2}, {3}));
    Rng rng(43);
    for (int t = 0; t < 10000; ++t)
        CHECK(check_four_point(random_point(rng, 5), random_point(rng, 5),
                               random_point(rng, 5), random_point(rng, 5)));
}

TEST_CASE("H-metric properties against the index") {
    Rng rng(7);
    Instance inst;
    inst.k = 3;
    inst.u = 4;
    for (int j = 0; j < 12; ++j) inst.points.push_back(random_point(rng, 3, 5.0));
    std::vector<Point> S = {inst.points[0], inst.points[4], inst.points[9]};
    const auto index = build_voronoi_index(inst, S);

    for (int t = 0; t < 500; ++t) {
        const Point x = inst.points[rng.next_below(12)];
        const Point s = S[rng.next_below(3)];
        const auto [rx, dx] = index.resolve(x);
        CHECK(dist_h(x, s, index) >= dx);
        const Point y = random_point(rng, 3, 5.0);
        CHECK(dist_d(x, y) <= 3.0 * dist_h(x, y, index) + 1e-9);
        // Center snapping: h(x,c) = h(x, pi(c)) + d(c, pi(c)).
        const auto [rc, dc] = index.resolve(y);
        CHECK(dist_h(x, y, index) ==
              doctest::Approx(dist_h(x, index.representing_points[rc], index) + dc));
    }
    // Representing points map to themselves.
    for (std::size_t i = 0; i < S.size(); ++i) {
        const auto [r, dd] = index.resolve(S[i]);
        CHECK(r == static_cast<int>(i));
        CHECK(dd == 0.0);
    }
}
