#include <doctest.h>

#include <limits>

#include "hckm/core.hpp"
#include "hckm/metrics.hpp"
#include "hckm/rng.hpp"

using namespace hckm;

namespace {

Instance make_instance(int n, int k, std::int64_t u) {
    Instance inst;
    inst.k = k;
    inst.u = u;
    for (int j = 0; j < n; ++j) inst.points.push_back({static_cast<double>(j), 0.0});
    return inst;
}

// Independent existence check: some labeling into k clusters of size <= u.
bool feasible_labeling_exists(int n, int k, std::int64_t u) {
    std::vector<int> labels(n, 0);
    while (true) {
        std::vector<std::int64_t> sizes(k, 0);
        for (int l : labels) ++sizes[l];
        bool ok = true;
        for (std::int64_t s : sizes) ok = ok && s <= u;
        if (ok) return true;
        int pos = n - 1;
        while (pos >= 0 && labels[pos] == k - 1) labels[pos--] = 0;
        if (pos < 0) return false;
        ++labels[pos];
    }
}

}  // namespace

TEST_CASE("check_feasibility matches the integer gate") {
    CHECK(check_feasibility(make_instance(10, 3, 4)));
    CHECK_FALSE(check_feasibility(make_instance(10, 3, 3)));
    CHECK_FALSE(check_feasibility(make_instance(5, 6, 1)));
    CHECK(check_feasibility(make_instance(5, 5, 1)));
}

TEST_CASE("feasibility gate agrees with exhaustive labeling search") {
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k)
            for (std::int64_t u = 1; u <= n; ++u)
                CHECK(check_feasibility(make_instance(n, k, u)) ==
                      feasible_labeling_exists(n, k, u));
}

TEST_CASE("centroid") {
    CHECK(centroid({{0, 0}, {2, 0}}) == Point{1, 0});
    CHECK(centroid({{1, 2, 3}}) == Point{1, 2, 3});
    CHECK(centroid({{0, 0}, {1, 0}, {0, 1}, {1, 1}}) == Point{0.5, 0.5});
    CHECK_THROWS_WITH_AS(centroid({}), "empty cluster has no centroid", Error);
}

TEST_CASE("evaluate_cost_d") {
    Instance inst;
    inst.points = {{0, 0}, {2, 0}};
    inst.k = 1;
    inst.u = 2;
    Partition p{{0, 0}, {{1, 0}}};
    CHECK(evaluate_cost_d(inst, p) == doctest::Approx(2.0));

    Partition own{{0, 1}, {{0, 0}, {2, 0}}};
    CHECK(evaluate_cost_d(inst, own) == 0.0);

    Instance far;
    far.points = {{0, 0}, {3, 4}};
    far.k = 1;
    far.u = 2;
    Partition origin{{0, 0}, {{0, 0}}};
    CHECK(evaluate_cost_d(far, origin) == doctest::Approx(25.0));

    Partition bad{{0, 0}, {{0, 0, 0}}};
    CHECK_THROWS_AS(evaluate_cost_d(far, bad), Error);
}

TEST_CASE("centroid minimizes within-cluster cost") {
    Rng rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const int size = 1 + static_cast<int>(rng.next_below(6));
        std::vector<Point> cluster;
        for (int j = 0; j < size; ++j)
            cluster.push_back({rng.next_double() * 10, rng.next_double() * 10});
        const Point ctr = centroid(cluster);
        const Point other{rng.next_double() * 10, rng.next_double() * 10};
        double at_ctr = 0, at_other = 0;
        for (const Point& x : cluster) {
            at_ctr += dist_d(x, ctr);
            at_other += dist_d(x, other);
        }
        CHECK(at_ctr <= at_other + 1e-9);
    }
}

TEST_CASE("cost is invariant under cluster relabeling") {
    Instance inst;
    inst.points = {{0, 0}, {1, 0}, {5, 5}, {6, 5}};
    inst.k = 2;
    inst.u = 2;
    Partition p{{0, 0, 1, 1}, {{0.5, 0}, {5.5, 5}}};
    Partition swapped{{1, 1, 0, 0}, {{5.5, 5}, {0.5, 0}}};
    CHECK(evaluate_cost_d(inst, p) == evaluate_cost_d(inst, swapped));
}

TEST_CASE("instance validation rejects bad input") {
    Instance inst = make_instance(3, 1, 3);
    inst.points[1] = {1.0};
    CHECK_THROWS_AS(inst.validate(), Error);
    inst = make_instance(3, 1, 3);
    inst.points[2][0] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(inst.validate(), Error);
}
