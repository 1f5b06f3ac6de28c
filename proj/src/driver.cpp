#include "hckm/driver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>

namespace hckm {

namespace {

struct SweepBest {
    std::int64_t cost_scaled = std::numeric_limits<std::int64_t>::max();
    std::uint64_t rank = std::numeric_limits<std::uint64_t>::max();
    Composition composition;

    void offer(std::int64_t cost, std::uint64_t r, const Composition& c) {
        // Ranks follow ascending lexicographic order, so the smaller rank
        // is the lexicographically smaller composition.
        if (cost < cost_scaled || (cost == cost_scaled && r < rank)) {
            cost_scaled = cost;
            rank = r;
            composition = c;
        }
    }
};

}  // namespace

Solution solve_hckm(const Instance& instance, const SubroutineConfig& config,
                    const DriverOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    instance.validate();
    if (!check_feasibility(instance)) throw InfeasibleError();

    const auto subroutine = get_subroutine(options.subroutine);
    const std::vector<Point> S = subroutine(instance, config);
    const VoronoiIndex index = build_voronoi_index(instance, S);

    const int n = instance.n();
    const int k = instance.k;
    const int set_size = static_cast<int>(S.size());
    const int slot_cap =
        options.prune
            ? std::min<std::int64_t>(k, (n + instance.u - 1) / instance.u)
            : k;
    const std::uint64_t total = count_compositions(set_size, k, slot_cap);
    if (total == 0) throw Error("empty composition stream on a feasible instance");

    const int workers = std::max(1, options.workers);
    std::vector<SweepBest> bests(workers);
    std::atomic<std::uint64_t> evaluated{0};
    std::atomic<std::uint64_t> progress_mark{0};

    auto sweep_chunk = [&](int w, std::uint64_t begin, std::uint64_t end) {
        SweepBest& best = bests[w];
        std::uint64_t rank = begin;
        enumerate_composition_range(set_size, k, slot_cap, begin, end,
                                    [&](const Composition& p) {
            if (options.cancel && options.cancel->load()) return false;
            const RegionAssignment ra = assign_regions_h(index, p, instance.u);
            best.offer(ra.cost_h_scaled, rank, p);
            ++rank;
            const std::uint64_t done = ++evaluated;
            if (options.progress_every && options.on_progress &&
                done / options.progress_every > progress_mark.exchange(
                                                    done / options.progress_every))
                options.on_progress(done, total);
            return true;
        });
    };

    if (workers == 1) {
        sweep_chunk(0, 0, total);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (total + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const std::uint64_t begin = std::min<std::uint64_t>(w * chunk, total);
            const std::uint64_t end = std::min<std::uint64_t>(begin + chunk, total);
            if (begin < end) pool.emplace_back(sweep_chunk, w, begin, end);
        }
        for (auto& t : pool) t.join();
    }

    SweepBest winner;
    for (const SweepBest& b : bests)
        if (!b.composition.empty()) winner.offer(b.cost_scaled, b.rank, b.composition);
    if (winner.composition.empty()) throw Error("sweep evaluated no composition");

    CenterSet centers;
    for (int i = 0; i < set_size; ++i) {
        if (winner.composition[i] == 0) continue;
        centers.locations.push_back(S[i]);
        centers.multiplicity.push_back(winner.composition[i]);
    }

    Solution solution;
    auto [partition, report] = assign_points(instance, centers, Metric::H, &index);
    solution.partition = std::move(partition);
    solution.cost_before_recenter = report;

    // Recentering: each nonempty cluster moves to its centroid; labels stay.
    const auto sizes = cluster_sizes(solution.partition, n);
    for (std::size_t c = 0; c < solution.partition.centers.size(); ++c) {
        if (sizes[c] == 0) continue;
        std::vector<Point> members;
        for (int j = 0; j < n; ++j)
            if (solution.partition.labels[j] == static_cast<int>(c))
                members.push_back(instance.points[j]);
        solution.partition.centers[c] = centroid(members);
    }
    solution.cost_after_recenter.cost_d = evaluate_cost_d(instance, solution.partition);
    solution.cost_after_recenter.cost_h = std::nullopt;

    solution.winning_composition = winner.composition;
    solution.compositions_evaluated = evaluated.load();
    solution.subroutine_stats = {set_size, index.voronoi_cost, config.rng_seed};
    solution.complete = !(options.cancel && options.cancel->load());
    solution.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return solution;
}

double ratio_bound(double lambda1, double lambda2) {
    return 3.0 * lambda2 * (11.0 + 12.0 * lambda1);
}

SandwichReport verify_sandwich(const Instance& instance, const VoronoiIndex& index,
                               const Partition& partition) {
    SandwichReport report;
    report.cost_d = evaluate_cost_d(instance, partition);
    for (std::size_t j = 0; j < instance.points.size(); ++j)
        report.cost_h +=
            dist_h(instance.points[j], partition.centers[partition.labels[j]], index);
    report.slack = 3.0 * report.cost_h - report.cost_d;
    report.holds = report.cost_d <=
                   3.0 * report.cost_h + 1e-9 * std::max(report.cost_d, 1.0);
    return report;
}

}  // namespace hckm
