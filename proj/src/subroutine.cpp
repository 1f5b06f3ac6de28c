#include "hckm/subroutine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>

#include "hckm/metrics.hpp"
#include "hckm/rng.hpp"

namespace hckm {

int representing_set_size(int n, int k, const SubroutineConfig& config) {
    if (config.epsilon_prime <= 0.0) throw Error("epsilon_prime must be positive");
    if (config.overseed_factor <= 0.0) throw Error("overseed_factor must be positive");
    const double log_term = std::max(1.0, std::log(1.0 / config.epsilon_prime));
    const double raw = std::ceil(config.overseed_factor * k * log_term);
    int m = raw >= static_cast<double>(n) ? n : static_cast<int>(raw);
    m = std::min(m, n);
    m = std::max(m, k);
    return m;
}

namespace {

// D^2 seeding: first center uniform, then proportional to current
// squared distance to the nearest chosen center.
std::vector<int> d2_seed(const std::vector<Point>& points, int m, Rng& rng) {
    const int n = static_cast<int>(points.size());
    std::vector<int> chosen;
    chosen.reserve(m);
    chosen.push_back(static_cast<int>(rng.next_below(n)));
    std::vector<double> min_dist(n);
    for (int j = 0; j < n; ++j) min_dist[j] = dist_d(points[j], points[chosen[0]]);
    while (static_cast<int>(chosen.size()) < m) {
        double total = 0.0;
        for (double dd : min_dist) total += dd;
        int pick;
        if (total <= 0.0) {
            // All mass on already-covered points; fall back to uniform.
            pick = static_cast<int>(rng.next_below(n));
        } else {
            const double target = rng.next_double() * total;
            double acc = 0.0;
            pick = n - 1;
            for (int j = 0; j < n; ++j) {
                acc += min_dist[j];
                if (target < acc) {
                    pick = j;
                    break;
                }
            }
        }
        chosen.push_back(pick);
        for (int j = 0; j < n; ++j)
            min_dist[j] = std::min(min_dist[j], dist_d(points[j], points[pick]));
    }
    return chosen;
}

}  // namespace

std::vector<Point> run_subroutine(const Instance& instance, const SubroutineConfig& config,
                                  std::vector<double>* round_costs) {
    instance.validate();
    const int n = instance.n();
    const int m = representing_set_size(n, instance.k, config);
    Rng rng(config.rng_seed);

    std::vector<Point> centers;
    centers.reserve(m);
    for (int idx : d2_seed(instance.points, m, rng)) centers.push_back(instance.points[idx]);

    if (round_costs) round_costs->clear();
    std::vector<int> label(n, 0);
    for (int round = 0; round < config.lloyd_rounds; ++round) {
        bool changed = false;
        double assign_cost = 0.0;
        for (int j = 0; j < n; ++j) {
            int best = 0;
            double best_dist = dist_d(instance.points[j], centers[0]);
            for (int i = 1; i < m; ++i) {
                const double dd = dist_d(instance.points[j], centers[i]);
                if (dd < best_dist) {
                    best_dist = dd;
                    best = i;
                }
            }
            if (label[j] != best) changed = true;
            label[j] = best;
            assign_cost += best_dist;
        }
        if (round_costs) round_costs->push_back(assign_cost);
        std::vector<Point> sums(m, Point(instance.dim(), 0.0));
        std::vector<int> counts(m, 0);
        for (int j = 0; j < n; ++j) {
            for (int c = 0; c < instance.dim(); ++c) sums[label[j]][c] += instance.points[j][c];
            ++counts[label[j]];
        }
        for (int i = 0; i < m; ++i) {
            if (counts[i] == 0) continue;  // degenerate cell keeps its center
            for (int c = 0; c < instance.dim(); ++c) centers[i][c] = sums[i][c] / counts[i];
        }
        if (!changed && round > 0) break;
    }
    return centers;
}

double measure_lambda1(const Instance& instance, const std::vector<Point>& S,
                       double oracle_opt_km) {
    const double cost = build_voronoi_index(instance, S).voronoi_cost;
    if (oracle_opt_km <= 0.0)
        return cost > 0.0 ? std::numeric_limits<double>::infinity() : 1.0;
    return cost / oracle_opt_km;
}

namespace {
std::map<std::string, SubroutineFn>& registry() {
    static std::map<std::string, SubroutineFn> r = {
        {"d2-lloyd", [](const Instance& inst, const SubroutineConfig& cfg) {
             return run_subroutine(inst, cfg);
         }}};
    return r;
}
std::mutex registry_mutex;
}  // namespace

void register_subroutine(const std::string& name, SubroutineFn fn) {
    std::lock_guard<std::mutex> lock(registry_mutex);
    registry()[name] = std::move(fn);
}

SubroutineFn get_subroutine(const std::string& name) {
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto it = registry().find(name);
    if (it == registry().end()) throw Error("unknown subroutine: " + name);
    return it->second;
}

std::vector<std::string> subroutine_names() {
    std::lock_guard<std::mutex> lock(registry_mutex);
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
}

}  // namespace hckm
