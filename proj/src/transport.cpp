#include "hckm/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>

namespace hckm {

std::int64_t scale_cost(double c) {
    if (!std::isfinite(c) || c < 0.0) throw Error("costs must be finite and nonnegative");
    const double scaled = std::nearbyint(c * kCostScale);  // round-half-even
    if (scaled >= 0x1.0p60) throw Error("cost magnitude exceeds scaling range");
    return static_cast<std::int64_t>(scaled);
}

double unscale_cost(std::int64_t c) { return static_cast<double>(c) / kCostScale; }

int CenterSet::total() const {
    int t = 0;
    for (int m : multiplicity) t += m;
    return t;
}

namespace {

constexpr std::int64_t kInfCost = std::numeric_limits<std::int64_t>::max() / 4;

// Successive shortest augmenting paths with potentials. All arc costs are
// nonnegative on entry, so plain Dijkstra applies throughout.
class MinCostFlowNetwork {
  public:
    explicit MinCostFlowNetwork(int n_nodes) : head_(n_nodes) {}

    void add_edge(int from, int to, std::int64_t cap, std::int64_t cost) {
        edges_.push_back({to, cap, cost, 0});
        head_[from].push_back(static_cast<int>(edges_.size()) - 1);
        edges_.push_back({from, 0, -cost, 0});
        head_[to].push_back(static_cast<int>(edges_.size()) - 1);
    }

    std::int64_t flow_on(int edge_id) const { return edges_[edge_id].flow; }

    // Pushes up to `target` units from s to t; returns (flow, cost).
    std::pair<std::int64_t, std::int64_t> run(int s, int t, std::int64_t target) {
        const int n = static_cast<int>(head_.size());
        std::vector<std::int64_t> potential(n, 0), dist(n);
        std::vector<int> prev_edge(n);
        std::int64_t flow = 0, cost = 0;
        while (flow < target) {
            dist.assign(n, kInfCost);
            dist[s] = 0;
            using Item = std::pair<std::int64_t, int>;
            std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
            heap.push({0, s});
            while (!heap.empty()) {
                auto [du, u] = heap.top();
                heap.pop();
                if (du != dist[u]) continue;
                for (int id : head_[u]) {
                    const Edge& e = edges_[id];
                    if (e.cap - e.flow <= 0) continue;
                    const std::int64_t nd = du + e.cost + potential[u] - potential[e.to];
                    if (nd < dist[e.to]) {
                        dist[e.to] = nd;
                        prev_edge[e.to] = id;
                        heap.push({nd, e.to});
                    }
                }
            }
            if (dist[t] >= kInfCost) break;  // no augmenting path left
            for (int v = 0; v < n; ++v)
                if (dist[v] < kInfCost) potential[v] += dist[v];
            std::int64_t push = target - flow;
            for (int v = t; v != s; v = edges_[prev_edge[v] ^ 1].to)
                push = std::min(push, edges_[prev_edge[v]].cap - edges_[prev_edge[v]].flow);
            for (int v = t; v != s; v = edges_[prev_edge[v] ^ 1].to) {
                edges_[prev_edge[v]].flow += push;
                edges_[prev_edge[v] ^ 1].flow -= push;
                cost += push * edges_[prev_edge[v]].cost;
            }
            flow += push;
        }
        return {flow, cost};
    }

  private:
    struct Edge {
        int to;
        std::int64_t cap;
        std::int64_t cost;
        std::int64_t flow;
    };
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> head_;
};

FlowResult solve_scaled(const std::vector<std::int64_t>& supplies,
                        const std::vector<std::int64_t>& caps,
                        const std::vector<std::vector<std::int64_t>>& cost) {
    const int ns = static_cast<int>(supplies.size());
    const int nt = static_cast<int>(caps.size());
    const std::int64_t total_supply = std::accumulate(supplies.begin(), supplies.end(), 0LL);
    const std::int64_t total_cap = std::accumulate(caps.begin(), caps.end(), 0LL);
    if (total_supply > total_cap) throw Error("infeasible: total supply exceeds total capacity");
    for (std::int64_t s : supplies)
        if (s < 0) throw Error("negative supply");
    for (std::int64_t c : caps)
        if (c < 0) throw Error("negative capacity");

    // Node layout: 0 = source, 1..ns = supplies, ns+1..ns+nt = sinks, last = t.
    const int s_node = 0, t_node = ns + nt + 1;
    MinCostFlowNetwork net(ns + nt + 2);
    std::vector<std::vector<int>> arc_id(ns, std::vector<int>(nt, -1));
    int next_id = 0;
    auto add = [&](int from, int to, std::int64_t cap, std::int64_t c) {
        net.add_edge(from, to, cap, c);
        const int id = next_id;
        next_id += 2;
        return id;
    };
    for (int a = 0; a < ns; ++a)
        if (supplies[a] > 0) add(s_node, 1 + a, supplies[a], 0);
    for (int a = 0; a < ns; ++a) {
        if (supplies[a] <= 0) continue;
        for (int b = 0; b < nt; ++b) {
            if (caps[b] <= 0) continue;
            arc_id[a][b] = add(1 + a, 1 + ns + b, supplies[a], cost[a][b]);
        }
    }
    for (int b = 0; b < nt; ++b)
        if (caps[b] > 0) add(1 + ns + b, t_node, caps[b], 0);

    const auto [flow, scaled] = net.run(s_node, t_node, total_supply);
    if (flow < total_supply) throw Error("infeasible: could not saturate all supplies");

    FlowResult result;
    result.flow.assign(ns, std::vector<std::int64_t>(nt, 0));
    for (int a = 0; a < ns; ++a)
        for (int b = 0; b < nt; ++b)
            if (arc_id[a][b] >= 0) result.flow[a][b] = net.flow_on(arc_id[a][b]);
    result.total_cost_scaled = scaled;
    result.total_cost = unscale_cost(scaled);
    return result;
}

}  // namespace

FlowResult solve(const AssignmentProblem& problem) {
    const int ns = static_cast<int>(problem.supplies.size());
    const int nt = static_cast<int>(problem.demands_cap.size());
    if (static_cast<int>(problem.cost.size()) != ns) throw Error("cost table row count mismatch");
    std::vector<std::vector<std::int64_t>> scaled(ns, std::vector<std::int64_t>(nt));
    for (int a = 0; a < ns; ++a) {
        if (static_cast<int>(problem.cost[a].size()) != nt)
            throw Error("cost table column count mismatch");
        for (int b = 0; b < nt; ++b) scaled[a][b] = scale_cost(problem.cost[a][b]);
    }
    return solve_scaled(problem.supplies, problem.demands_cap, scaled);
}

std::pair<Partition, CostReport> assign_points(const Instance& instance,
                                               const CenterSet& centers, Metric metric,
                                               const VoronoiIndex* index) {
    if (centers.locations.size() != centers.multiplicity.size())
        throw Error("center set multiplicity mismatch");
    if (metric == Metric::H && index == nullptr)
        throw Error("metric H requires a Voronoi index");
    for (int m : centers.multiplicity)
        if (m < 1) throw Error("center multiplicity must be >= 1");

    // Merge duplicate locations into one sink each.
    std::vector<Point> locs;
    std::vector<int> mult;
    for (std::size_t i = 0; i < centers.locations.size(); ++i) {
        auto it = std::find(locs.begin(), locs.end(), centers.locations[i]);
        if (it == locs.end()) {
            locs.push_back(centers.locations[i]);
            mult.push_back(centers.multiplicity[i]);
        } else {
            mult[it - locs.begin()] += centers.multiplicity[i];
        }
    }

    const int n = instance.n();
    const int nsinks = static_cast<int>(locs.size());
    const std::int64_t k_total = centers.total();
    if (k_total * instance.u < n) throw InfeasibleError();

    std::vector<std::int64_t> supplies(n, 1), caps(nsinks);
    for (int b = 0; b < nsinks; ++b) caps[b] = mult[b] * instance.u;

    // Metric H costs are scaled per term so the region-level formulation
    // matches this one exactly in integer arithmetic.
    std::vector<std::vector<std::int64_t>> cost(n, std::vector<std::int64_t>(nsinks));
    std::vector<int> sink_region(nsinks, -1);
    std::vector<std::int64_t> sink_snap(nsinks, 0);
    if (metric == Metric::H) {
        for (int b = 0; b < nsinks; ++b) {
            auto [region, dd] = index->resolve(locs[b]);
            sink_region[b] = region;
            sink_snap[b] = scale_cost(dd);
        }
    }
    for (int j = 0; j < n; ++j) {
        for (int b = 0; b < nsinks; ++b) {
            if (metric == Metric::D) {
                cost[j][b] = scale_cost(dist_d(instance.points[j], locs[b]));
            } else {
                const int rj = index->region_of[j];
                cost[j][b] = scale_cost(index->dist_to_region[j]) +
                             scale_cost(dist_d(index->representing_points[rj],
                                               index->representing_points[sink_region[b]])) +
                             sink_snap[b];
            }
        }
    }

    FlowResult flow = solve_scaled(supplies, caps, cost);

    // Expand merged sinks into per-copy clusters: within a sink, points in
    // index order fill copies in chunks of u. All copies share a location,
    // so any split of equal chunk sizes is cost-identical.
    Partition partition;
    partition.labels.assign(n, -1);
    std::vector<int> base(nsinks, 0);
    int next_cluster = 0;
    for (int b = 0; b < nsinks; ++b) {
        base[b] = next_cluster;
        for (int c = 0; c < mult[b]; ++c) partition.centers.push_back(locs[b]);
        next_cluster += mult[b];
    }
    std::vector<std::int64_t> filled(nsinks, 0);
    for (int j = 0; j < n; ++j) {
        int sink = -1;
        for (int b = 0; b < nsinks; ++b)
            if (flow.flow[j][b] > 0) sink = b;
        if (sink < 0) throw Error("point left unassigned by flow");
        partition.labels[j] = base[sink] + static_cast<int>(filled[sink] / instance.u);
        ++filled[sink];
    }

    CostReport report;
    report.cost_d = evaluate_cost_d(instance, partition);
    if (metric == Metric::H) report.cost_h = flow.total_cost;
    return {std::move(partition), report};
}

RegionAssignment assign_regions_h(const VoronoiIndex& index,
                                  const std::vector<int>& composition, std::int64_t u) {
    const int s = static_cast<int>(index.representing_points.size());
    if (static_cast<int>(composition.size()) != s)
        throw Error("composition length must equal |S|");
    std::int64_t k_total = 0;
    for (int c : composition) {
        if (c < 0) throw Error("negative composition entry");
        k_total += c;
    }
    const std::int64_t n = static_cast<std::int64_t>(index.data_points.size());
    if (k_total * u < n) throw InfeasibleError();

    std::vector<std::int64_t> caps(s);
    for (int b = 0; b < s; ++b) caps[b] = composition[b] * u;
    std::vector<std::vector<std::int64_t>> cost(s, std::vector<std::int64_t>(s));
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b)
            cost[a][b] = scale_cost(dist_d(index.representing_points[a],
                                           index.representing_points[b]));

    RegionAssignment out;
    out.flow = solve_scaled(index.per_region_count, caps, cost);
    std::int64_t voronoi_scaled = 0;
    for (double dd : index.dist_to_region) voronoi_scaled += scale_cost(dd);
    out.cost_h_scaled = voronoi_scaled + out.flow.total_cost_scaled;
    out.cost_h = unscale_cost(out.cost_h_scaled);
    return out;
}

}  // namespace hckm
