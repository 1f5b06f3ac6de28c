#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hckm/core.hpp"

namespace hckm {

// Configuration of the uncapacitated k-means subroutine producing the
// representing set. epsilon_prime is epsilon/36 of the outer call.
struct SubroutineConfig {
    double epsilon_prime = 0.01;
    double overseed_factor = 3.0;
    int lloyd_rounds = 20;
    std::uint64_t rng_seed = 0;
};

// Target |S|: min(n, ceil(beta * k * max(1, ln(1/eps')))) clamped to [k, n].
int representing_set_size(int n, int k, const SubroutineConfig& config);

// Default subroutine: D^2-weighted seeding followed by Lloyd rounds.
// Deterministic per (instance, config). Returns S with k <= |S| <= n.
// round_costs, when non-null, receives the Voronoi cost after each
// executed Lloyd round (nonincreasing).
std::vector<Point> run_subroutine(const Instance& instance, const SubroutineConfig& config,
                                  std::vector<double>* round_costs = nullptr);

// cost_D(S) / oracle_opt_km. Both zero -> 1; zero denominator -> +inf.
double measure_lambda1(const Instance& instance, const std::vector<Point>& S,
                       double oracle_opt_km);

// Named plugin registry for alternative subroutines (CLI-selectable).
using SubroutineFn =
    std::function<std::vector<Point>(const Instance&, const SubroutineConfig&)>;

void register_subroutine(const std::string& name, SubroutineFn fn);
SubroutineFn get_subroutine(const std::string& name);
std::vector<std::string> subroutine_names();

}  // namespace hckm
