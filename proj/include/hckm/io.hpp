#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hckm/core.hpp"
#include "hckm/driver.hpp"

namespace hckm {

enum class DatasetFormat { Csv, Json };

// CSV: one point per line, comma-separated reals, uniform arity.
// JSON: array of arrays of numbers. NaN/inf and ragged rows are rejected.
std::vector<Point> load_dataset(const std::string& path, DatasetFormat format);
std::vector<Point> parse_dataset(const std::string& text, DatasetFormat format);

struct BlobSpec {
    int count = 1;       // number of blobs
    int per_blob = 10;   // points per blob
    double sigma = 1.0;  // isotropic std within a blob
    double spread = 10;  // extent of the box holding blob centers
    int dim = 2;
    std::uint64_t seed = 0;
};

// Deterministic Gaussian-blob generator for benchmarks.
std::vector<Point> generate_instance(const BlobSpec& spec);

// JSON with stable key order: labels, centers, cost_d, cost_h,
// winning_composition, compositions_evaluated, subroutine_stats,
// wall_time_ms, config. Timing fields can be suppressed for byte-stable
// comparisons.
std::string solution_to_json(const Solution& solution, const Instance& instance,
                             const SubroutineConfig& config, bool include_timing = true);

void emit_solution(const Solution& solution, const Instance& instance,
                   const SubroutineConfig& config, const std::string& path,
                   bool include_timing = true);

}  // namespace hckm
