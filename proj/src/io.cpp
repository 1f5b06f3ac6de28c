#include "hckm/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hckm/rng.hpp"

namespace hckm {

using nlohmann::ordered_json;

namespace {

std::vector<Point> parse_csv(const std::string& text) {
    std::vector<Point> points;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        Point p;
        std::istringstream row(line);
        std::string cell;
        while (std::getline(row, cell, ',')) {
            std::size_t consumed = 0;
            double v;
            try {
                v = std::stod(cell, &consumed);
            } catch (const std::exception&) {
                throw Error("parse error at line " + std::to_string(line_no));
            }
            while (consumed < cell.size() && std::isspace(static_cast<unsigned char>(cell[consumed])))
                ++consumed;
            if (consumed != cell.size())
                throw Error("parse error at line " + std::to_string(line_no));
            if (!std::isfinite(v))
                throw Error("non-finite value at line " + std::to_string(line_no));
            p.push_back(v);
        }
        if (p.empty()) throw Error("parse error at line " + std::to_string(line_no));
        if (!points.empty() && p.size() != points.front().size())
            throw Error("ragged row at line " + std::to_string(line_no));
        points.push_back(std::move(p));
    }
    if (points.empty()) throw Error("empty dataset");
    return points;
}

std::vector<Point> parse_json_points(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw Error(std::string("JSON parse error: ") + e.what());
    }
    if (!doc.is_array() || doc.empty()) throw Error("expected a nonempty array of points");
    std::vector<Point> points;
    for (std::size_t j = 0; j < doc.size(); ++j) {
        const auto& row = doc[j];
        if (!row.is_array() || row.empty())
            throw Error("point " + std::to_string(j) + " is not an array");
        Point p;
        for (const auto& v : row) {
            if (!v.is_number()) throw Error("non-numeric coordinate in point " + std::to_string(j));
            const double x = v.get<double>();
            if (!std::isfinite(x)) throw Error("non-finite value in point " + std::to_string(j));
            p.push_back(x);
        }
        if (!points.empty() && p.size() != points.front().size())
            throw Error("ragged row at point " + std::to_string(j));
        points.push_back(std::move(p));
    }
    return points;
}

}  // namespace

std::vector<Point> parse_dataset(const std::string& text, DatasetFormat format) {
    return format == DatasetFormat::Csv ? parse_csv(text) : parse_json_points(text);
}

std::vector<Point> load_dataset(const std::string& path, DatasetFormat format) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_dataset(buf.str(), format);
}

std::vector<Point> generate_instance(const BlobSpec& spec) {
    if (spec.count < 1 || spec.per_blob < 1 || spec.dim < 1 || spec.sigma < 0.0 ||
        spec.spread < 0.0)
        throw Error("invalid blob spec");
    Rng rng(spec.seed);
    std::vector<Point> blob_centers;
    for (int b = 0; b < spec.count; ++b) {
        Point c(spec.dim);
        for (int i = 0; i < spec.dim; ++i) c[i] = rng.next_double() * spec.spread;
        blob_centers.push_back(std::move(c));
    }
    std::vector<Point> points;
    for (int b = 0; b < spec.count; ++b)
        for (int j = 0; j < spec.per_blob; ++j) {
            Point p(spec.dim);
            for (int i = 0; i < spec.dim; ++i)
                p[i] = blob_centers[b][i] + spec.sigma * rng.next_gaussian();
            points.push_back(std::move(p));
        }
    return points;
}

std::string solution_to_json(const Solution& solution, const Instance& instance,
                             const SubroutineConfig& config, bool include_timing) {
    ordered_json doc;
    doc["labels"] = solution.partition.labels;
    doc["centers"] = solution.partition.centers;
    doc["cost_d"] = solution.cost_after_recenter.cost_d;
    if (solution.cost_before_recenter.cost_h)
        doc["cost_h"] = *solution.cost_before_recenter.cost_h;
    else
        doc["cost_h"] = nullptr;
    doc["cost_d_before_recenter"] = solution.cost_before_recenter.cost_d;
    doc["winning_composition"] = solution.winning_composition;
    doc["compositions_evaluated"] = solution.compositions_evaluated;
    doc["subroutine_stats"] = {{"set_size", solution.subroutine_stats.set_size},
                               {"voronoi_cost", solution.subroutine_stats.voronoi_cost},
                               {"seed", solution.subroutine_stats.seed}};
    if (include_timing) doc["wall_time_ms"] = solution.wall_time_ms;
    doc["complete"] = solution.complete;
    doc["config"] = {{"k", instance.k},
                     {"u", instance.u},
                     {"epsilon_prime", config.epsilon_prime},
                     {"overseed_factor", config.overseed_factor},
                     {"lloyd_rounds", config.lloyd_rounds},
                     {"seed", config.rng_seed}};
    return doc.dump(2) + "\n";
}

void emit_solution(const Solution& solution, const Instance& instance,
                   const SubroutineConfig& config, const std::string& path,
                   bool include_timing) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << solution_to_json(solution, instance, config, include_timing);
    if (!out) throw Error("write failed: " + path);
}

}  // namespace hckm
