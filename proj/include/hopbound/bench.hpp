#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <string_view>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hopbound/generators.hpp"
#include "hopbound/graph.hpp"
#include "hopbound/solvers.hpp"

namespace hopbound {

struct BenchRecord {
    std::string instance_id;
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t h = 0;
    std::uint64_t seed = 0;
    std::string solver;
    int rep = 0;
    std::int64_t nanos = 0;
};

inline constexpr const char* kBenchCsvHeader = "instance_id,n,m,h,seed,solver,rep,nanos";

/// reps timed runs after one discarded warm-up; the solver result must be
/// identical across all runs.
template <typename Solver>
std::vector<BenchRecord> time_solver(const HopInstance& inst, const std::string& solver_name,
                                     Solver&& solver, int reps,
                                     const std::string& instance_id = "instance",
                                     std::uint64_t seed = 0) {
    if (reps < 1) throw std::invalid_argument("time_solver: reps must be >= 1");
    using Clock = std::chrono::steady_clock;
    PathLength warmup = solver(inst);
    std::vector<BenchRecord> out;
    for (int rep = 0; rep < reps; ++rep) {
        auto start = Clock::now();
        PathLength result = solver(inst);
        auto stop = Clock::now();
        if (!(result == warmup))
            throw std::runtime_error("time_solver: nondeterministic solver result");
        BenchRecord rec;
        rec.instance_id = instance_id;
        rec.n = inst.graph.node_count;
        rec.m = static_cast<std::int64_t>(inst.graph.edges.size());
        rec.h = inst.h;
        rec.seed = seed;
        rec.solver = solver_name;
        rec.rep = rep;
        rec.nanos = std::max<std::int64_t>(
            1, std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
        out.push_back(std::move(rec));
    }
    return out;
}

inline double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

/// Least-squares slope of log(time) vs log(x) over per-x median times.
inline double fit_slope(const std::vector<std::pair<double, double>>& points) {
    std::map<double, std::vector<double>> by_x;
    for (auto [x, t] : points) {
        if (x <= 0 || t <= 0) throw std::invalid_argument("fit_slope: need positive values");
        by_x[x].push_back(t);
    }
    if (by_x.size() < 3) throw std::invalid_argument("fit_slope: need at least 3 distinct x");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    double count = 0;
    for (auto& [x, times] : by_x) {
        double lx = std::log(x);
        double ly = std::log(median(times));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        count += 1;
    }
    return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

inline std::string records_to_csv(const std::vector<BenchRecord>& records) {
    std::ostringstream os;
    os << kBenchCsvHeader << '\n';
    for (const BenchRecord& r : records)
        os << r.instance_id << ',' << r.n << ',' << r.m << ',' << r.h << ',' << r.seed << ','
           << r.solver << ',' << r.rep << ',' << r.nanos << '\n';
    return os.str();
}

inline std::vector<BenchRecord> parse_csv(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string line;
    if (!std::getline(is, line) || line != kBenchCsvHeader)
        throw std::runtime_error("bench csv: bad header");
    std::vector<BenchRecord> out;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = line.find(',', pos);
            fields.push_back(line.substr(pos, comma - pos));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (fields.size() != 8) throw std::runtime_error("bench csv: bad row");
        BenchRecord r;
        r.instance_id = fields[0];
        r.n = std::stoll(fields[1]);
        r.m = std::stoll(fields[2]);
        r.h = std::stoll(fields[3]);
        r.seed = std::stoull(fields[4]);
        r.solver = fields[5];
        r.rep = std::stoi(fields[6]);
        r.nanos = std::stoll(fields[7]);
        out.push_back(std::move(r));
    }
    return out;
}

/// One timed sweep over the grid: per point, generate the instance, run each
/// named solver reps times. Timed runs are strictly sequential.
inline std::string scaling_experiment(
    const std::vector<ParamPoint>& grid,
    const std::vector<std::pair<std::string, std::function<PathLength(const HopInstance&)>>>&
        solvers,
    int reps) {
    if (grid.empty()) throw std::invalid_argument("scaling_experiment: empty grid");
    std::vector<BenchRecord> records;
    int point_index = 0;
    for (const ParamPoint& p : grid) {
        ParamInstance pi = gen_param_instance(p);
        std::string id = "g" + std::to_string(point_index++);
        for (const auto& [name, fn] : solvers) {
            auto recs = time_solver(pi.instance, name, fn, reps, id, p.seed);
            records.insert(records.end(), recs.begin(), recs.end());
        }
    }
    return records_to_csv(records);
}

}  // namespace hopbound
