#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hopbound/graph.hpp"

namespace hopbound {

/// Per-iteration distance arrays d^(0..H) of the hop-limited relaxation.
struct DistanceTable {
    std::vector<std::vector<PathLength>> rows;
};

struct HopSolveResult {
    PathLength answer;
    std::vector<PathLength> final_row;
};

/// Any s-t hop-bounded solver usable interchangeably by the deciders.
using HopSolver = std::function<PathLength(const HopInstance&)>;

namespace detail {

inline std::vector<PathLength> initial_row(int node_count, int s) {
    std::vector<PathLength> row(static_cast<std::size_t>(node_count));
    row[static_cast<std::size_t>(s)] = PathLength{0};
    return row;
}

// One relaxation round: reads prev only, scans edges in stored order, both
// directions.
inline std::vector<PathLength> relax_round(const Graph& g,
                                           const std::vector<PathLength>& prev) {
    std::vector<PathLength> next = prev;
    for (const Edge& e : g.edges) {
        PathLength via_u = prev[static_cast<std::size_t>(e.u)].plus(e.w);
        if (via_u < next[static_cast<std::size_t>(e.v)])
            next[static_cast<std::size_t>(e.v)] = via_u;
        PathLength via_v = prev[static_cast<std::size_t>(e.v)].plus(e.w);
        if (via_v < next[static_cast<std::size_t>(e.u)])
            next[static_cast<std::size_t>(e.u)] = via_v;
    }
    return next;
}

}  // namespace detail

/// Minimum weight of an s-t walk with at most h edges, plus the full d^(h)
/// row. Runs exactly h relaxation rounds.
inline HopSolveResult bellman_ford_hops(const HopInstance& inst) {
    require_valid(inst);
    std::vector<PathLength> row = detail::initial_row(inst.graph.node_count, inst.s);
    for (std::int64_t i = 0; i < inst.h; ++i) row = detail::relax_round(inst.graph, row);
    PathLength answer = row[static_cast<std::size_t>(inst.t)];
    return HopSolveResult{answer, std::move(row)};
}

inline PathLength solve_bellman_ford(const HopInstance& inst) {
    return bellman_ford_hops(inst).answer;
}

/// All rows d^(0..H); row i equals bellman_ford_hops with h = i.
inline DistanceTable all_hops_table(const Graph& g, int s, std::int64_t H) {
    if (s < 0 || s >= g.node_count) throw std::invalid_argument("all_hops_table: bad source");
    if (H < 0) throw std::invalid_argument("all_hops_table: H must be >= 0");
    DistanceTable table;
    table.rows.push_back(detail::initial_row(g.node_count, s));
    for (std::int64_t i = 1; i <= H; ++i)
        table.rows.push_back(detail::relax_round(g, table.rows.back()));
    return table;
}

inline constexpr int kMinPlusOracleMaxNodes = 512;

/// Independent oracle: (min, +) adjacency-matrix power by repeated squaring,
/// O(n^3 log h). Zero diagonal makes M^h the <=h-hop walk minimum.
inline PathLength minplus_power_oracle(const HopInstance& inst) {
    require_valid(inst);
    int n = inst.graph.node_count;
    if (n > kMinPlusOracleMaxNodes)
        throw std::invalid_argument("minplus_power_oracle: instance too large");
    using Matrix = std::vector<PathLength>;
    auto at = [n](Matrix& m, int i, int j) -> PathLength& {
        return m[static_cast<std::size_t>(i) * n + j];
    };
    auto identity = [&] {
        Matrix m(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i) at(m, i, i) = PathLength{0};
        return m;
    };
    Matrix base = identity();
    for (const Edge& e : inst.graph.edges) {
        PathLength w{e.w};
        if (w < at(base, e.u, e.v)) at(base, e.u, e.v) = w;
        if (w < at(base, e.v, e.u)) at(base, e.v, e.u) = w;
    }
    auto multiply = [&](const Matrix& x, const Matrix& y) {
        Matrix z(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                PathLength xik = x[static_cast<std::size_t>(i) * n + k];
                if (xik.is_unreachable()) continue;
                for (int j = 0; j < n; ++j) {
                    PathLength ykj = y[static_cast<std::size_t>(k) * n + j];
                    if (ykj.is_unreachable()) continue;
                    PathLength cand = xik.plus(ykj.value());
                    if (cand < z[static_cast<std::size_t>(i) * n + j])
                        z[static_cast<std::size_t>(i) * n + j] = cand;
                }
            }
        return z;
    };
    Matrix result = identity();
    Matrix power = std::move(base);
    std::int64_t h = inst.h;
    while (h > 0) {
        if (h & 1) result = multiply(result, power);
        h >>= 1;
        if (h > 0) power = multiply(power, power);
    }
    return at(result, inst.s, inst.t);
}

inline constexpr int kEnumOracleMaxNodes = 12;
inline constexpr std::int64_t kEnumOracleMaxHops = 12;

/// Ground-truth oracle: exhaustive DFS over simple s-t paths with <= h edges.
inline PathLength enumerate_paths_oracle(const HopInstance& inst) {
    require_valid(inst);
    int n = inst.graph.node_count;
    if (n > kEnumOracleMaxNodes || inst.h > kEnumOracleMaxHops)
        throw std::invalid_argument("enumerate_paths_oracle: instance exceeds budget");
    std::vector<std::vector<std::pair<int, std::int64_t>>> adj(static_cast<std::size_t>(n));
    for (const Edge& e : inst.graph.edges) {
        adj[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.w);
        if (e.u != e.v) adj[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.w);
    }
    PathLength best = PathLength::unreachable();
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    std::function<void(int, std::int64_t, std::int64_t)> dfs =
        [&](int node, std::int64_t hops_left, std::int64_t length) {
            if (node == inst.t) {
                PathLength cand{length};
                if (cand < best) best = cand;
            }
            if (hops_left == 0) return;
            visited[static_cast<std::size_t>(node)] = true;
            for (auto [next, w] : adj[static_cast<std::size_t>(node)]) {
                if (visited[static_cast<std::size_t>(next)]) continue;
                dfs(next, hops_left - 1, length + w);
            }
            visited[static_cast<std::size_t>(node)] = false;
        };
    dfs(inst.s, inst.h, 0);
    return best;
}

/// Unconstrained nonnegative-weight shortest paths from s.
inline std::vector<PathLength> dijkstra_unbounded(const Graph& g, int s) {
    if (s < 0 || s >= g.node_count) throw std::invalid_argument("dijkstra: bad source");
    std::vector<std::vector<std::pair<int, std::int64_t>>> adj(
        static_cast<std::size_t>(g.node_count));
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const Edge& ed = g.edges[e];
        if (ed.w < 0)
            throw std::invalid_argument("dijkstra: negative edge " + std::to_string(e) + " (" +
                                        std::to_string(ed.u) + "," + std::to_string(ed.v) + ")");
        adj[static_cast<std::size_t>(ed.u)].emplace_back(ed.v, ed.w);
        adj[static_cast<std::size_t>(ed.v)].emplace_back(ed.u, ed.w);
    }
    std::vector<PathLength> dist(static_cast<std::size_t>(g.node_count));
    using Entry = std::pair<std::int64_t, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    dist[static_cast<std::size_t>(s)] = PathLength{0};
    heap.emplace(0, s);
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (dist[static_cast<std::size_t>(u)].is_unreachable() ||
            d > dist[static_cast<std::size_t>(u)].value())
            continue;
        for (auto [v, w] : adj[static_cast<std::size_t>(u)]) {
            PathLength cand = PathLength{d}.plus(w);
            if (cand < dist[static_cast<std::size_t>(v)]) {
                dist[static_cast<std::size_t>(v)] = cand;
                heap.emplace(cand.value(), v);
            }
        }
    }
    return dist;
}

/// Reconstructs one minimum-weight s-t walk with <= h edges by backtracking
/// through the all-hops table. Empty result means t is unreachable.
inline std::vector<int> shortest_hop_path(const HopInstance& inst) {
    require_valid(inst);
    DistanceTable table = all_hops_table(inst.graph, inst.s, inst.h);
    std::int64_t row = inst.h;
    if (table.rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(inst.t)]
            .is_unreachable())
        return {};
    std::vector<int> path{inst.t};
    int node = inst.t;
    while (row > 0) {
        const auto& cur = table.rows[static_cast<std::size_t>(row)];
        const auto& prev = table.rows[static_cast<std::size_t>(row - 1)];
        if (prev[static_cast<std::size_t>(node)] == cur[static_cast<std::size_t>(node)]) {
            --row;
            continue;
        }
        bool stepped = false;
        for (const Edge& e : inst.graph.edges) {
            int other = -1;
            if (e.v == node) other = e.u;
            else if (e.u == node) other = e.v;
            else continue;
            PathLength via = prev[static_cast<std::size_t>(other)].plus(e.w);
            if (via == cur[static_cast<std::size_t>(node)]) {
                path.push_back(other);
                node = other;
                --row;
                stepped = true;
                break;
            }
        }
        if (!stepped) throw std::logic_error("shortest_hop_path: backtracking failed");
    }
    if (node != inst.s) throw std::logic_error("shortest_hop_path: did not reach source");
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace hopbound
