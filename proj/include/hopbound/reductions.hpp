#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hopbound/convolution.hpp"
#include "hopbound/graph.hpp"
#include "hopbound/solvers.hpp"
#include "hopbound/triangle.hpp"

namespace hopbound {

enum class ReductionKind { triangle, convolution };

inline const char* to_string(ReductionKind k) {
    return k == ReductionKind::triangle ? "triangle" : "convolution";
}

/// Which graph node realizes which source-problem element. Roles are
/// "a", "b", "c", "abar" (triangle) and "u", "v", "w", "x" (convolution);
/// index is the 0-based source index except for "x", where it is the 1-based
/// pair index l.
struct NodeMapEntry {
    std::string role;
    int index;
    int node;

    friend bool operator==(const NodeMapEntry&, const NodeMapEntry&) = default;
};

/// A produced hop-bounded instance with its decision threshold: the source
/// problem is a YES-instance iff the shortest <=h-hop s-t path is < threshold.
struct ReductionArtifact {
    HopInstance instance;
    std::int64_t threshold = 0;
    std::int64_t weight_scale = 0;  // W of the construction
    std::vector<NodeMapEntry> node_map;
    ReductionKind kind = ReductionKind::triangle;
};

/// Negative Triangle -> hop-bounded path. Nodes a_1..a_P, b_1..b_N,
/// c_1..c_N, abar_1..abar_P; zero-weight chains along A and Abar; tripartite
/// edges carry the source weight plus a hop-position penalty. s = a_1,
/// t = abar_P, h = P + 2, threshold 3(P+2)W.
inline ReductionArtifact reduce_triangle_to_hop(const TriangleInstance& inst) {
    require_valid(inst);
    const int P = inst.P;
    const int N = inst.N;
    const std::int64_t W = triangle_weight_scale(inst);
    if (3 * (static_cast<std::int64_t>(P) + 2) * W > kWeightBudget)
        throw OverflowError("reduce_triangle_to_hop: weight budget exceeded");

    ReductionArtifact art;
    art.kind = ReductionKind::triangle;
    art.weight_scale = W;
    art.threshold = 3 * (static_cast<std::int64_t>(P) + 2) * W;

    auto node_a = [&](int i) { return i; };
    auto node_b = [&](int j) { return P + j; };
    auto node_c = [&](int k) { return P + N + k; };
    auto node_abar = [&](int i) { return P + 2 * N + i; };

    Graph& g = art.instance.graph;
    g.node_count = 2 * P + 2 * N;
    for (int i = 0; i < P; ++i) {
        art.node_map.push_back({"a", i, node_a(i)});
        art.node_map.push_back({"abar", i, node_abar(i)});
    }
    for (int j = 0; j < N; ++j) art.node_map.push_back({"b", j, node_b(j)});
    for (int k = 0; k < N; ++k) art.node_map.push_back({"c", k, node_c(k)});

    for (int i = 0; i + 1 < P; ++i) {
        g.edges.push_back({node_a(i), node_a(i + 1), 0});
        g.edges.push_back({node_abar(i), node_abar(i + 1), 0});
    }
    // Penalties below use the 1-based position of a_i; internally i is
    // 0-based, so position = i + 1.
    for (int i = 0; i < P; ++i)
        for (int j = 0; j < N; ++j)
            g.edges.push_back({node_a(i), node_b(j), inst.ab(i, j) + 3 * (P - i) * W});
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k)
            g.edges.push_back({node_b(j), node_c(k), inst.bc(j, k) + 3 * W});
    for (int k = 0; k < N; ++k)
        for (int i = 0; i < P; ++i)
            g.edges.push_back({node_c(k), node_abar(i), inst.ca(k, i) + 3 * (i + 1) * W});

    art.instance.s = node_a(0);
    art.instance.t = node_abar(P - 1);
    art.instance.h = P + 2;
    return art;
}

/// Common Max-Plus Convolution Upper Bound -> hop-bounded path. Requires
/// nonnegative sequences and strictly increasing c (normalize_instance
/// provides both). Three zero-weight chains u, v, w plus hubs x_1..x_M;
/// s = u_0, t = w_{N-1}, h = N + 2, threshold 15W.
inline ReductionArtifact reduce_common_to_hop(const CommonUBInstance& inst) {
    require_valid(inst);
    const int N = inst.n();
    const int M = inst.m();
    for (const auto& [a, b] : inst.pairs)
        for (int i = 0; i < N; ++i)
            if (a[i] < 0 || b[i] < 0)
                throw std::invalid_argument("reduce_common_to_hop: negative sequence value");
    for (int k = 0; k < N; ++k) {
        if (inst.c[k] < 0)
            throw std::invalid_argument("reduce_common_to_hop: negative sequence value");
        if (k > 0 && inst.c[k] <= inst.c[k - 1])
            throw std::invalid_argument("reduce_common_to_hop: c not strictly increasing");
    }
    std::int64_t W = 1;
    for (const auto& [a, b] : inst.pairs) {
        for (auto x : a) W = std::max(W, x);
        for (auto x : b) W = std::max(W, x);
    }
    for (auto x : inst.c) W = std::max(W, x);
    if (15 * W > kWeightBudget)
        throw OverflowError("reduce_common_to_hop: weight budget exceeded");

    ReductionArtifact art;
    art.kind = ReductionKind::convolution;
    art.weight_scale = W;
    art.threshold = 15 * W;

    auto node_u = [&](int i) { return i; };
    auto node_v = [&](int j) { return N + j; };
    auto node_w = [&](int k) { return 2 * N + k; };
    auto node_x = [&](int l) { return 3 * N + l - 1; };  // l is 1-based

    Graph& g = art.instance.graph;
    g.node_count = 3 * N + M;
    for (int i = 0; i < N; ++i) {
        art.node_map.push_back({"u", i, node_u(i)});
        art.node_map.push_back({"v", i, node_v(i)});
        art.node_map.push_back({"w", i, node_w(i)});
    }
    for (int l = 1; l <= M; ++l) art.node_map.push_back({"x", l, node_x(l)});

    for (int i = 0; i + 1 < N; ++i) {
        g.edges.push_back({node_u(i), node_u(i + 1), 0});
        g.edges.push_back({node_v(i), node_v(i + 1), 0});
        g.edges.push_back({node_w(i), node_w(i + 1), 0});
    }
    for (int l = 1; l <= M; ++l)
        for (int i = 0; i < N; ++i)
            g.edges.push_back({node_u(i), node_x(l), 5 * W - inst.pairs[l - 1].first[i]});
    for (int l = 1; l <= M; ++l)
        for (int j = 0; j < N; ++j)
            g.edges.push_back({node_x(l), node_v(j), 5 * W - inst.pairs[l - 1].second[j]});
    for (int k = 0; k < N; ++k)
        g.edges.push_back({node_v(0), node_w(k), 5 * W + inst.c[k]});

    art.instance.s = node_u(0);
    art.instance.t = node_w(N - 1);
    art.instance.h = N + 2;
    return art;
}

inline bool decide_triangle_via_hop(const TriangleInstance& inst,
                                    const HopSolver& solver = solve_bellman_ford) {
    ReductionArtifact art = reduce_triangle_to_hop(inst);
    PathLength answer = solver(art.instance);
    return answer < PathLength{art.threshold};
}

inline bool decide_common_via_hop(const CommonUBInstance& inst,
                                  const HopSolver& solver = solve_bellman_ford) {
    ReductionArtifact art = reduce_common_to_hop(inst);
    PathLength answer = solver(art.instance);
    return answer < PathLength{art.threshold};
}

/// Full pipeline: block-split the triple, normalize each group, reduce each
/// to a hop-bounded instance, solve, OR the decisions.
inline bool maxplus_ub_via_pipeline(const SequenceTriple& t, int block_length,
                                    const HopSolver& solver = solve_bellman_ford) {
    for (const SplitGroup& grp : split_into_common(t, block_length)) {
        auto [normalized, meta] = normalize_instance(grp.instance);
        if (decide_common_via_hop(normalized, solver)) return true;
    }
    return false;
}

namespace detail {

struct ArtifactIndex {
    std::vector<std::pair<std::string, int>> role_of;  // node -> (role, index)
    std::map<std::pair<int, int>, std::int64_t> edge_weight;

    explicit ArtifactIndex(const ReductionArtifact& art) {
        role_of.resize(static_cast<std::size_t>(art.instance.graph.node_count), {"", -1});
        for (const NodeMapEntry& e : art.node_map)
            role_of[static_cast<std::size_t>(e.node)] = {e.role, e.index};
        auto insert_min = [&](int a, int b, std::int64_t w) {
            auto [it, fresh] = edge_weight.try_emplace({a, b}, w);
            if (!fresh) it->second = std::min(it->second, w);
        };
        for (const Edge& e : art.instance.graph.edges) {
            insert_min(e.u, e.v, e.w);
            insert_min(e.v, e.u, e.w);
        }
    }

    std::int64_t weight(int u, int v) const {
        auto it = edge_weight.find({u, v});
        if (it == edge_weight.end())
            throw std::logic_error("extract_witness: path uses a non-edge");
        return it->second;
    }
};

}  // namespace detail

using Witness = std::variant<TriangleWitness, ViolatingQuadruple>;

/// Maps a short s-t path back to a source-problem witness and re-verifies the
/// source inequality. The path must be a valid <=h-hop s-t path of length
/// below the threshold.
inline Witness extract_witness(const ReductionArtifact& art, const std::vector<int>& path) {
    if (path.size() < 2 || path.front() != art.instance.s || path.back() != art.instance.t)
        throw std::invalid_argument("extract_witness: not an s-t path");
    detail::ArtifactIndex idx(art);
    const std::int64_t W = art.weight_scale;

    if (art.kind == ReductionKind::triangle) {
        int P = 0;
        for (const NodeMapEntry& e : art.node_map)
            if (e.role == "a") ++P;
        // First node in B and last node in C; detours between them normalize
        // to the direct edge.
        std::ptrdiff_t pos_b = -1, pos_c = -1;
        for (std::size_t p = 0; p < path.size(); ++p) {
            const auto& role = idx.role_of[static_cast<std::size_t>(path[p])].first;
            if (role == "b" && pos_b < 0) pos_b = static_cast<std::ptrdiff_t>(p);
            if (role == "c") pos_c = static_cast<std::ptrdiff_t>(p);
        }
        if (pos_b < 1 || pos_c < 0 || pos_c + 1 >= static_cast<std::ptrdiff_t>(path.size()))
            throw std::logic_error("extract_witness: path does not match canonical shape");
        const auto& pred = idx.role_of[static_cast<std::size_t>(path[pos_b - 1])];
        const auto& succ = idx.role_of[static_cast<std::size_t>(path[pos_c + 1])];
        if (pred.first != "a" || succ.first != "abar")
            throw std::logic_error("extract_witness: path does not match canonical shape");
        int bj = idx.role_of[static_cast<std::size_t>(path[pos_b])].second;
        int ck = idx.role_of[static_cast<std::size_t>(path[pos_c])].second;
        int i = pred.second;
        int i2 = succ.second;
        if (i != i2)
            throw std::logic_error("extract_witness: mismatched A and Abar positions");
        // Recover source weights from the gadget weights.
        int node_a = -1, node_b = -1, node_c = -1, node_abar = -1;
        for (const NodeMapEntry& e : art.node_map) {
            if (e.role == "a" && e.index == i) node_a = e.node;
            if (e.role == "b" && e.index == bj) node_b = e.node;
            if (e.role == "c" && e.index == ck) node_c = e.node;
            if (e.role == "abar" && e.index == i) node_abar = e.node;
        }
        std::int64_t wab = idx.weight(node_a, node_b) - 3 * static_cast<std::int64_t>(P - i) * W;
        std::int64_t wbc = idx.weight(node_b, node_c) - 3 * W;
        std::int64_t wca = idx.weight(node_c, node_abar) - 3 * static_cast<std::int64_t>(i + 1) * W;
        if (wab + wbc + wca >= 0)
            throw std::logic_error("extract_witness: recovered triple is not negative");
        return TriangleWitness{i, bj, ck};
    }

    // Convolution: path (u_0 .. u_i, x_l, v_j .. v_0, w_k .. w_{N-1});
    // i + j <= k relaxes to the exact quadruple (i, j, i+j, l).
    int i = -1, j = -1, l = -1, k = -1;
    int node_v0 = -1;
    for (const NodeMapEntry& e : art.node_map)
        if (e.role == "v" && e.index == 0) node_v0 = e.node;
    for (std::size_t p = 0; p < path.size(); ++p) {
        const auto& [role, index] = idx.role_of[static_cast<std::size_t>(path[p])];
        if (role == "x" && l < 0) {
            l = index;
            if (p == 0 || p + 1 >= path.size())
                throw std::logic_error("extract_witness: hub at path boundary");
            const auto& pred = idx.role_of[static_cast<std::size_t>(path[p - 1])];
            const auto& succ = idx.role_of[static_cast<std::size_t>(path[p + 1])];
            if (pred.first != "u" || succ.first != "v")
                throw std::logic_error("extract_witness: hub not between u and v");
            i = pred.second;
            j = succ.second;
        }
        if (role == "w" && k < 0) {
            if (p == 0) throw std::logic_error("extract_witness: path starts in w");
            if (path[p - 1] != node_v0)
                throw std::logic_error("extract_witness: w not entered from v_0");
            k = index;
        }
    }
    if (i < 0 || j < 0 || k < 0 || l < 0 || i + j > k)
        throw std::logic_error("extract_witness: path does not match canonical shape");
    int node_u = -1, node_x = -1, node_v = -1, node_w_exact = -1;
    for (const NodeMapEntry& e : art.node_map) {
        if (e.role == "u" && e.index == i) node_u = e.node;
        if (e.role == "x" && e.index == l) node_x = e.node;
        if (e.role == "v" && e.index == j) node_v = e.node;
        if (e.role == "w" && e.index == i + j) node_w_exact = e.node;
    }
    std::int64_t ai = 5 * W - idx.weight(node_u, node_x);
    std::int64_t bj = 5 * W - idx.weight(node_x, node_v);
    std::int64_t cij = idx.weight(node_v0, node_w_exact) - 5 * W;
    if (cij >= ai + bj)
        throw std::logic_error("extract_witness: recovered quadruple is not violating");
    return ViolatingQuadruple{i, j, i + j, l, false};
}

/// The path a_1 - .. - a_i - b_j - c_k - abar_i - .. - abar_P realizing the
/// triple (i, j, k); exactly P+2 hops, length (triangle sum) + threshold.
inline std::vector<int> canonical_triangle_path(int P, int N, int i, int j, int k) {
    std::vector<int> path;
    for (int p = 0; p <= i; ++p) path.push_back(p);
    path.push_back(P + j);
    path.push_back(P + N + k);
    for (int p = i; p < P; ++p) path.push_back(P + 2 * N + p);
    return path;
}

/// The path u_0 - .. - u_i - x_l - v_j - .. - v_0 - w_k - .. - w_{N-1}
/// realizing the quadruple (i, j, k, l); (N+2)+(i+j-k) hops, length
/// 15W - a_l[i] - b_l[j] + c[k].
inline std::vector<int> canonical_convolution_path(int N, int i, int j, int k, int l) {
    std::vector<int> path;
    for (int p = 0; p <= i; ++p) path.push_back(p);
    path.push_back(3 * N + l - 1);
    for (int p = j; p >= 0; --p) path.push_back(N + p);
    for (int p = k; p < N; ++p) path.push_back(2 * N + p);
    return path;
}

/// Total weight of a node sequence; every consecutive pair must be an edge
/// (cheapest parallel edge wins).
inline std::int64_t path_weight(const Graph& g, const std::vector<int>& path) {
    detail::ArtifactIndex idx_builder = [&] {
        ReductionArtifact tmp;
        tmp.instance.graph = g;
        return detail::ArtifactIndex(tmp);
    }();
    std::int64_t total = 0;
    for (std::size_t p = 0; p + 1 < path.size(); ++p)
        total += idx_builder.weight(path[p], path[p + 1]);
    return total;
}

/// Sidecar format: "kind threshold" then one "role index node" line per
/// mapped node.
inline std::string save_artifact_sidecar(const ReductionArtifact& art) {
    std::ostringstream os;
    os << to_string(art.kind) << ' ' << art.threshold << '\n';
    for (const NodeMapEntry& e : art.node_map)
        os << e.role << ' ' << e.index << ' ' << e.node << '\n';
    return os.str();
}

inline ReductionArtifact load_artifact(const HopInstance& instance, std::string_view sidecar) {
    ReductionArtifact art;
    art.instance = instance;
    std::istringstream is{std::string(sidecar)};
    std::string kind;
    if (!(is >> kind >> art.threshold))
        throw std::runtime_error("artifact sidecar: malformed header");
    if (kind == "triangle") art.kind = ReductionKind::triangle;
    else if (kind == "convolution") art.kind = ReductionKind::convolution;
    else throw std::runtime_error("artifact sidecar: unknown kind '" + kind + "'");
    NodeMapEntry e;
    while (is >> e.role >> e.index >> e.node) art.node_map.push_back(e);
    int P = 0;
    for (const NodeMapEntry& me : art.node_map)
        if (me.role == "a") ++P;
    art.weight_scale = art.kind == ReductionKind::triangle
                           ? art.threshold / (3 * (static_cast<std::int64_t>(P) + 2))
                           : art.threshold / 15;
    return art;
}

}  // namespace hopbound
