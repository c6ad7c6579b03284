#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hopbound/convolution.hpp"
#include "hopbound/graph.hpp"
#include "hopbound/triangle.hpp"

namespace hopbound {

// All generation draws from mt19937_64 through the two helpers below, so a
// (params, seed) pair maps to one instance on every standard library.
using Rng = std::mt19937_64;

/// Uniform draw from [0, bound) by rejection; independent of the standard
/// library's distribution implementations.
inline std::uint64_t rand_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("rand_below: empty range");
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % bound;
}

/// Uniform draw from [lo, hi], inclusive.
inline std::int64_t rand_range(Rng& rng, std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("rand_range: empty range");
    return lo + static_cast<std::int64_t>(
                    rand_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

/// Uniform random simple graph with exactly m edges, weights in [0, wmax],
/// s = 0, t = 1, h = 0. Deterministic per seed.
inline HopInstance gen_random_graph(int n, std::int64_t m, std::int64_t wmax,
                                    std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("gen_random_graph: need n >= 2");
    std::int64_t max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
    if (m < 0 || m > max_edges) throw std::invalid_argument("gen_random_graph: infeasible m");
    if (wmax < 0 || wmax > kWeightBudget)
        throw std::invalid_argument("gen_random_graph: wmax out of range");
    Rng rng(seed);
    HopInstance inst;
    inst.graph.node_count = n;
    inst.s = 0;
    inst.t = 1;
    inst.h = 0;
    std::set<std::pair<int, int>> used;
    while (static_cast<std::int64_t>(inst.graph.edges.size()) < m) {
        int u = static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(n)));
        int v = static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(n)));
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (!used.insert({u, v}).second) continue;
        inst.graph.edges.push_back({u, v, rand_range(rng, 0, wmax)});
    }
    return inst;
}

/// A (nu, eta) point of the density/hop parameter grid: n = round(m^nu),
/// h = round(m^eta).
struct ParamPoint {
    std::int64_t m = 0;
    double nu = 1.0;    // density exponent, in [1/2, 1]
    double eta = 0.5;   // hop exponent, in (0, nu]
    std::uint64_t seed = 0;
    std::int64_t wmax = 1000;

    std::int64_t derived_n() const {
        return std::max<std::int64_t>(2, std::llround(std::pow(static_cast<double>(m), nu)));
    }
    std::int64_t derived_h() const {
        return std::max<std::int64_t>(1, std::llround(std::pow(static_cast<double>(m), eta)));
    }
};

struct ParamInstance {
    HopInstance instance;
    bool degenerate = false;  // h >= n: no hop bound bites, plain shortest path
};

/// Instance at a grid point. Dense points with m above the simple-graph
/// capacity fall back to uniform multigraph sampling (parallel edges are
/// permitted). Points with h >= n are tagged degenerate, not rejected.
inline ParamInstance gen_param_instance(const ParamPoint& p) {
    std::int64_t n = p.derived_n();
    std::int64_t h = p.derived_h();
    if (n > (std::int64_t{1} << 31) - 1)
        throw std::invalid_argument("gen_param_instance: derived n too large");
    ParamInstance out;
    out.degenerate = h >= n;
    std::int64_t max_simple = n * (n - 1) / 2;
    if (p.m <= max_simple) {
        out.instance = gen_random_graph(static_cast<int>(n), p.m, p.wmax, p.seed);
    } else {
        Rng rng(p.seed);
        out.instance.graph.node_count = static_cast<int>(n);
        out.instance.s = 0;
        out.instance.t = 1;
        for (std::int64_t e = 0; e < p.m; ++e) {
            int u = static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(n)));
            int v = static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(n)));
            if (u == v) {
                --e;
                continue;
            }
            out.instance.graph.edges.push_back({u, v, rand_range(rng, 0, p.wmax)});
        }
    }
    out.instance.h = h;
    return out;
}

/// Entries uniform in [-wmax, wmax].
inline TriangleInstance gen_triangle_instance(int P, int N, std::int64_t wmax,
                                              std::uint64_t seed) {
    if (P < 1 || N < 1) throw std::invalid_argument("gen_triangle_instance: bad dimensions");
    Rng rng(seed);
    TriangleInstance inst;
    inst.P = P;
    inst.N = N;
    auto fill = [&](std::vector<std::int64_t>& m, std::size_t count) {
        m.resize(count);
        for (auto& x : m) x = rand_range(rng, -wmax, wmax);
    };
    fill(inst.wAB, static_cast<std::size_t>(P) * N);
    fill(inst.wBC, static_cast<std::size_t>(N) * N);
    fill(inst.wCA, static_cast<std::size_t>(N) * P);
    return inst;
}

/// Entries uniform in [0, wmax].
inline CommonUBInstance gen_common_instance(int N, int M, std::int64_t wmax,
                                            std::uint64_t seed) {
    if (N < 1 || M < 1) throw std::invalid_argument("gen_common_instance: bad dimensions");
    Rng rng(seed);
    CommonUBInstance inst;
    auto seq = [&] {
        Sequence s(static_cast<std::size_t>(N));
        for (auto& x : s) x = rand_range(rng, 0, wmax);
        return s;
    };
    for (int l = 0; l < M; ++l) {
        Sequence a = seq();
        Sequence b = seq();
        inst.pairs.emplace_back(std::move(a), std::move(b));
    }
    inst.c = seq();
    return inst;
}

/// Entries uniform in [0, wmax].
inline SequenceTriple gen_sequence_triple(int N, std::int64_t wmax, std::uint64_t seed) {
    if (N < 1) throw std::invalid_argument("gen_sequence_triple: bad length");
    Rng rng(seed);
    SequenceTriple t;
    auto seq = [&] {
        Sequence s(static_cast<std::size_t>(N));
        for (auto& x : s) x = rand_range(rng, 0, wmax);
        return s;
    };
    t.a = seq();
    t.b = seq();
    t.c = seq();
    return t;
}

}  // namespace hopbound
