// Acceptance suite: exercises every oracle-equivalence and scaling check at
// full scale and prints one pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "hopbound/hopbound.hpp"

using namespace hopbound;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int criterion, const std::string& what, bool ok, double secs) {
    std::printf("%s criterion %d: %s (%.1fs)\n", ok ? "PASS" : "FAIL", criterion, what.c_str(),
                secs);
    if (!ok) ++failures;
}

// Fast pairwise min-weight lookup for small gadget graphs.
struct WeightMatrix {
    int n;
    std::vector<std::int64_t> w;
    static constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::max();

    explicit WeightMatrix(const Graph& g) : n(g.node_count) {
        w.assign(static_cast<std::size_t>(n) * n, kNone);
        for (const Edge& e : g.edges) {
            auto& a = w[static_cast<std::size_t>(e.u) * n + e.v];
            auto& b = w[static_cast<std::size_t>(e.v) * n + e.u];
            a = std::min(a, e.w);
            b = std::min(b, e.w);
        }
    }

    std::int64_t path_weight(const std::vector<int>& path) const {
        std::int64_t total = 0;
        for (std::size_t p = 0; p + 1 < path.size(); ++p) {
            std::int64_t x = w[static_cast<std::size_t>(path[p]) * n + path[p + 1]];
            if (x == kNone) return kNone;
            total += x;
        }
        return total;
    }
};

void criterion1_solver_oracles() {
    Timer timer;
    bool ok = true;
    int trials = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        Rng rng(seed * 1009 + 1);
        int n = 2 + static_cast<int>(rand_below(rng, 29));  // n <= 30
        std::int64_t mmax = std::min<std::int64_t>(120, static_cast<std::int64_t>(n) * (n - 1) / 2);
        HopInstance inst = gen_random_graph(n, rand_below(rng, mmax + 1), 100, seed);
        inst.t = static_cast<int>(rand_below(rng, n));
        inst.h = rand_below(rng, 36);  // h <= 35
        ++trials;
        PathLength bf = bellman_ford_hops(inst).answer;
        if (!(bf == minplus_power_oracle(inst))) ok = false;
        if (n <= 10) {
            HopInstance capped = inst;
            capped.h = std::min<std::int64_t>(inst.h, n - 1);
            if (!(bf == enumerate_paths_oracle(capped))) ok = false;
        }
    }
    double secs = timer.seconds();
    report(1, "solver-oracle agreement on " + std::to_string(trials) + " random graphs",
           ok && secs < 10.0, secs);
}

void criterion2_triangle_reduction() {
    Timer timer;
    bool ok = true;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        Rng rng(seed * 7919 + 3);
        int P = 1 + static_cast<int>(rand_below(rng, 6));
        int N = 1 + static_cast<int>(rand_below(rng, 8));
        TriangleInstance inst = gen_triangle_instance(P, N, 8, seed);
        ReductionArtifact art = reduce_triangle_to_hop(inst);
        if (art.instance.graph.node_count != 2 * P + 2 * N) ok = false;
        if (static_cast<int>(art.instance.graph.edges.size()) != 2 * (P - 1) + 2 * P * N + N * N)
            ok = false;
        bool naive = find_negative_triangle(inst).has_value();
        bool via_hop = bellman_ford_hops(art.instance).answer < PathLength{art.threshold};
        if (naive != via_hop) ok = false;
        if (via_hop) {
            Witness w = extract_witness(art, shortest_hop_path(art.instance));
            const auto& tw = std::get<TriangleWitness>(w);
            if (inst.ab(tw.i, tw.j) + inst.bc(tw.j, tw.k) + inst.ca(tw.k, tw.i) >= 0) ok = false;
        }
    }
    double secs = timer.seconds();
    report(2, "triangle reduction equivalence, sizes, witnesses (1000 instances)",
           ok && secs < 30.0, secs);
}

void criterion3_convolution_reduction() {
    Timer timer;
    bool ok = true;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        Rng rng(seed * 6151 + 5);
        int n = 1 + static_cast<int>(rand_below(rng, 8));
        int m = 1 + static_cast<int>(rand_below(rng, 4));
        CommonUBInstance raw = gen_common_instance(n, m, 10, seed);
        for (auto& x : raw.c) x += rand_below(rng, 12);
        auto [inst, meta] = normalize_instance(raw);
        ReductionArtifact art = reduce_common_to_hop(inst);
        if (art.instance.graph.node_count != 3 * n + m) ok = false;
        if (static_cast<int>(art.instance.graph.edges.size()) != 3 * (n - 1) + 2 * n * m + n)
            ok = false;
        bool naive = common_ub_check(inst).has_value();
        bool via_hop = bellman_ford_hops(art.instance).answer < PathLength{art.threshold};
        if (naive != via_hop) ok = false;
    }
    double secs = timer.seconds();
    report(3, "convolution reduction equivalence and sizes (1000 instances)", ok && secs < 30.0,
           secs);
}

void criterion4_pipeline() {
    Timer timer;
    bool ok = true;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        Rng rng(seed * 4099 + 7);
        int n = 4 + static_cast<int>(rand_below(rng, 21));  // N in [4, 24]
        SequenceTriple t = gen_sequence_triple(n, 10, seed);
        std::int64_t lift = rand_below(rng, 14);
        for (auto& x : t.c) x += lift;
        bool expected = maxplus_ub_check(t).has_value();
        for (int block : {2, 3, 4})
            if (maxplus_ub_via_pipeline(t, block) != expected) ok = false;
    }
    double secs = timer.seconds();
    report(4, "end-to-end pipeline equivalence (300 triples, B in {2,3,4})", ok && secs < 60.0,
           secs);
}

void criterion5_construction_identities() {
    Timer timer;
    bool ok = true;
    // Same instance families as criteria 2 and 3.
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        Rng rng(seed * 7919 + 3);
        int P = 1 + static_cast<int>(rand_below(rng, 6));
        int N = 1 + static_cast<int>(rand_below(rng, 8));
        TriangleInstance inst = gen_triangle_instance(P, N, 8, seed);
        ReductionArtifact art = reduce_triangle_to_hop(inst);
        WeightMatrix wm(art.instance.graph);
        std::int64_t W = art.weight_scale;
        for (const Edge& e : art.instance.graph.edges)
            if (e.w != 0 && e.w < 2 * W) ok = false;
        for (int i = 0; i < P && ok; ++i)
            for (int j = 0; j < N && ok; ++j)
                for (int k = 0; k < N; ++k) {
                    auto path = canonical_triangle_path(P, N, i, j, k);
                    if (static_cast<int>(path.size()) - 1 != P + 2) ok = false;
                    std::int64_t sum = inst.ab(i, j) + inst.bc(j, k) + inst.ca(k, i);
                    if (wm.path_weight(path) != sum + art.threshold) ok = false;
                }
    }
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        Rng rng(seed * 6151 + 5);
        int n = 1 + static_cast<int>(rand_below(rng, 8));
        int m = 1 + static_cast<int>(rand_below(rng, 4));
        CommonUBInstance raw = gen_common_instance(n, m, 10, seed);
        for (auto& x : raw.c) x += rand_below(rng, 12);
        auto [inst, meta] = normalize_instance(raw);
        ReductionArtifact art = reduce_common_to_hop(inst);
        WeightMatrix wm(art.instance.graph);
        std::int64_t W = art.weight_scale;
        for (const Edge& e : art.instance.graph.edges)
            if (e.w != 0 && (e.w < 4 * W || e.w > 6 * W)) ok = false;
        for (int l = 1; l <= m && ok; ++l)
            for (int i = 0; i < n && ok; ++i)
                for (int j = 0; j < n && ok; ++j)
                    for (int k = 0; k < n; ++k) {
                        auto path = canonical_convolution_path(n, i, j, k, l);
                        if (static_cast<int>(path.size()) - 1 != (n + 2) + (i + j - k)) ok = false;
                        std::int64_t expect = 15 * W - inst.pairs[l - 1].first[i] -
                                              inst.pairs[l - 1].second[j] + inst.c[k];
                        if (wm.path_weight(path) != expect) ok = false;
                    }
    }
    report(5, "canonical path hop/length identities and weight bounds", ok, timer.seconds());
}

void criterion6_normalization_splitting() {
    Timer timer;
    bool ok = true;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        Rng rng(seed * 3571 + 11);
        int n = 1 + static_cast<int>(rand_below(rng, 8));
        int m = 1 + static_cast<int>(rand_below(rng, 4));
        CommonUBInstance inst = gen_common_instance(n, m, 9, seed);
        for (auto& [a, b] : inst.pairs)
            for (int i = 0; i < n; ++i) {
                a[i] -= 4;
                b[i] -= 4;
            }
        auto [out, meta] = normalize_instance(inst);
        for (const auto& [a, b] : out.pairs)
            for (int i = 0; i < n; ++i) {
                if (a[i] < 0 || b[i] < 0) ok = false;
                if (i > 0 && (a[i] <= a[i - 1] || b[i] <= b[i - 1])) ok = false;
            }
        for (int k = 0; k < n; ++k) {
            if (out.c[k] < 0) ok = false;
            if (k > 0 && out.c[k] <= out.c[k - 1]) ok = false;
        }
        for (int l = 0; l < m; ++l)
            for (int i = 0; i < n; ++i)
                for (int j = 0; i + j < n; ++j) {
                    int k = i + j;
                    std::int64_t before =
                        inst.pairs[l].first[i] + inst.pairs[l].second[j] - inst.c[k];
                    std::int64_t after = out.pairs[l].first[i] + out.pairs[l].second[j] - out.c[k];
                    if ((before > 0) != (after > 0) || (before < 0) != (after < 0)) ok = false;
                }

        // Partition OR-equivalence.
        int P = 1 + static_cast<int>(rand_below(rng, 6));
        int part = 1 + static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(P)));
        TriangleInstance tri = gen_triangle_instance(P, n, 7, seed);
        bool whole = find_negative_triangle(tri).has_value();
        bool any = false;
        for (const TriangleInstance& piece : partition_triangle(tri, part))
            if (find_negative_triangle(piece)) any = true;
        if (any != whole) ok = false;

        // Split OR-equivalence.
        int len = 2 + static_cast<int>(rand_below(rng, 15));
        SequenceTriple t = gen_sequence_triple(len, 9, seed ^ 0xabcd);
        for (auto& x : t.c) x += rand_below(rng, 10);
        bool direct = maxplus_ub_check(t).has_value();
        int block = 1 + static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(len)));
        bool split_any = false;
        for (const SplitGroup& grp : split_into_common(t, block))
            if (common_ub_check(grp.instance)) split_any = true;
        if (split_any != direct) ok = false;
    }
    report(6, "normalization invariants and partition/split OR-equivalence (1000 instances)", ok,
           timer.seconds());
}

void criterion7_scaling() {
    Timer timer;
    const int reps = 3;
    auto timed_median = [&](const HopInstance& inst) {
        auto records = time_solver(inst, "bellman-ford", solve_bellman_ford, reps);
        std::vector<double> times;
        for (const auto& r : records) times.push_back(static_cast<double>(r.nanos));
        return median(times);
    };

    // Fixed m = 2e5 (n = 1e4), h sweep.
    HopInstance base = gen_random_graph(10000, 200000, 1000, 12345);
    std::vector<std::pair<double, double>> h_points;
    for (std::int64_t h : {128, 256, 512, 1024}) {
        HopInstance inst = base;
        inst.h = h;
        h_points.emplace_back(static_cast<double>(h), timed_median(inst));
    }
    double h_slope = fit_slope(h_points);

    // Fixed h = 256, m sweep.
    std::vector<std::pair<double, double>> m_points;
    for (std::int64_t m : {50000, 100000, 200000, 400000}) {
        HopInstance inst = gen_random_graph(10000, m, 1000, 999 + m);
        inst.h = 256;
        m_points.emplace_back(static_cast<double>(m), timed_median(inst));
    }
    double m_slope = fit_slope(m_points);

    double secs = timer.seconds();
    bool ok = h_slope >= 0.8 && h_slope <= 1.2 && m_slope >= 0.8 && m_slope <= 1.25 &&
              secs < 180.0;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "O(hm) scaling: h-slope %.3f (want [0.8,1.2]), m-slope %.3f (want [0.8,1.25])",
                  h_slope, m_slope);
    report(7, buf, ok, secs);
}

}  // namespace

int main() {
    criterion1_solver_oracles();
    criterion2_triangle_reduction();
    criterion3_convolution_reduction();
    criterion4_pipeline();
    criterion5_construction_identities();
    criterion6_normalization_splitting();
    criterion7_scaling();
    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
