#include <catch2/catch_amalgamated.hpp>

#include "hopbound/generators.hpp"
#include "hopbound/io.hpp"
#include "hopbound/reductions.hpp"

using namespace hopbound;

namespace {

TriangleInstance constant_triangle(std::int64_t w) {
    TriangleInstance inst;
    inst.P = 1;
    inst.N = 1;
    inst.wAB = {w};
    inst.wBC = {w};
    inst.wCA = {w};
    return inst;
}

CommonUBInstance tiny_common(std::int64_t a, std::int64_t b, std::int64_t c) {
    CommonUBInstance inst;
    inst.pairs.emplace_back(Sequence{a}, Sequence{b});
    inst.c = {c};
    return inst;
}

}  // namespace

TEST_CASE("triangle reduction worked example, all -1") {
    ReductionArtifact art = reduce_triangle_to_hop(constant_triangle(-1));
    CHECK(art.weight_scale == 1);
    CHECK(art.threshold == 9);
    CHECK(art.instance.h == 3);
    CHECK(art.instance.graph.node_count == 4);
    REQUIRE(art.instance.graph.edges.size() == 3);
    for (const Edge& e : art.instance.graph.edges) CHECK(e.w == 2);
    PathLength best = bellman_ford_hops(art.instance).answer;
    CHECK(best == PathLength{6});
    CHECK(best == enumerate_paths_oracle(art.instance));
    CHECK(decide_triangle_via_hop(constant_triangle(-1)));
}

TEST_CASE("triangle reduction worked example, all +1") {
    ReductionArtifact art = reduce_triangle_to_hop(constant_triangle(1));
    PathLength best = bellman_ford_hops(art.instance).answer;
    CHECK(best == PathLength{12});
    CHECK(best == enumerate_paths_oracle(art.instance));
    CHECK(!decide_triangle_via_hop(constant_triangle(1)));
}

TEST_CASE("triangle reduction size accounting and weight bounds") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng(seed + 40);
        int P = 1 + static_cast<int>(rand_below(rng, 6));
        int N = 1 + static_cast<int>(rand_below(rng, 8));
        TriangleInstance inst = gen_triangle_instance(P, N, 8, seed);
        ReductionArtifact art = reduce_triangle_to_hop(inst);
        std::int64_t W = art.weight_scale;
        CHECK(art.instance.graph.node_count == 2 * P + 2 * N);
        CHECK(static_cast<int>(art.instance.graph.edges.size()) ==
              2 * (P - 1) + 2 * P * N + N * N);
        CHECK(validate_instance(art.instance).empty());
        for (const Edge& e : art.instance.graph.edges) {
            CHECK(e.w >= 0);
            if (e.w != 0 || W == 0) CHECK((e.w == 0 || e.w >= 2 * W));
        }
    }
}

TEST_CASE("canonical triangle path identities") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Rng rng(seed + 81);
        int P = 1 + static_cast<int>(rand_below(rng, 5));
        int N = 1 + static_cast<int>(rand_below(rng, 5));
        TriangleInstance inst = gen_triangle_instance(P, N, 7, seed);
        ReductionArtifact art = reduce_triangle_to_hop(inst);
        for (int i = 0; i < P; ++i)
            for (int j = 0; j < N; ++j)
                for (int k = 0; k < N; ++k) {
                    auto path = canonical_triangle_path(P, N, i, j, k);
                    CHECK(static_cast<int>(path.size()) - 1 == P + 2);
                    std::int64_t sum = inst.ab(i, j) + inst.bc(j, k) + inst.ca(k, i);
                    CHECK(path_weight(art.instance.graph, path) == sum + art.threshold);
                }
    }
}

TEST_CASE("decide_triangle_via_hop matches the naive solver") {
    for (std::uint64_t seed = 0; seed < 250; ++seed) {
        Rng rng(seed * 5 + 9);
        int P = 1 + static_cast<int>(rand_below(rng, 6));
        int N = 1 + static_cast<int>(rand_below(rng, 8));
        TriangleInstance inst = gen_triangle_instance(P, N, 8, seed);
        bool expected = find_negative_triangle(inst).has_value();
        CHECK(decide_triangle_via_hop(inst) == expected);
        CHECK(decide_triangle_via_hop(inst, minplus_power_oracle) == expected);
    }
}

TEST_CASE("convolution reduction worked examples") {
    ReductionArtifact yes = reduce_common_to_hop(tiny_common(1, 1, 1));
    CHECK(yes.weight_scale == 1);
    CHECK(yes.threshold == 15);
    CHECK(yes.instance.h == 3);
    REQUIRE(yes.instance.graph.edges.size() == 3);
    CHECK(bellman_ford_hops(yes.instance).answer == PathLength{14});
    CHECK(enumerate_paths_oracle(yes.instance) == PathLength{14});
    CHECK(decide_common_via_hop(tiny_common(1, 1, 1)));

    ReductionArtifact no = reduce_common_to_hop(tiny_common(0, 0, 0));
    CHECK(bellman_ford_hops(no.instance).answer == PathLength{15});
    CHECK(!decide_common_via_hop(tiny_common(0, 0, 0)));
}

TEST_CASE("convolution reduction rejects bad preconditions") {
    CHECK_THROWS_AS(reduce_common_to_hop(tiny_common(-1, 0, 0)), std::invalid_argument);
    CommonUBInstance flat;
    flat.pairs.emplace_back(Sequence{0, 0}, Sequence{0, 0});
    flat.c = {2, 2};  // not strictly increasing
    CHECK_THROWS_AS(reduce_common_to_hop(flat), std::invalid_argument);
}

TEST_CASE("convolution reduction size accounting and weight bounds") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng(seed + 60);
        int n = 1 + static_cast<int>(rand_below(rng, 8));
        int m = 1 + static_cast<int>(rand_below(rng, 4));
        auto [inst, meta] = normalize_instance(gen_common_instance(n, m, 10, seed));
        ReductionArtifact art = reduce_common_to_hop(inst);
        std::int64_t W = art.weight_scale;
        CHECK(art.instance.graph.node_count == 3 * n + m);
        CHECK(static_cast<int>(art.instance.graph.edges.size()) == 3 * (n - 1) + 2 * n * m + n);
        CHECK(validate_instance(art.instance).empty());
        for (const Edge& e : art.instance.graph.edges)
            if (e.w != 0) {
                CHECK(e.w >= 4 * W);
                CHECK(e.w <= 6 * W);
            }
    }
}

TEST_CASE("canonical convolution path identities") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Rng rng(seed + 71);
        int n = 1 + static_cast<int>(rand_below(rng, 6));
        int m = 1 + static_cast<int>(rand_below(rng, 3));
        auto [inst, meta] = normalize_instance(gen_common_instance(n, m, 9, seed));
        ReductionArtifact art = reduce_common_to_hop(inst);
        std::int64_t W = art.weight_scale;
        for (int l = 1; l <= m; ++l)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k) {
                        auto path = canonical_convolution_path(n, i, j, k, l);
                        CHECK(static_cast<int>(path.size()) - 1 == (n + 2) + (i + j - k));
                        std::int64_t expect = 15 * W - inst.pairs[l - 1].first[i] -
                                              inst.pairs[l - 1].second[j] + inst.c[k];
                        CHECK(path_weight(art.instance.graph, path) == expect);
                    }
    }
}

TEST_CASE("decide_common_via_hop matches common_ub_check") {
    for (std::uint64_t seed = 0; seed < 250; ++seed) {
        Rng rng(seed * 11 + 1);
        int n = 1 + static_cast<int>(rand_below(rng, 8));
        int m = 1 + static_cast<int>(rand_below(rng, 4));
        auto [inst, meta] = normalize_instance(gen_common_instance(n, m, 10, seed));
        bool expected = common_ub_check(inst).has_value();
        CHECK(decide_common_via_hop(inst) == expected);
        CHECK(decide_common_via_hop(inst, minplus_power_oracle) == expected);
    }
}

TEST_CASE("pipeline worked examples") {
    CHECK(maxplus_ub_via_pipeline({{1}, {1}, {1}}, 1));
    SequenceTriple zero{Sequence(6, 0), Sequence(6, 0), Sequence(6, 0)};
    for (int block : {1, 2, 3, 4, 5, 6}) CHECK(!maxplus_ub_via_pipeline(zero, block));
}

TEST_CASE("pipeline matches maxplus_ub_check end to end") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Rng rng(seed * 23 + 7);
        int n = 2 + static_cast<int>(rand_below(rng, 23));
        SequenceTriple t = gen_sequence_triple(n, 10, seed);
        for (auto& x : t.c) x += 9;
        bool expected = maxplus_ub_check(t).has_value();
        for (int block : {2, 3, 4}) {
            if (block > n) continue;
            CHECK(maxplus_ub_via_pipeline(t, block) == expected);
        }
    }
}

TEST_CASE("witness extraction from solver paths") {
    // Triangle side.
    ReductionArtifact tri = reduce_triangle_to_hop(constant_triangle(-1));
    auto tri_path = shortest_hop_path(tri.instance);
    Witness w = extract_witness(tri, tri_path);
    REQUIRE(std::holds_alternative<TriangleWitness>(w));
    CHECK(std::get<TriangleWitness>(w) == TriangleWitness{0, 0, 0});

    // Convolution side.
    ReductionArtifact conv = reduce_common_to_hop(tiny_common(1, 1, 1));
    auto conv_path = shortest_hop_path(conv.instance);
    Witness q = extract_witness(conv, conv_path);
    REQUIRE(std::holds_alternative<ViolatingQuadruple>(q));
    CHECK(std::get<ViolatingQuadruple>(q) == ViolatingQuadruple{0, 0, 0, 1});
}

TEST_CASE("witness extraction on random YES instances") {
    int triangle_yes = 0, conv_yes = 0;
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        Rng rng(seed * 29 + 13);
        int P = 1 + static_cast<int>(rand_below(rng, 5));
        int N = 1 + static_cast<int>(rand_below(rng, 6));
        TriangleInstance tri = gen_triangle_instance(P, N, 8, seed);
        ReductionArtifact art = reduce_triangle_to_hop(tri);
        if (bellman_ford_hops(art.instance).answer < PathLength{art.threshold}) {
            ++triangle_yes;
            Witness w = extract_witness(art, shortest_hop_path(art.instance));
            auto& tw = std::get<TriangleWitness>(w);
            CHECK(tri.ab(tw.i, tw.j) + tri.bc(tw.j, tw.k) + tri.ca(tw.k, tw.i) < 0);
        }

        int n = 1 + static_cast<int>(rand_below(rng, 6));
        int m = 1 + static_cast<int>(rand_below(rng, 3));
        auto [common, meta] = normalize_instance(gen_common_instance(n, m, 10, seed));
        ReductionArtifact cart = reduce_common_to_hop(common);
        if (bellman_ford_hops(cart.instance).answer < PathLength{cart.threshold}) {
            ++conv_yes;
            Witness w = extract_witness(cart, shortest_hop_path(cart.instance));
            auto& q = std::get<ViolatingQuadruple>(w);
            CHECK(q.i + q.j == q.k);
            CHECK(common.c[q.k] < common.pairs[q.l - 1].first[q.i] +
                                      common.pairs[q.l - 1].second[q.j]);
        }
    }
    CHECK(triangle_yes > 10);
    CHECK(conv_yes > 10);
}

TEST_CASE("artifact sidecar round-trip") {
    ReductionArtifact art = reduce_triangle_to_hop(gen_triangle_instance(3, 4, 8, 9));
    std::string graph_text = save_graph(art.instance);
    std::string sidecar = save_artifact_sidecar(art);
    ReductionArtifact back = load_artifact(load_graph(graph_text), sidecar);
    CHECK(back.kind == art.kind);
    CHECK(back.threshold == art.threshold);
    CHECK(back.weight_scale == art.weight_scale);
    CHECK(back.node_map == art.node_map);
    CHECK(back.instance == art.instance);
}
