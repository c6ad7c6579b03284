// Command-line front end: generate, solve, reduce, split, normalize, decide,
// verify, bench. Exit codes: 0 success (YES for deciders), 1 decider NO,
// 2 error.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hopbound/hopbound.hpp"

using namespace hopbound;

namespace {

HopSolver solver_by_name(const std::string& name) {
    if (name.empty() || name == "bellman-ford") return solve_bellman_ford;
    if (name == "minplus-power") return minplus_power_oracle;
    if (name == "enum") return enumerate_paths_oracle;
    throw std::invalid_argument("unknown solver '" + name + "'");
}

struct VerifyResult {
    int agree = 0;
    int total = 0;
};

VerifyResult verify_solvers(int count, std::uint64_t seed0) {
    VerifyResult r;
    for (int trial = 0; trial < count; ++trial) {
        std::uint64_t seed = seed0 + static_cast<std::uint64_t>(trial);
        Rng rng(seed * 1009 + 1);
        int n = 2 + static_cast<int>(rand_below(rng, 29));
        std::int64_t mmax = std::min<std::int64_t>(120, static_cast<std::int64_t>(n) * (n - 1) / 2);
        HopInstance inst = gen_random_graph(n, rand_below(rng, mmax + 1), 100, seed);
        inst.t = static_cast<int>(rand_below(rng, n));
        inst.h = rand_below(rng, 36);
        PathLength bf = bellman_ford_hops(inst).answer;
        bool agree = bf == minplus_power_oracle(inst);
        if (agree && n <= 10) {
            HopInstance capped = inst;
            capped.h = std::min<std::int64_t>(inst.h, n - 1);
            agree = bf == enumerate_paths_oracle(capped);
        }
        r.total++;
        if (agree) r.agree++;
    }
    return r;
}

VerifyResult verify_triangle(int count, std::uint64_t seed0) {
    VerifyResult r;
    for (int trial = 0; trial < count; ++trial) {
        std::uint64_t seed = seed0 + static_cast<std::uint64_t>(trial);
        Rng rng(seed * 7919 + 3);
        int P = 1 + static_cast<int>(rand_below(rng, 6));
        int N = 1 + static_cast<int>(rand_below(rng, 8));
        TriangleInstance inst = gen_triangle_instance(P, N, 8, seed);
        r.total++;
        if (decide_triangle_via_hop(inst) == find_negative_triangle(inst).has_value()) r.agree++;
    }
    return r;
}

VerifyResult verify_convolution(int count, std::uint64_t seed0) {
    VerifyResult r;
    for (int trial = 0; trial < count; ++trial) {
        std::uint64_t seed = seed0 + static_cast<std::uint64_t>(trial);
        Rng rng(seed * 6151 + 5);
        int n = 1 + static_cast<int>(rand_below(rng, 8));
        int m = 1 + static_cast<int>(rand_below(rng, 4));
        CommonUBInstance raw = gen_common_instance(n, m, 10, seed);
        for (auto& x : raw.c) x += rand_below(rng, 12);
        auto [inst, meta] = normalize_instance(raw);
        r.total++;
        if (decide_common_via_hop(inst) == common_ub_check(inst).has_value()) r.agree++;
    }
    return r;
}

VerifyResult verify_pipeline(int count, std::uint64_t seed0) {
    VerifyResult r;
    for (int trial = 0; trial < count; ++trial) {
        std::uint64_t seed = seed0 + static_cast<std::uint64_t>(trial);
        Rng rng(seed * 4099 + 7);
        int n = 4 + static_cast<int>(rand_below(rng, 21));
        SequenceTriple t = gen_sequence_triple(n, 10, seed);
        std::int64_t lift = rand_below(rng, 14);
        for (auto& x : t.c) x += lift;
        bool expected = maxplus_ub_check(t).has_value();
        bool agree = true;
        for (int block : {2, 3, 4})
            if (maxplus_ub_via_pipeline(t, block) != expected) agree = false;
        r.total++;
        if (agree) r.agree++;
    }
    return r;
}

std::vector<ParamPoint> load_grid(const std::string& path) {
    std::istringstream is(read_file(path));
    std::vector<ParamPoint> grid;
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        ParamPoint p;
        if (!(ls >> p.m >> p.nu >> p.eta >> p.wmax >> p.seed))
            throw std::runtime_error(path + ": line " + std::to_string(line_no) +
                                     ": expected 'm nu eta wmax seed'");
        grid.push_back(p);
    }
    return grid;
}

int run(int argc, char** argv) {
    CLI::App app{"hop-bounded shortest paths: solvers, reductions, benchmarks"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "solve a hop-bounded instance");
    std::string solve_graph, solve_oracle;
    solve->add_option("--graph", solve_graph, "graph file")->required();
    solve->add_option("--oracle", solve_oracle, "minplus-power|enum (default bellman-ford)");

    // reduce triangle|convolution
    auto* reduce = app.add_subcommand("reduce", "build a reduction gadget");
    reduce->require_subcommand(1);
    std::string red_in, red_out;
    auto* red_tri = reduce->add_subcommand("triangle", "Negative Triangle -> hop instance");
    auto* red_conv =
        reduce->add_subcommand("convolution", "Common Max-Plus UB -> hop instance");
    for (auto* sc : {red_tri, red_conv}) {
        sc->add_option("--in", red_in, "source instance file")->required();
        sc->add_option("--out", red_out, "output graph file (sidecar at OUT.map)")->required();
    }

    // split
    auto* split = app.add_subcommand("split", "block-split a sequence triple");
    std::string split_in, split_dir;
    int split_block = 0;
    split->add_option("--in", split_in, "sequence-triple file")->required();
    split->add_option("--block", split_block, "block length B")->required();
    split->add_option("--out-dir", split_dir, "output directory")->required();

    // normalize
    auto* normalize = app.add_subcommand("normalize", "make sequences increasing/nonnegative");
    std::string norm_in, norm_out;
    normalize->add_option("--in", norm_in, "common-instance file")->required();
    normalize->add_option("--out", norm_out, "output file")->required();

    // gen graph|triangle|common|seqs
    auto* gen = app.add_subcommand("gen", "generate a random instance");
    gen->require_subcommand(1);
    std::int64_t g_m = 0, g_wmax = 100;
    int g_n = 0, g_p = 0, g_pairs = 0;
    std::int64_t g_h = 0;
    std::uint64_t g_seed = 0;
    std::string g_out;
    auto* gen_graph = gen->add_subcommand("graph", "uniform random simple graph");
    gen_graph->add_option("--n", g_n, "node count")->required();
    gen_graph->add_option("--m", g_m, "edge count")->required();
    gen_graph->add_option("--hops", g_h, "hop bound to store");
    auto* gen_tri = gen->add_subcommand("triangle", "random tripartite weights");
    gen_tri->add_option("--p", g_p, "|A|")->required();
    gen_tri->add_option("--n", g_n, "|B| = |C|")->required();
    auto* gen_common = gen->add_subcommand("common", "random common-UB instance");
    gen_common->add_option("--n", g_n, "sequence length N")->required();
    gen_common->add_option("--pairs", g_pairs, "pair count M")->required();
    auto* gen_seqs = gen->add_subcommand("seqs", "random sequence triple");
    gen_seqs->add_option("--n", g_n, "sequence length N")->required();
    for (auto* sc : {gen_graph, gen_tri, gen_common, gen_seqs}) {
        sc->add_option("--wmax", g_wmax, "max weight magnitude");
        sc->add_option("--seed", g_seed, "random seed");
        sc->add_option("--out", g_out, "output file")->required();
    }

    // decide
    auto* decide = app.add_subcommand("decide", "run a reduction and report YES/NO");
    decide->require_subcommand(1);
    std::string dec_in;
    int dec_block = 0;
    auto* dec_tri = decide->add_subcommand("triangle", "negative triangle via hop solver");
    auto* dec_conv = decide->add_subcommand("convolution", "common UB via hop solver");
    auto* dec_max = decide->add_subcommand("maxplus", "max-plus UB via full pipeline");
    for (auto* sc : {dec_tri, dec_conv, dec_max})
        sc->add_option("--in", dec_in, "source instance file")->required();
    dec_max->add_option("--block", dec_block, "block length B")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "randomized oracle agreement suites");
    std::string suite;
    int ver_count = 100;
    std::uint64_t ver_seed = 0;
    verify->add_option("--suite", suite, "solvers|triangle|convolution|pipeline")->required();
    verify->add_option("--count", ver_count, "number of trials");
    verify->add_option("--seed", ver_seed, "base seed");

    // bench
    auto* bench = app.add_subcommand("bench", "timed sweep over a parameter grid");
    std::string grid_file, csv_out;
    int reps = 5;
    bench->add_option("--grid-file", grid_file, "lines: m nu eta wmax seed")->required();
    bench->add_option("--reps", reps, "timed repetitions per instance");
    bench->add_option("--csv", csv_out, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            std::cout << app.help();
            return 0;
        }
        std::cerr << e.what() << "\n\n" << app.help();
        return 2;
    }

    if (solve->parsed()) {
        HopInstance inst = load_graph(read_file(solve_graph));
        std::cout << solver_by_name(solve_oracle)(inst).to_string() << "\n";
        return 0;
    }
    if (reduce->parsed()) {
        ReductionArtifact art = red_tri->parsed()
                                    ? reduce_triangle_to_hop(load_triangle(read_file(red_in)))
                                    : reduce_common_to_hop(load_common(read_file(red_in)));
        write_file(red_out, save_graph(art.instance));
        write_file(red_out + ".map", save_artifact_sidecar(art));
        return 0;
    }
    if (split->parsed()) {
        SequenceTriple t = load_sequence_triple(read_file(split_in));
        std::filesystem::create_directories(split_dir);
        auto groups = split_into_common(t, split_block);
        for (const SplitGroup& grp : groups) {
            std::string path =
                split_dir + "/group_" + std::to_string(grp.group) + ".common";
            write_file(path, save_common(grp.instance));
        }
        std::cout << groups.size() << " groups written to " << split_dir << "\n";
        return 0;
    }
    if (normalize->parsed()) {
        auto [out, meta] = normalize_instance(load_common(read_file(norm_in)));
        write_file(norm_out, save_common(out));
        std::cout << "max_abs " << meta.max_abs << " step " << meta.step << "\n";
        return 0;
    }
    if (gen->parsed()) {
        if (gen_graph->parsed()) {
            HopInstance inst = gen_random_graph(g_n, g_m, g_wmax, g_seed);
            inst.h = g_h;
            write_file(g_out, save_graph(inst));
        } else if (gen_tri->parsed()) {
            write_file(g_out, save_triangle(gen_triangle_instance(g_p, g_n, g_wmax, g_seed)));
        } else if (gen_common->parsed()) {
            write_file(g_out, save_common(gen_common_instance(g_n, g_pairs, g_wmax, g_seed)));
        } else {
            write_file(g_out, save_sequence_triple(gen_sequence_triple(g_n, g_wmax, g_seed)));
        }
        return 0;
    }
    if (decide->parsed()) {
        bool yes;
        if (dec_tri->parsed())
            yes = decide_triangle_via_hop(load_triangle(read_file(dec_in)));
        else if (dec_conv->parsed())
            yes = decide_common_via_hop(load_common(read_file(dec_in)));
        else
            yes = maxplus_ub_via_pipeline(load_sequence_triple(read_file(dec_in)), dec_block);
        std::cout << (yes ? "YES" : "NO") << "\n";
        return yes ? 0 : 1;
    }
    if (verify->parsed()) {
        VerifyResult r;
        if (suite == "solvers") r = verify_solvers(ver_count, ver_seed);
        else if (suite == "triangle") r = verify_triangle(ver_count, ver_seed);
        else if (suite == "convolution") r = verify_convolution(ver_count, ver_seed);
        else if (suite == "pipeline") r = verify_pipeline(ver_count, ver_seed);
        else throw std::invalid_argument("unknown suite '" + suite + "'");
        std::cout << r.agree << "/" << r.total << " agree\n";
        return r.agree == r.total ? 0 : 1;
    }
    if (bench->parsed()) {
        std::string csv = scaling_experiment(load_grid(grid_file),
                                             {{"bellman-ford", solve_bellman_ford}}, reps);
        write_file(csv_out, csv);
        std::cout << "wrote " << csv_out << "\n";
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
