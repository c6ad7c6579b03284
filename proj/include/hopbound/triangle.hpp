#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace hopbound {

/// Complete tripartite weighted graph A x B x C given as three weight
/// matrices: wAB is P x N, wBC is N x N, wCA is N x P.
struct TriangleInstance {
    int P = 0;
    int N = 0;
    std::vector<std::int64_t> wAB;  // P*N, row-major over (i, j)
    std::vector<std::int64_t> wBC;  // N*N, row-major over (j, k)
    std::vector<std::int64_t> wCA;  // N*P, row-major over (k, i)

    std::int64_t ab(int i, int j) const { return wAB[static_cast<std::size_t>(i) * N + j]; }
    std::int64_t bc(int j, int k) const { return wBC[static_cast<std::size_t>(j) * N + k]; }
    std::int64_t ca(int k, int i) const { return wCA[static_cast<std::size_t>(k) * P + i]; }

    std::int64_t& ab(int i, int j) { return wAB[static_cast<std::size_t>(i) * N + j]; }
    std::int64_t& bc(int j, int k) { return wBC[static_cast<std::size_t>(j) * N + k]; }
    std::int64_t& ca(int k, int i) { return wCA[static_cast<std::size_t>(k) * P + i]; }

    friend bool operator==(const TriangleInstance&, const TriangleInstance&) = default;
};

inline void require_valid(const TriangleInstance& inst) {
    if (inst.P < 1 || inst.N < 1)
        throw std::invalid_argument("triangle instance: P and N must be >= 1");
    auto sz = [](int a, int b) { return static_cast<std::size_t>(a) * static_cast<std::size_t>(b); };
    if (inst.wAB.size() != sz(inst.P, inst.N) || inst.wBC.size() != sz(inst.N, inst.N) ||
        inst.wCA.size() != sz(inst.N, inst.P))
        throw std::invalid_argument("triangle instance: matrix size mismatch");
}

/// Maximum absolute weight, floored at 1.
inline std::int64_t triangle_weight_scale(const TriangleInstance& inst) {
    std::int64_t w = 1;
    for (auto x : inst.wAB) w = std::max<std::int64_t>(w, std::llabs(x));
    for (auto x : inst.wBC) w = std::max<std::int64_t>(w, std::llabs(x));
    for (auto x : inst.wCA) w = std::max<std::int64_t>(w, std::llabs(x));
    return w;
}

struct TriangleWitness {
    int i;
    int j;
    int k;

    friend bool operator==(const TriangleWitness&, const TriangleWitness&) = default;
};

/// First (lexicographic in (i, j, k)) triple with ab + bc + ca < 0, if any.
/// Naive O(P * N^2).
inline std::optional<TriangleWitness> find_negative_triangle(const TriangleInstance& inst) {
    require_valid(inst);
    for (int i = 0; i < inst.P; ++i)
        for (int j = 0; j < inst.N; ++j)
            for (int k = 0; k < inst.N; ++k)
                if (inst.ab(i, j) + inst.bc(j, k) + inst.ca(k, i) < 0)
                    return TriangleWitness{i, j, k};
    return std::nullopt;
}

/// Splits A into ceil(P / part_size) row ranges; B and C are carried along
/// unchanged. A negative triangle exists in the input iff it exists in at
/// least one of the outputs.
inline std::vector<TriangleInstance> partition_triangle(const TriangleInstance& inst,
                                                        int part_size) {
    require_valid(inst);
    if (part_size < 1 || part_size > inst.P)
        throw std::invalid_argument("partition_triangle: part_size out of range");
    std::vector<TriangleInstance> parts;
    for (int lo = 0; lo < inst.P; lo += part_size) {
        int hi = std::min(lo + part_size, inst.P);
        TriangleInstance part;
        part.P = hi - lo;
        part.N = inst.N;
        part.wAB.assign(inst.wAB.begin() + static_cast<std::ptrdiff_t>(lo) * inst.N,
                        inst.wAB.begin() + static_cast<std::ptrdiff_t>(hi) * inst.N);
        part.wBC = inst.wBC;
        part.wCA.resize(static_cast<std::size_t>(inst.N) * part.P);
        for (int k = 0; k < inst.N; ++k)
            for (int i = lo; i < hi; ++i) part.ca(k, i - lo) = inst.ca(k, i);
        parts.push_back(std::move(part));
    }
    return parts;
}

}  // namespace hopbound
