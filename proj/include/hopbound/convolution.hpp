#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hopbound/graph.hpp"

namespace hopbound {

using Sequence = std::vector<std::int64_t>;

struct SequenceTriple {
    Sequence a;
    Sequence b;
    Sequence c;

    int n() const { return static_cast<int>(a.size()); }

    friend bool operator==(const SequenceTriple&, const SequenceTriple&) = default;
};

inline void require_valid(const SequenceTriple& t) {
    if (t.a.empty()) throw std::invalid_argument("sequence triple: length must be >= 1");
    if (t.a.size() != t.b.size() || t.a.size() != t.c.size())
        throw std::invalid_argument("sequence triple: length mismatch");
}

/// M pairs of length-N sequences checked against one shared bound sequence c.
struct CommonUBInstance {
    std::vector<std::pair<Sequence, Sequence>> pairs;
    Sequence c;

    int m() const { return static_cast<int>(pairs.size()); }
    int n() const { return static_cast<int>(c.size()); }

    friend bool operator==(const CommonUBInstance&, const CommonUBInstance&) = default;
};

inline void require_valid(const CommonUBInstance& inst) {
    if (inst.pairs.empty()) throw std::invalid_argument("common instance: M must be >= 1");
    if (inst.c.empty()) throw std::invalid_argument("common instance: N must be >= 1");
    for (const auto& [a, b] : inst.pairs)
        if (a.size() != inst.c.size() || b.size() != inst.c.size())
            throw std::invalid_argument("common instance: sequence length mismatch");
}

/// Indices with c[k] < a_l[i] + b_l[j]; l is 1-based. Exact mode has i+j = k,
/// relaxed mode only i+j <= k.
struct ViolatingQuadruple {
    int i;
    int j;
    int k;
    int l;
    bool relaxed = false;

    friend bool operator==(const ViolatingQuadruple&, const ViolatingQuadruple&) = default;
};

/// c[k] = min over i+j=k of a[i]+b[j]. Output has length N by default;
/// full_length extends to all 2N-1 convolution indices.
inline Sequence minplus_convolution(const Sequence& a, const Sequence& b,
                                    bool full_length = false) {
    if (a.empty() || a.size() != b.size())
        throw std::invalid_argument("minplus_convolution: length mismatch");
    int n = static_cast<int>(a.size());
    int out_len = full_length ? 2 * n - 1 : n;
    Sequence c(static_cast<std::size_t>(out_len));
    for (int k = 0; k < out_len; ++k) {
        std::int64_t best = std::numeric_limits<std::int64_t>::max();
        for (int i = std::max(0, k - n + 1); i <= std::min(k, n - 1); ++i)
            best = std::min(best, a[i] + b[k - i]);
        c[k] = best;
    }
    return c;
}

/// Lexicographically smallest (k, i) with i+j=k and c[k] < a[i]+b[j], if any.
inline std::optional<ViolatingQuadruple> maxplus_ub_check(const SequenceTriple& t) {
    require_valid(t);
    int n = t.n();
    for (int k = 0; k < n; ++k)
        for (int i = 0; i <= k; ++i) {
            int j = k - i;
            if (t.c[k] < t.a[i] + t.b[j]) return ViolatingQuadruple{i, j, k, 1};
        }
    return std::nullopt;
}

/// Common variant over M pairs; returns the lexicographically smallest
/// (l, k, i) violation. Relaxed mode searches i+j <= k instead of i+j = k.
inline std::optional<ViolatingQuadruple> common_ub_check(const CommonUBInstance& inst,
                                                         bool relaxed = false) {
    require_valid(inst);
    int n = inst.n();
    for (int l = 0; l < inst.m(); ++l) {
        const auto& [a, b] = inst.pairs[l];
        for (int k = 0; k < n; ++k)
            for (int i = 0; i <= k; ++i) {
                if (!relaxed) {
                    int j = k - i;
                    if (inst.c[k] < a[i] + b[j])
                        return ViolatingQuadruple{i, j, k, l + 1, false};
                } else {
                    for (int j = 0; i + j <= k; ++j)
                        if (inst.c[k] < a[i] + b[j])
                            return ViolatingQuadruple{i, j, k, l + 1, true};
                }
            }
    }
    return std::nullopt;
}

/// Constants of the affine ramp applied by normalize_instance.
struct NormalizationMeta {
    std::int64_t max_abs;  // W': max |value| over all input sequences
    std::int64_t step;     // D = 2*W' + 1
};

inline std::int64_t max_abs_value(const CommonUBInstance& inst) {
    std::int64_t w = 0;
    for (const auto& [a, b] : inst.pairs) {
        for (auto x : a) w = std::max<std::int64_t>(w, std::llabs(x));
        for (auto x : b) w = std::max<std::int64_t>(w, std::llabs(x));
    }
    for (auto x : inst.c) w = std::max<std::int64_t>(w, std::llabs(x));
    return w;
}

/// Makes every sequence nonnegative and strictly increasing while preserving
/// the sign of a_l[i] + b_l[j] - c[k] at every index triple with i+j = k:
///   a'[i] = a[i] + (i+1)*D + W',  b'[j] = b[j] + (j+1)*D + W',
///   c'[k] = c[k] + (k+2)*D + 2*W',  with D = 2*W' + 1.
inline std::pair<CommonUBInstance, NormalizationMeta> normalize_instance(
    const CommonUBInstance& inst) {
    require_valid(inst);
    std::int64_t w = max_abs_value(inst);
    std::int64_t d = 2 * w + 1;
    int n = inst.n();
    if (w + (static_cast<std::int64_t>(n) + 1) * d + 2 * w > kWeightBudget)
        throw OverflowError("normalize_instance: values would exceed weight budget");
    CommonUBInstance out;
    out.pairs.reserve(inst.pairs.size());
    for (const auto& [a, b] : inst.pairs) {
        Sequence na(a.size()), nb(b.size());
        for (int i = 0; i < n; ++i) na[i] = a[i] + (i + 1) * d + w;
        for (int j = 0; j < n; ++j) nb[j] = b[j] + (j + 1) * d + w;
        out.pairs.emplace_back(std::move(na), std::move(nb));
    }
    out.c.resize(inst.c.size());
    for (int k = 0; k < n; ++k) out.c[k] = inst.c[k] + (k + 2) * d + 2 * w;
    return {std::move(out), NormalizationMeta{w, d}};
}

/// One emitted group of the block self-reduction, with enough bookkeeping to
/// map local violation indices back to the input triple.
struct SplitGroup {
    CommonUBInstance instance;
    int group = 0;         // g = p + q of the contributing block pairs
    int block_length = 0;  // B
    std::vector<std::pair<int, int>> block_pairs;  // (p, q) per pair, l-1 indexed

    /// Local (i, j, k, l) -> global (i, j, k); nullopt if any index lands on
    /// padding.
    std::optional<std::array<int, 3>> to_global(const ViolatingQuadruple& q,
                                                int input_length) const {
        auto [p, qq] = block_pairs.at(static_cast<std::size_t>(q.l - 1));
        int gi = p * block_length + q.i;
        int gj = qq * block_length + q.j;
        int gk = group * block_length + q.k;
        if (q.i >= block_length || gi >= input_length) return std::nullopt;
        if (q.j >= block_length || gj >= input_length) return std::nullopt;
        if (gk >= input_length) return std::nullopt;
        return std::array<int, 3>{gi, gj, gk};
    }
};

/// Splits a and b into ceil(N/B) blocks and groups block pairs by p+q; every
/// group shares one window of c. Padding keeps all sequences at length 2B-1
/// and is chosen so padded entries can never participate in a violation.
/// The input has an exact violating triple iff some group does.
inline std::vector<SplitGroup> split_into_common(const SequenceTriple& t, int block_length) {
    require_valid(t);
    int n = t.n();
    if (block_length < 1 || block_length > n)
        throw std::invalid_argument("split_into_common: block length out of range");
    std::int64_t w = 0;
    for (auto x : t.a) w = std::max<std::int64_t>(w, std::llabs(x));
    for (auto x : t.b) w = std::max<std::int64_t>(w, std::llabs(x));
    for (auto x : t.c) w = std::max<std::int64_t>(w, std::llabs(x));
    const std::int64_t pad_ab = -(3 * w + 1);
    const std::int64_t pad_c = 3 * w + 1;

    int blocks = (n + block_length - 1) / block_length;
    int local_len = 2 * block_length - 1;

    auto slice = [&](const Sequence& src, int start, int count, std::int64_t pad) {
        Sequence out(static_cast<std::size_t>(local_len), pad);
        for (int i = 0; i < count; ++i)
            if (start + i < n) out[i] = src[start + i];
        return out;
    };

    std::vector<SplitGroup> groups;
    for (int g = 0; g <= 2 * blocks - 2; ++g) {
        SplitGroup grp;
        grp.group = g;
        grp.block_length = block_length;
        for (int p = std::max(0, g - blocks + 1); p <= std::min(g, blocks - 1); ++p) {
            int q = g - p;
            grp.instance.pairs.emplace_back(slice(t.a, p * block_length, block_length, pad_ab),
                                            slice(t.b, q * block_length, block_length, pad_ab));
            grp.block_pairs.emplace_back(p, q);
        }
        grp.instance.c = slice(t.c, g * block_length, local_len, pad_c);
        groups.push_back(std::move(grp));
    }
    return groups;
}

}  // namespace hopbound
