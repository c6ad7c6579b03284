#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopbound {

// Generators and reductions keep all edge weights within this budget, so a
// path of up to n edges can never overflow a signed 64-bit accumulator.
inline constexpr std::int64_t kWeightBudget = std::int64_t{1} << 40;

// Guard for accumulated path lengths; exceeding it is a hard error, never a
// silent wraparound.
inline constexpr std::int64_t kPathLengthLimit = std::int64_t{1} << 62;

struct OverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Length of a path: a finite 64-bit value or the absorbing UNREACHABLE.
class PathLength {
public:
    constexpr PathLength() : finite_(false), value_(0) {}
    constexpr explicit PathLength(std::int64_t v) : finite_(true), value_(v) {}

    static constexpr PathLength unreachable() { return PathLength{}; }

    constexpr bool is_unreachable() const { return !finite_; }
    constexpr bool is_finite() const { return finite_; }

    std::int64_t value() const {
        if (!finite_) throw std::logic_error("PathLength: value() on UNREACHABLE");
        return value_;
    }

    // UNREACHABLE absorbs addition.
    PathLength plus(std::int64_t w) const {
        if (!finite_) return *this;
        std::int64_t r = value_ + w;
        if (r > kPathLengthLimit || r < -kPathLengthLimit)
            throw OverflowError("path length exceeds safety budget");
        return PathLength{r};
    }

    friend constexpr bool operator==(PathLength a, PathLength b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }

    // UNREACHABLE compares greater than every finite value.
    friend constexpr bool operator<(PathLength a, PathLength b) {
        if (!a.finite_) return false;
        if (!b.finite_) return true;
        return a.value_ < b.value_;
    }
    friend constexpr bool operator<=(PathLength a, PathLength b) { return !(b < a); }
    friend constexpr bool operator>(PathLength a, PathLength b) { return b < a; }
    friend constexpr bool operator>=(PathLength a, PathLength b) { return !(a < b); }

    friend PathLength min(PathLength a, PathLength b) { return a < b ? a : b; }

    std::string to_string() const {
        return finite_ ? std::to_string(value_) : std::string("UNREACHABLE");
    }

private:
    bool finite_;
    std::int64_t value_;
};

struct Edge {
    int u;
    int v;
    std::int64_t w;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected weighted multigraph. One record per edge; traversable both ways.
/// Self-loops and parallel edges are permitted.
struct Graph {
    int node_count = 0;
    std::vector<Edge> edges;

    friend bool operator==(const Graph&, const Graph&) = default;
};

/// A hop-bounded shortest-path instance: graph, endpoints, hop bound.
/// h may exceed node_count-1; solvers treat the extra rounds as no-ops.
struct HopInstance {
    Graph graph;
    int s = 0;
    int t = 0;
    std::int64_t h = 0;

    friend bool operator==(const HopInstance&, const HopInstance&) = default;
};

/// One entry per violated invariant; empty means the instance is accepted by
/// every solver without error.
inline std::vector<std::string> validate_instance(const HopInstance& inst) {
    std::vector<std::string> out;
    const Graph& g = inst.graph;
    if (g.node_count < 0) out.push_back("negative node count");
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const Edge& ed = g.edges[e];
        if (ed.u < 0 || ed.u >= g.node_count)
            out.push_back("edge " + std::to_string(e) + ": endpoint " +
                          std::to_string(ed.u) + " out of range");
        if (ed.v < 0 || ed.v >= g.node_count)
            out.push_back("edge " + std::to_string(e) + ": endpoint " +
                          std::to_string(ed.v) + " out of range");
    }
    if (inst.s < 0 || inst.s >= g.node_count) out.push_back("source out of range");
    if (inst.t < 0 || inst.t >= g.node_count) out.push_back("target out of range");
    if (inst.h < 0) out.push_back("negative hop bound");
    return out;
}

inline void require_valid(const HopInstance& inst) {
    auto v = validate_instance(inst);
    if (!v.empty()) throw std::invalid_argument("invalid instance: " + v.front());
}

}  // namespace hopbound
