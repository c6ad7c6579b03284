#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hopbound/convolution.hpp"
#include "hopbound/graph.hpp"
#include "hopbound/triangle.hpp"

namespace hopbound {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// Splits into lines and hands out whitespace-separated integer fields with
// line-numbered diagnostics.
class LineReader {
public:
    explicit LineReader(std::string_view text) {
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t nl = text.find('\n', pos);
            if (nl == std::string_view::npos) nl = text.size();
            lines_.emplace_back(text.substr(pos, nl - pos));
            pos = nl + 1;
        }
    }

    bool eof() const { return next_ >= lines_.size(); }
    int line_number() const { return static_cast<int>(next_); }  // 1-based after next_line

    std::vector<std::int64_t> next_line(std::size_t expect_fields, const char* what) {
        if (eof()) throw ParseError("line " + std::to_string(next_ + 1) + ": missing " + what);
        std::string_view line = lines_[next_++];
        std::vector<std::int64_t> fields;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            if (i >= line.size()) break;
            std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
            std::int64_t value = 0;
            auto [ptr, ec] =
                std::from_chars(line.data() + start, line.data() + i, value);
            if (ec == std::errc::result_out_of_range)
                throw ParseError("line " + std::to_string(next_) +
                                 ": value outside 64-bit range");
            if (ec != std::errc() || ptr != line.data() + i)
                throw ParseError("line " + std::to_string(next_) + ": malformed " + what);
            fields.push_back(value);
        }
        if (fields.size() != expect_fields)
            throw ParseError("line " + std::to_string(next_) + ": expected " +
                             std::to_string(expect_fields) + " fields in " + what);
        return fields;
    }

private:
    std::vector<std::string_view> lines_;
    std::size_t next_ = 0;
};

inline int checked_index(std::int64_t v, std::int64_t n, const char* what, int line) {
    if (v < 0 || v >= n)
        throw ParseError("line " + std::to_string(line) + ": " + what + " " +
                         std::to_string(v) + " out of range");
    return static_cast<int>(v);
}

inline std::int64_t checked_count(std::int64_t v, const char* what, int line) {
    if (v < 0)
        throw ParseError("line " + std::to_string(line) + ": negative " + what);
    return v;
}

}  // namespace detail

/// Graph file: "n m" / "s t h" / then m lines "u v w".
inline HopInstance load_graph(std::string_view text) {
    detail::LineReader r(text);
    auto header = r.next_line(2, "header");
    std::int64_t n = detail::checked_count(header[0], "node count", 1);
    std::int64_t m = detail::checked_count(header[1], "edge count", 1);
    auto inst_line = r.next_line(3, "instance line");
    HopInstance inst;
    inst.graph.node_count = static_cast<int>(n);
    inst.s = detail::checked_index(inst_line[0], n, "source", 2);
    inst.t = detail::checked_index(inst_line[1], n, "target", 2);
    if (inst_line[2] < 0) throw ParseError("line 2: negative hop bound");
    inst.h = inst_line[2];
    inst.graph.edges.reserve(static_cast<std::size_t>(m));
    for (std::int64_t e = 0; e < m; ++e) {
        if (r.eof())
            throw ParseError("line " + std::to_string(r.line_number() + 1) +
                             ": edge count mismatch (expected " + std::to_string(m) + " edges)");
        auto f = r.next_line(3, "edge");
        int line = r.line_number();
        Edge ed;
        ed.u = detail::checked_index(f[0], n, "endpoint", line);
        ed.v = detail::checked_index(f[1], n, "endpoint", line);
        ed.w = f[2];
        inst.graph.edges.push_back(ed);
    }
    if (!r.eof())
        throw ParseError("line " + std::to_string(r.line_number() + 1) +
                         ": edge count mismatch (extra data)");
    return inst;
}

inline std::string save_graph(const HopInstance& inst) {
    std::ostringstream os;
    os << inst.graph.node_count << ' ' << inst.graph.edges.size() << '\n';
    os << inst.s << ' ' << inst.t << ' ' << inst.h << '\n';
    for (const Edge& e : inst.graph.edges) os << e.u << ' ' << e.v << ' ' << e.w << '\n';
    return os.str();
}

/// Triangle file: "P N"; P rows of wAB; N rows of wBC; N rows of wCA.
inline TriangleInstance load_triangle(std::string_view text) {
    detail::LineReader r(text);
    auto header = r.next_line(2, "header");
    if (header[0] < 1 || header[1] < 1) throw ParseError("line 1: P and N must be >= 1");
    TriangleInstance inst;
    inst.P = static_cast<int>(header[0]);
    inst.N = static_cast<int>(header[1]);
    auto read_matrix = [&](int rows, int cols, const char* what) {
        std::vector<std::int64_t> m;
        m.reserve(static_cast<std::size_t>(rows) * cols);
        for (int i = 0; i < rows; ++i) {
            auto f = r.next_line(static_cast<std::size_t>(cols), what);
            m.insert(m.end(), f.begin(), f.end());
        }
        return m;
    };
    inst.wAB = read_matrix(inst.P, inst.N, "wAB row");
    inst.wBC = read_matrix(inst.N, inst.N, "wBC row");
    inst.wCA = read_matrix(inst.N, inst.P, "wCA row");
    return inst;
}

inline std::string save_triangle(const TriangleInstance& inst) {
    std::ostringstream os;
    os << inst.P << ' ' << inst.N << '\n';
    auto write_matrix = [&](const std::vector<std::int64_t>& m, int rows, int cols) {
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j)
                os << m[static_cast<std::size_t>(i) * cols + j] << (j + 1 < cols ? ' ' : '\n');
        }
    };
    write_matrix(inst.wAB, inst.P, inst.N);
    write_matrix(inst.wBC, inst.N, inst.N);
    write_matrix(inst.wCA, inst.N, inst.P);
    return os.str();
}

/// Sequence-triple file: "N"; then one line each for a, b, c.
inline SequenceTriple load_sequence_triple(std::string_view text) {
    detail::LineReader r(text);
    auto header = r.next_line(1, "header");
    if (header[0] < 1) throw ParseError("line 1: N must be >= 1");
    std::size_t n = static_cast<std::size_t>(header[0]);
    SequenceTriple t;
    t.a = r.next_line(n, "sequence a");
    t.b = r.next_line(n, "sequence b");
    t.c = r.next_line(n, "sequence c");
    return t;
}

inline std::string save_sequence_triple(const SequenceTriple& t) {
    std::ostringstream os;
    os << t.a.size() << '\n';
    auto write_seq = [&](const Sequence& s) {
        for (std::size_t i = 0; i < s.size(); ++i) os << s[i] << (i + 1 < s.size() ? ' ' : '\n');
    };
    write_seq(t.a);
    write_seq(t.b);
    write_seq(t.c);
    return os.str();
}

/// Common-instance file: "M N"; M blocks of two lines (a_l then b_l); final
/// line c.
inline CommonUBInstance load_common(std::string_view text) {
    detail::LineReader r(text);
    auto header = r.next_line(2, "header");
    if (header[0] < 1 || header[1] < 1) throw ParseError("line 1: M and N must be >= 1");
    std::size_t m = static_cast<std::size_t>(header[0]);
    std::size_t n = static_cast<std::size_t>(header[1]);
    CommonUBInstance inst;
    for (std::size_t l = 0; l < m; ++l) {
        Sequence a = r.next_line(n, "sequence a");
        Sequence b = r.next_line(n, "sequence b");
        inst.pairs.emplace_back(std::move(a), std::move(b));
    }
    inst.c = r.next_line(n, "sequence c");
    return inst;
}

inline std::string save_common(const CommonUBInstance& inst) {
    std::ostringstream os;
    os << inst.pairs.size() << ' ' << inst.c.size() << '\n';
    auto write_seq = [&](const Sequence& s) {
        for (std::size_t i = 0; i < s.size(); ++i) os << s[i] << (i + 1 < s.size() ? ' ' : '\n');
    };
    for (const auto& [a, b] : inst.pairs) {
        write_seq(a);
        write_seq(b);
    }
    write_seq(inst.c);
    return os.str();
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(path + ": cannot open for reading");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << content;
    if (!out) throw std::runtime_error(path + ": write failed");
}

}  // namespace hopbound
