#include "histlab/graph6.hpp"

namespace histlab {

namespace {

constexpr int kBias = 63;

int body_bytes(int n) {
    long bits = static_cast<long>(n) * (n - 1) / 2;
    return static_cast<int>((bits + 5) / 6);
}

}  // namespace

Graph from_graph6(std::string_view line) {
    if (line.empty()) throw Graph6Error("empty graph6 line", 0);

    std::size_t pos = 0;
    auto take = [&]() -> int {
        if (pos >= line.size()) throw Graph6Error("truncated graph6 line", line.size());
        unsigned char c = static_cast<unsigned char>(line[pos]);
        if (c < kBias || c > 126)
            throw Graph6Error("character out of graph6 range", pos);
        ++pos;
        return c - kBias;
    };

    long n;
    int first = take();
    if (first == 126 - kBias) {
        // 18-bit order: three more 6-bit groups, big-endian.
        long hi = take(), mid = take(), lo = take();
        if (hi == 126 - kBias)
            throw Graph6Error("36-bit graph6 orders not supported", 1);
        n = (hi << 12) | (mid << 6) | lo;
        if (n < 63) throw Graph6Error("non-canonical long-form order", 1);
    } else {
        n = first;
    }
    if (n > kMaxVertices)
        throw Graph6Error("order exceeds vertex cap " + std::to_string(kMaxVertices), 0);

    Graph g(static_cast<int>(n));
    const long bits = n * (n - 1) / 2;
    int acc = 0;
    int acc_left = 0;
    int col = 1, row = 0;
    for (long i = 0; i < bits; ++i) {
        if (acc_left == 0) {
            acc = take();
            acc_left = 6;
        }
        if ((acc >> (acc_left - 1)) & 1) g.add_edge(row, col);
        --acc_left;
        if (++row == col) {
            ++col;
            row = 0;
        }
    }
    // Padding bits of the last group must be zero.
    if (acc_left > 0 && (acc & ((1 << acc_left) - 1)))
        throw Graph6Error("nonzero padding bits", pos - 1);
    if (pos != line.size()) throw Graph6Error("trailing garbage after graph6 body", pos);
    return g;
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kMaxVertices) throw std::domain_error("graph order exceeds supported size");
    std::string out;
    out.reserve(4 + body_bytes(n));
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }
    int acc = 0, acc_bits = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++acc_bits == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                acc_bits = 0;
            }
        }
    if (acc_bits > 0)
        out.push_back(static_cast<char>((acc << (6 - acc_bits)) + kBias));
    return out;
}

}  // namespace histlab
