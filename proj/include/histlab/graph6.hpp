#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "histlab/graph.hpp"

namespace histlab {

// Parse failure; offset is the byte position within the offending line.
struct Graph6Error : std::runtime_error {
    std::size_t offset;

    Graph6Error(const std::string& what, std::size_t off)
        : std::runtime_error(what + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

// Decodes one graph6 line (no trailing newline). Strict: rejects bad header
// bytes, truncated or overlong bodies, out-of-range characters and nonzero
// padding bits, always naming the byte offset.
Graph from_graph6(std::string_view line);

// Standard graph6, shortest form: one header byte for n <= 62, otherwise the
// 126-prefixed 18-bit form. Body bits are the upper triangle in column order
// x(0,1), x(0,2), x(1,2), x(0,3), ..., zero-padded to a multiple of 6.
std::string to_graph6(const Graph& g);

}  // namespace histlab
