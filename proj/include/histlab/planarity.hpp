#pragma once

#include "histlab/graph.hpp"

namespace histlab {

// True iff g embeds in the plane (Boyer-Myrvold test behind the scenes).
bool is_planar(const Graph& g);

}  // namespace histlab
