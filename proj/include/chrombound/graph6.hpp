#pragma once

#include <string>
#include <string_view>

#include "chrombound/graph.hpp"

namespace chrombound {

// graph6: size header, then the upper triangle in column-major order
// (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per byte, offset 63.
// Surrounding whitespace is ignored; a ">>graph6<<" prefix is accepted.
Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

}  // namespace chrombound
