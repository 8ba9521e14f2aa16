#pragma once

#include <string>

#include "cyclemonoid/graph.hpp"

namespace cyclemonoid {

// graph6 short form (n <= 62): one byte n+63, then the upper triangle in
// column-major order x(0,1), x(0,2), x(1,2), x(0,3), ... packed six bits per
// byte, most significant bit first, each byte offset by 63.
SimpleGraph parse_graph6(const std::string& line);
std::string to_graph6(const SimpleGraph& h);

}  // namespace cyclemonoid
