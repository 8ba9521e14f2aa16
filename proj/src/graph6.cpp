#include "cyclemonoid/graph6.hpp"

#include <stdexcept>

namespace cyclemonoid {

SimpleGraph parse_graph6(const std::string& line) {
  if (line.empty()) throw std::runtime_error("graph6: empty line");
  for (char c : line)
    if (c < 63 || c > 126) throw std::runtime_error("graph6: invalid character");
  int n = line[0] - 63;
  if (n == 63)
    throw std::runtime_error("graph6: long form (n > 62) not supported");
  SimpleGraph h(n);
  long long nbits = static_cast<long long>(n) * (n - 1) / 2;
  long long nbytes = (nbits + 5) / 6;
  if (static_cast<long long>(line.size()) != 1 + nbytes)
    throw std::runtime_error("graph6: truncated or oversized bit string");
  long long bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      int byte = line[1 + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) h.add_edge(u, v);
    }
  }
  // Padding bits must be zero.
  for (long long b = nbits; b < nbytes * 6; ++b) {
    int byte = line[1 + b / 6] - 63;
    if ((byte >> (5 - b % 6)) & 1) throw std::runtime_error("graph6: nonzero padding bits");
  }
  return h;
}

std::string to_graph6(const SimpleGraph& h) {
  int n = h.vertex_count();
  if (n > 62) throw std::length_error("graph6: short form requires n <= 62");
  std::string out(1, static_cast<char>(n + 63));
  long long nbits = static_cast<long long>(n) * (n - 1) / 2;
  long long nbytes = (nbits + 5) / 6;
  out.resize(1 + nbytes, 63);
  long long bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      if (h.adjacent(u, v)) out[1 + bit / 6] += 1 << (5 - bit % 6);
    }
  }
  return out;
}

}  // namespace cyclemonoid
