// Bit-exact graph6 encoding/decoding.
//
// Size field: n <= 62 is one byte 63+n; 63 <= n <= 258047 is the byte 126
// followed by three bytes carrying n big-endian in 18 bits. Body: upper
// triangle in column order (0,1),(0,2),(1,2),(0,3),... as a bit stream,
// MSB first within each 6-bit group, zero-padded to a multiple of 6.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lapspec/graph.hpp"

namespace lapspec {

struct Graph6Error : std::runtime_error {
  size_t offset;
  Graph6Error(const std::string& msg, size_t off)
      : std::runtime_error("graph6: " + msg + " (byte offset " + std::to_string(off) + ")"),
        offset(off) {}
};

inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  size_t base = 0;
  if (text.substr(0, kHeader.size()) == kHeader) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("empty input", base);

  auto val = [&](size_t i) -> int {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw Graph6Error("byte outside [63,126]", base + i);
    return c - 63;
  };

  size_t pos = 0;
  long n;
  if (val(0) < 63) {
    n = val(0);
    pos = 1;
  } else {
    if (text.size() < 4) throw Graph6Error("truncated long size field", base + text.size());
    if (val(1) == 63) throw Graph6Error("graph6 does not support n > 258047 here", base + 1);
    n = (static_cast<long>(val(1)) << 12) | (val(2) << 6) | val(3);
    pos = 4;
    if (n <= 62) throw Graph6Error("non-minimal size encoding", base);
  }
  if (n < 1) throw Graph6Error("order must be >= 1", base);

  long nbits = n * (n - 1) / 2;
  size_t body = static_cast<size_t>((nbits + 5) / 6);
  if (text.size() != pos + body)
    throw Graph6Error("body length mismatch: expected " + std::to_string(body) + " bytes",
                      base + text.size());

  Graph g(static_cast<int>(n));
  std::vector<std::pair<int, int>> es;
  long bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit)
      if (val(pos + bit / 6) >> (5 - bit % 6) & 1) es.emplace_back(u, v);
  // padding bits must be zero
  for (long b = nbits; b < static_cast<long>(body) * 6; ++b)
    if (val(pos + b / 6) >> (5 - b % 6) & 1)
      throw Graph6Error("nonzero padding bits", base + pos + b / 6);
  return Graph::from_edges(static_cast<int>(n), es);
}

inline std::string to_graph6(const Graph& g) {
  long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    if (n > 258047) throw std::invalid_argument("to_graph6: n > 258047 unsupported");
    out.push_back(126);
    out.push_back(static_cast<char>(63 + (n >> 12 & 63)));
    out.push_back(static_cast<char>(63 + (n >> 6 & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  long nbits = n * (n - 1) / 2;
  long bit = 0;
  int group = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit) {
      if (g.has_edge(u, v)) group |= 1 << (5 - bit % 6);
      if (bit % 6 == 5) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
      }
    }
  if (nbits % 6) out.push_back(static_cast<char>(63 + group));
  return out;
}

}  // namespace lapspec
