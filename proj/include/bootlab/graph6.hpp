#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bootlab/graph.hpp"

namespace bootlab {

struct Graph6ParseError : InputError {
  std::size_t offset;

  Graph6ParseError(const std::string& what, std::size_t off)
      : InputError(what + " (byte offset " + std::to_string(off) + ")"), offset(off) {}
};

// graph6: header encodes n (63+n for n<63, else 126 then three 6-bit groups),
// then upper-triangle bits column-major, packed 6 per byte, each +63.
inline std::string encode_graph6(const Graph& g) {
  int n = g.vertex_count();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  } else {
    throw InputError("graph6: vertex count too large to encode");
  }
  int acc = 0, nbits = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

inline Graph decode_graph6(const std::string& text) {
  std::size_t pos = 0;
  auto need = [&](std::size_t k) {
    if (pos + k > text.size()) throw Graph6ParseError("graph6: truncated input", text.size());
  };
  auto group = [&](std::size_t at) -> int {
    unsigned char c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) throw Graph6ParseError("graph6: byte out of printable range", at);
    return c - 63;
  };
  need(1);
  long long n;
  if (static_cast<unsigned char>(text[0]) == 126) {
    need(4);
    if (static_cast<unsigned char>(text[1]) == 126)
      throw Graph6ParseError("graph6: 36-bit sizes not supported", 1);
    n = (static_cast<long long>(group(1)) << 12) | (group(2) << 6) | group(3);
    pos = 4;
  } else {
    n = group(0);
    pos = 1;
  }
  Graph g(static_cast<int>(n));
  long long total_bits = n * (n - 1) / 2;
  long long expect_bytes = (total_bits + 5) / 6;
  if (static_cast<long long>(text.size() - pos) != expect_bytes)
    throw Graph6ParseError("graph6: body has wrong length for n=" + std::to_string(n),
                           text.size() > pos + expect_bytes ? pos + expect_bytes : text.size());
  int acc = 0, nbits = 0;
  std::size_t at = pos;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      if (nbits == 0) {
        acc = group(at);
        ++at;
        nbits = 6;
      }
      if ((acc >> (nbits - 1)) & 1) g.add_edge(row, col);
      --nbits;
    }
  }
  if (nbits > 0 && (acc & ((1 << nbits) - 1)) != 0)
    throw Graph6ParseError("graph6: nonzero padding bits", at - 1);
  return g;
}

// Edge-list text format: first line "n m", then m lines "u v", 0-based.
inline void write_edge_list(std::ostream& os, const Graph& g) {
  auto edges = g.edges();
  os << g.vertex_count() << ' ' << edges.size() << '\n';
  for (const auto& e : edges) os << e.u << ' ' << e.v << '\n';
}

inline Graph read_edge_list(std::istream& is) {
  int n = 0;
  long long m = 0;
  if (!(is >> n >> m)) throw InputError("edge list: missing 'n m' header");
  if (n < 0 || m < 0) throw InputError("edge list: negative header values");
  Graph g(n);
  for (long long i = 0; i < m; ++i) {
    int u, v;
    if (!(is >> u >> v)) throw InputError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    g.add_edge(u, v);
  }
  return g;
}

inline std::string to_edge_list_string(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

inline Graph from_edge_list_string(const std::string& s) {
  std::istringstream is(s);
  return read_edge_list(is);
}

}  // namespace bootlab
