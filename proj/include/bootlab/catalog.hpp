#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "bootlab/graph.hpp"
#include "bootlab/rule.hpp"

namespace bootlab {

inline Graph clique_graph(int k) {
  if (k < 1) throw InputError("clique: k >= 1 required");
  return Graph::complete(k);
}

inline Graph path_graph(int t) {
  if (t < 1) throw InputError("path: t >= 1 required");
  Graph g(t);
  for (int i = 0; i + 1 < t; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle_graph(int k) {
  if (k < 3) throw InputError("cycle: k >= 3 required");
  Graph g(k);
  for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
  return g;
}

// t-vertex star K_{1,t-1}, centre 0
inline Graph star_graph(int t) {
  if (t < 2) throw InputError("star: t >= 2 required");
  Graph g(t);
  for (int i = 1; i < t; ++i) g.add_edge(0, i);
  return g;
}

inline Graph complete_bipartite_graph(int r, int s) {
  if (r < 1 || s < 1) throw InputError("complete bipartite: positive part sizes required");
  Graph g(r + s);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < s; ++j) g.add_edge(i, r + j);
  return g;
}

// W_k: cycle of length k plus a hub adjacent to the whole cycle
inline Graph wheel_graph(int k) {
  if (k < 3) throw InputError("wheel: k >= 3 required");
  Graph g(k + 1);
  for (int i = 0; i < k; ++i) {
    g.add_edge(i, (i + 1) % k);
    g.add_edge(i, k);
  }
  return g;
}

inline Graph cube_graph() {
  Graph g(8);
  for (int v = 0; v < 8; ++v)
    for (int b = 0; b < 3; ++b) {
      int w = v ^ (1 << b);
      if (w > v) g.add_edge(v, w);
    }
  return g;
}

// K_k plus a pendant vertex
inline Graph clique_plus_pendant_graph(int k) {
  if (k < 2) throw InputError("clique-plus-pendant: k >= 2 required");
  Graph g = Graph::complete(k).disjoint_union(Graph(1));
  g.add_edge(0, k);
  return g;
}

// square of the k-cycle: distance <= 2 along the cyclic order
inline Graph square_of_cycle_graph(int k) {
  if (k < 5) throw InputError("square-of-cycle: k >= 5 required");
  Graph g(k);
  for (int i = 0; i < k; ++i) {
    g.add_edge(i, (i + 1) % k);
    g.add_edge(i, (i + 2) % k);
  }
  return g;
}

// H'_k: two k-cliques glued along an edge, plus one extra edge between
// non-adjacent vertices.
inline Graph glued_cliques_graph(int k) {
  if (k < 4) throw InputError("glued-cliques: k >= 4 required (k = 3 degenerates to K4)");
  int n = 2 * k - 2;
  Graph g(n);
  // shared edge (0,1); first clique {0,1,2..k-1}, second {0,1,k..2k-3}
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
  std::vector<int> second = {0, 1};
  for (int i = k; i < n; ++i) second.push_back(i);
  for (std::size_t a = 0; a < second.size(); ++a)
    for (std::size_t b = a + 1; b < second.size(); ++b) g.add_edge(second[a], second[b]);
  g.add_edge(2, k);  // e': joins the two sides off the shared edge
  return g;
}

// 16-vertex rule: clique B of size 6, clique A of size 9 whose vertex u is
// universal, and a pendant vertex attached to u. Vertices: A = 0..8 with
// u = 0, B = 9..14, pendant = 15.
inline Graph pendant_simulation_graph() {
  Graph g(16);
  for (int u = 0; u < 9; ++u)
    for (int v = u + 1; v < 9; ++v) g.add_edge(u, v);
  for (int u = 9; u < 15; ++u)
    for (int v = u + 1; v < 15; ++v) g.add_edge(u, v);
  for (int v = 9; v < 15; ++v) g.add_edge(0, v);
  g.add_edge(0, 15);
  return g;
}

inline Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

namespace detail {

inline std::pair<std::string, std::vector<int>> split_spec_token(const std::string& token) {
  std::string name;
  std::vector<int> args;
  std::size_t i = 0;
  while (i < token.size() && (std::isalpha(static_cast<unsigned char>(token[i])) || token[i] == '-' || token[i] == '_'))
    name.push_back(token[i++]);
  while (i < token.size()) {
    if (token[i] == ' ' || token[i] == ',') {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(token[i])))
      throw InputError("rule spec: unexpected token '" + token.substr(i) + "' in '" + token + "'");
    int value = 0;
    while (i < token.size() && std::isdigit(static_cast<unsigned char>(token[i])))
      value = value * 10 + (token[i++] - '0');
    args.push_back(value);
  }
  return {name, args};
}

}  // namespace detail

// Builtin rule identifiers: clique k, cycle k, path t, star t (t-vertex star),
// complete-bipartite r s, wheel k, cube, clique-plus-pendant k,
// glued-cliques k, pendant-simulation, square-of-cycle k. "A+B" is the
// disjoint union. Numbers may be separated by a space or attached ("clique4").
inline Graph rule_graph_from_spec(const std::string& spec) {
  std::size_t plus = spec.find('+');
  if (plus != std::string::npos) {
    Graph left = rule_graph_from_spec(spec.substr(0, plus));
    Graph right = rule_graph_from_spec(spec.substr(plus + 1));
    return left.disjoint_union(right);
  }
  std::string trimmed;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c)) || !trimmed.empty()) trimmed.push_back(c);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.pop_back();
  auto [name, args] = detail::split_spec_token(trimmed);
  auto want = [&](std::size_t k) {
    if (args.size() != k)
      throw InputError("rule spec '" + name + "': expected " + std::to_string(k) + " parameter(s)");
  };
  if (name == "clique" || name == "k") {
    want(1);
    return clique_graph(args[0]);
  }
  if (name == "cycle" || name == "c") {
    want(1);
    return cycle_graph(args[0]);
  }
  if (name == "path" || name == "p") {
    want(1);
    return path_graph(args[0]);
  }
  if (name == "star") {
    want(1);
    return star_graph(args[0]);
  }
  if (name == "complete-bipartite" || name == "biclique") {
    want(2);
    return complete_bipartite_graph(args[0], args[1]);
  }
  if (name == "wheel" || name == "w") {
    want(1);
    return wheel_graph(args[0]);
  }
  if (name == "cube") {
    want(0);
    return cube_graph();
  }
  if (name == "clique-plus-pendant") {
    want(1);
    return clique_plus_pendant_graph(args[0]);
  }
  if (name == "glued-cliques") {
    want(1);
    return glued_cliques_graph(args[0]);
  }
  if (name == "pendant-simulation") {
    want(0);
    return pendant_simulation_graph();
  }
  if (name == "square-of-cycle") {
    want(1);
    return square_of_cycle_graph(args[0]);
  }
  throw InputError("rule spec: unknown builtin '" + name + "'");
}

inline InfectionRule rule_from_spec(const std::string& spec) {
  return InfectionRule(rule_graph_from_spec(spec), spec);
}

}  // namespace bootlab
