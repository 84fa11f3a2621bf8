#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bootlab/arithmetic.hpp"
#include "bootlab/catalog.hpp"
#include "bootlab/chain.hpp"
#include "bootlab/engine.hpp"
#include "bootlab/graph.hpp"
#include "bootlab/util.hpp"

namespace bootlab {

// ---------------------------------------------------------------------------
// Simple chains: consecutive copies share exactly the two vertices of the
// designated edge. Works for any rule with two disjoint edges by ordering the
// rule's vertices so one edge sits on the first two positions and a disjoint
// one on the last two.

namespace detail {

inline std::vector<int> chain_vertex_order(const Graph& h) {
  int k = h.vertex_count();
  auto edges = h.edges();
  for (const auto& head : edges) {
    for (const auto& tail : edges) {
      if (head.u == tail.u || head.u == tail.v || head.v == tail.u || head.v == tail.v) continue;
      std::vector<int> order = {head.u, head.v};
      for (int v = 0; v < k; ++v)
        if (v != head.u && v != head.v && v != tail.u && v != tail.v) order.push_back(v);
      order.push_back(tail.u);
      order.push_back(tail.v);
      return order;
    }
  }
  throw ConstructionError("simple chain: rule has no two disjoint edges");
}

}  // namespace detail

inline Chain simple_rule_chain(const InfectionRule& rule, int length) {
  if (length < 1) throw InputError("simple chain: length >= 1 required");
  int k = rule.vertex_count();
  std::vector<int> order;
  if (length == 1) {
    order.resize(k);
    for (int i = 0; i < k; ++i) order[i] = i;
    auto edges = rule.graph().edges();
    // designated edge: any edge, mapped onto the window's natural position
    Chain c = make_chain(rule, k, {order}, {edges.back()});
    return c;
  }
  order = detail::chain_vertex_order(rule.graph());
  int stride = k - 2;
  int ambient = stride * length + 2;
  std::vector<std::vector<int>> copies;
  std::vector<VertexPair> designated;
  for (int i = 0; i < length; ++i) {
    std::vector<int> copy(k);
    for (int j = 0; j < k; ++j) copy[order[j]] = i * stride + j;
    copies.push_back(std::move(copy));
    designated.emplace_back((i + 1) * stride, (i + 1) * stride + 1);
  }
  return make_chain(rule, ambient, std::move(copies), std::move(designated));
}

inline Chain simple_clique_chain(int k, int d) {
  if (k < 3 || d < 1) throw InputError("simple clique chain: k >= 3 and d >= 1 required");
  if (k == 3 && d >= 2)
    throw InputError("simple clique chain: K3 has no edge disjoint from the shared one; k >= 4 required for d >= 2");
  return simple_rule_chain(InfectionRule(clique_graph(k), "clique " + std::to_string(k)), d);
}

// ---------------------------------------------------------------------------
// Extremal starting graphs for exact formulas.

// Iterated K4-minus-an-edge: each new vertex is attached to both endpoints of
// the previous graph's last-infected edge (lexicographically least when the
// last round has several). Running time n - 3.
inline Graph k4_extremal(int n) {
  if (n < 4) throw InputError("k4 extremal: n >= 4 required");
  InfectionRule k4(clique_graph(4), "clique 4");
  Graph g = Graph::complete(4);
  g.remove_edge(2, 3);
  for (int v = 4; v < n; ++v) {
    auto trace = run_process(g, k4);
    const auto& last = trace.rounds.back();
    VertexPair e = *std::min_element(last.begin(), last.end());
    Graph grown(v + 1);
    for (const auto& edge : g.edges()) grown.add_edge(edge.u, edge.v);
    grown.add_edge(v, e.u);
    grown.add_edge(v, e.v);
    g = std::move(grown);
  }
  return g;
}

// Disjoint stars K_{1,s} for 1 <= s <= t-2 plus isolated vertices: running
// time t-1 for the star rule K_{1,t-1} once n is large enough.
inline Graph star_extremal(int t, long long n) {
  if (t < 3) throw InputError("star extremal: t >= 3 required");
  long long core = static_cast<long long>(t) * (t - 1) / 2 - 1;  // star vertices
  if (n < core + 1) throw InputError("star extremal: n >= C(t,2) required");
  Graph g(static_cast<int>(n));
  int at = 0;
  for (int s = 1; s <= t - 2; ++s) {
    int centre = at++;
    for (int leaf = 0; leaf < s; ++leaf) g.add_edge(centre, at++);
  }
  return g;
}

inline Graph path_start(int n) {
  if (n < 2) throw InputError("path start: n >= 2 required");
  return path_graph(n);
}

// ---------------------------------------------------------------------------
// Dilation K5-chains over Z_p, linked across dilations by short simple
// chains that introduce seven fresh vertices each.

namespace detail {

// The relations the assembly consumes: no alpha*a1 + beta*a2 = 0 (mod p) with
// non-zero coefficients bounded by c, for distinct elements. Edge-disjointness
// of dilation chains and simplicity of linking chains reduce to this.
inline bool dilation_pair_clean(long long p, int c, long long a1, long long a2) {
  for (long long x = -c; x <= c; ++x) {
    if (x == 0) continue;
    for (long long y = -c; y <= c; ++y) {
      if (y == 0) continue;
      if (mod_p(x * a1 + y * a2, p) == 0) return false;
    }
  }
  return true;
}

inline bool dilation_set_compatible(const DilationSet& s) {
  if (s.p < 7) return false;
  for (long long e : s.elements)
    if (e < 1 || e >= s.p) return false;
  for (std::size_t i = 0; i < s.elements.size(); ++i)
    for (std::size_t j = i + 1; j < s.elements.size(); ++j)
      if (!dilation_pair_clean(s.p, s.coeff_bound, s.elements[i], s.elements[j])) return false;
  return true;
}

}  // namespace detail

inline Chain dilation_k5_assembly(long long p, const DilationSet& A) {
  if (A.p != p) throw InputError("dilation assembly: set modulus mismatch");
  if (A.elements.empty()) throw InputError("dilation assembly: empty dilation set");
  if (!A.verified && !detail::dilation_set_compatible(A))
    throw InputError("dilation assembly: refusing unverified dilation set");
  long long tau0 = (p - 3) / 3;
  if (tau0 < 1) throw InputError("dilation assembly: p too small");
  int q = static_cast<int>(A.elements.size());
  int base_vertices = static_cast<int>(p - 1);         // w_1 .. w_{p-1}
  int ambient = base_vertices + 7 * (q - 1);
  InfectionRule k5(clique_graph(5), "clique 5");
  std::vector<std::vector<int>> copies;
  std::vector<VertexPair> designated;
  auto w = [&](long long idx) {  // ambient id of w_{idx mod p}, idx never 0 mod p
    long long r = detail::mod_p(idx, p);
    return static_cast<int>(r - 1);
  };
  int fresh = base_vertices;
  for (int j = 0; j < q; ++j) {
    long long a = A.elements[j];
    for (long long i = 1; i <= tau0; ++i) {
      std::vector<int> copy(5);
      for (int l = -2; l <= 2; ++l) copy[l + 2] = w(a * (3 * i + l));
      copies.push_back(std::move(copy));
      designated.emplace_back(w(a * (3 * i + 1)), w(a * (3 * i + 2)));
    }
    if (j + 1 == q) break;
    long long b = A.elements[j + 1];
    VertexPair from(w(a * (3 * tau0 + 1)), w(a * (3 * tau0 + 2)));  // f^j_{tau0}
    VertexPair to(w(b), w(2 * b));                                  // f^{j+1}_0
    if (from.u == to.u || from.u == to.v || from.v == to.u || from.v == to.v)
      throw ConstructionError("dilation assembly: linking edges share a vertex (set not linkable)");
    int u1 = fresh, u2 = fresh + 1, u3 = fresh + 2, u4 = fresh + 3, u5 = fresh + 4, u6 = fresh + 5,
        u7 = fresh + 6;
    fresh += 7;
    copies.push_back({from.u, from.v, u1, u2, u3});
    designated.emplace_back(u2, u3);
    copies.push_back({u2, u3, u4, u5, u6});
    designated.emplace_back(u5, u6);
    copies.push_back({u5, u6, u7, to.u, to.v});
    designated.emplace_back(to.u, to.v);
  }
  return make_chain(std::move(k5), ambient, std::move(copies), std::move(designated));
}

// Pairs {a1, a2} usable by the assembly, ascending.
inline std::vector<std::pair<long long, long long>> dilation_pair_candidates(long long p, int c) {
  std::vector<std::pair<long long, long long>> out;
  for (long long a1 = 1; a1 < p; ++a1)
    for (long long a2 = a1 + 1; a2 < p; ++a2)
      if (detail::dilation_pair_clean(p, c, a1, a2)) out.emplace_back(a1, a2);
  return out;
}

// ---------------------------------------------------------------------------
// Ladder K6-chains: triangle tracks on a left and a right side, one simple
// chain per slope, linked in slope order. Slopes in arithmetic progression of
// difference 4 keep unwanted K6-minus-an-edge copies away; the analyzer, not
// this builder, certifies that.

inline std::vector<int> ladder_default_slopes(int count) {
  std::vector<int> slopes;
  for (int i = 0; i < count; ++i) slopes.push_back(4 * i);
  return slopes;
}

inline Chain ladder_k6_chain(int segment_length, const std::vector<int>& slopes) {
  if (segment_length < 1) throw InputError("ladder chain: segment length >= 1 required");
  if (slopes.empty()) throw InputError("ladder chain: at least one slope required");
  for (std::size_t i = 1; i < slopes.size(); ++i)
    if (slopes[i] <= slopes[i - 1]) throw InputError("ladder chain: slopes must be strictly increasing");
  if (slopes[0] < 0) throw InputError("ladder chain: slopes must be non-negative");
  int tau0 = segment_length;
  int amax = slopes.back();
  int left_count = 2 * tau0 + 1;
  int right_count = 2 * (tau0 + amax) + 1;
  int q = static_cast<int>(slopes.size());
  int ambient = left_count + right_count + 10 * (q - 1);
  auto left = [&](int pos) { return pos - 1; };                      // 1-based track position
  auto right = [&](int pos) { return left_count + pos - 1; };
  InfectionRule k6(clique_graph(6), "clique 6");
  std::vector<std::vector<int>> copies;
  std::vector<VertexPair> designated;
  int fresh = left_count + right_count;
  for (int j = 0; j < q; ++j) {
    int a = slopes[j];
    for (int i = 1; i <= tau0; ++i) {
      copies.push_back({left(2 * i - 1), left(2 * i), left(2 * i + 1), right(2 * (i + a) - 1),
                        right(2 * (i + a)), right(2 * (i + a) + 1)});
      if (i < tau0)
        designated.emplace_back(left(2 * i + 1), right(2 * (i + a) + 1));
      else
        designated.emplace_back(left(2 * tau0), right(2 * (tau0 + a)));
    }
    if (j + 1 == q) break;
    int b = slopes[j + 1];
    VertexPair from(left(2 * tau0), right(2 * (tau0 + a)));  // final designated edge of this slope
    VertexPair to(left(1), right(2 * b + 1));                // head edge of the next slope's first copy
    int y1 = fresh, y2 = fresh + 1, y3 = fresh + 2, y4 = fresh + 3, y5 = fresh + 4, y6 = fresh + 5,
        y7 = fresh + 6, y8 = fresh + 7, y9 = fresh + 8, y10 = fresh + 9;
    fresh += 10;
    copies.push_back({from.u, from.v, y1, y2, y3, y4});
    designated.emplace_back(y3, y4);
    copies.push_back({y3, y4, y5, y6, y7, y8});
    designated.emplace_back(y7, y8);
    copies.push_back({y7, y8, y9, y10, to.u, to.v});
    designated.emplace_back(to.u, to.v);
  }
  return make_chain(std::move(k6), ambient, std::move(copies), std::move(designated));
}

// ---------------------------------------------------------------------------
// Cheap percolating graphs: a clique on v(H)-1 vertices, every other vertex
// attached to delta(H)-1 clique vertices.

inline Graph cheap_percolator(const InfectionRule& rule, int n) {
  int k = rule.vertex_count();
  if (n < k) throw InputError("cheap percolator: n >= v(H) required");
  int w = k - 1;
  int attach = std::max(0, rule.min_degree() - 1);
  Graph g(n);
  for (int u = 0; u < w; ++u)
    for (int v = u + 1; v < w; ++v) g.add_edge(u, v);
  for (int x = w; x < n; ++x)
    for (int t = 0; t < attach; ++t) g.add_edge(x, t);
  return g;
}

// ---------------------------------------------------------------------------
// Random bipartite graphs with all right-side degrees d and girth > k,
// deterministic given the seed. Right side has exactly ny vertices; the
// standard builder uses ny = 2kn.

inline Graph high_girth_bipartite_sized(int nx, int ny, int k, int d, uint64_t seed) {
  if (d > nx) throw InputError("high girth bipartite: degree exceeds left side");
  Graph g(nx + ny);
  SplitMix64 rng(seed);
  const int retries = 400;
  for (int y = 0; y < ny; ++y) {
    int yv = nx + y;
    bool placed = false;
    for (int attempt = 0; attempt < retries && !placed; ++attempt) {
      std::vector<int> picks;
      while (static_cast<int>(picks.size()) < d) {
        int x = static_cast<int>(rng.next_below(nx));
        if (std::find(picks.begin(), picks.end(), x) == picks.end()) picks.push_back(x);
      }
      // adding yv with these neighbours must not close a cycle of length <= k:
      // any two picks must be at distance >= k-1 in the current graph
      bool ok = true;
      for (std::size_t i = 0; i < picks.size() && ok; ++i) {
        auto dist = g.bfs_distances(picks[i]);
        for (std::size_t j = i + 1; j < picks.size() && ok; ++j)
          if (dist[picks[j]] != -1 && dist[picks[j]] <= k - 2) ok = false;
      }
      if (!ok) continue;
      for (int x : picks) g.add_edge(yv, x);
      placed = true;
    }
    if (!placed)
      throw ConstructionError("high girth bipartite: placement failed after retries; increase n");
  }
  return g;
}

inline Graph high_girth_bipartite(int n, int k, int d, uint64_t seed) {
  return high_girth_bipartite_sized(n, 2 * k * n, k, d, seed);
}

// ---------------------------------------------------------------------------
// Special rules of the running-time zoo.

// The 16-vertex pendant-simulation rule and its start builder: the start is
// g together with a disjoint K9 whose first vertex is joined to all of g.
inline std::pair<InfectionRule, std::function<Graph(const Graph&)>> pendant_simulation_rule() {
  InfectionRule rule(pendant_simulation_graph(), "pendant-simulation");
  auto start_builder = [](const Graph& g) {
    int n = g.vertex_count();
    Graph out = g.disjoint_union(Graph::complete(9));
    for (int v = 0; v < n; ++v) out.add_edge(n, v);
    return out;
  };
  return {std::move(rule), start_builder};
}

inline InfectionRule glued_cliques_rule(int k) {
  return InfectionRule(glued_cliques_graph(k), "glued-cliques " + std::to_string(k));
}

}  // namespace bootlab
