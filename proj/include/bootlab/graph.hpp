#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "bootlab/util.hpp"

namespace bootlab {

struct VertexPair {
  int u = 0;
  int v = 0;

  VertexPair() = default;
  VertexPair(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

// Finite simple undirected graph on vertices [0, n). Dense bitset adjacency,
// one row of ceil(n/64) words per vertex; neighborhood intersection is the
// hot loop of the embedding search.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {
    if (n < 0) throw InputError("graph: negative vertex count");
  }

  static Graph from_edges(int n, std::span<const VertexPair> edges) {
    Graph g(n);
    for (const auto& e : edges) g.add_edge(e.u, e.v);
    return g;
  }

  static Graph from_edges(int n, std::initializer_list<VertexPair> edges) {
    return from_edges(n, std::span<const VertexPair>(edges.begin(), edges.size()));
  }

  static Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
  }

  int vertex_count() const { return n_; }
  int row_words() const { return words_; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return (row(u)[v >> 6] >> (v & 63)) & 1u;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("graph: loop at vertex " + std::to_string(u));
    mut_row(u)[v >> 6] |= uint64_t{1} << (v & 63);
    mut_row(v)[u >> 6] |= uint64_t{1} << (u & 63);
  }

  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return;
    mut_row(u)[v >> 6] &= ~(uint64_t{1} << (v & 63));
    mut_row(v)[u >> 6] &= ~(uint64_t{1} << (u & 63));
  }

  const uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }

  int degree(int v) const {
    check_vertex(v);
    const uint64_t* r = row(v);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
  }

  int edge_count() const {
    long long total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return static_cast<int>(total / 2);
  }

  std::vector<VertexPair> edges() const {
    std::vector<VertexPair> out;
    for (int u = 0; u < n_; ++u)
      for_each_neighbor(u, [&](int v) {
        if (v > u) out.emplace_back(u, v);
      });
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<VertexPair> non_edges() const {
    std::vector<VertexPair> out;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (!has_edge(u, v)) out.emplace_back(u, v);
    return out;
  }

  template <typename F>
  void for_each_neighbor(int u, F&& f) const {
    const uint64_t* r = row(u);
    for (int w = 0; w < words_; ++w) {
      uint64_t bits = r[w];
      while (bits) {
        int b = std::countr_zero(bits);
        f(w * 64 + b);
        bits &= bits - 1;
      }
    }
  }

  std::vector<int> neighbors(int u) const {
    std::vector<int> out;
    for_each_neighbor(u, [&](int v) { out.push_back(v); });
    return out;
  }

  bool is_complete() const {
    for (int v = 0; v < n_; ++v)
      if (degree(v) != n_ - 1) return false;
    return true;
  }

  Graph permuted(std::span<const int> perm) const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
      for_each_neighbor(u, [&](int v) {
        if (v > u) g.add_edge(perm[u], perm[v]);
      });
    return g;
  }

  // Union on a shared vertex set (sizes must match).
  Graph union_with(const Graph& other) const {
    if (other.n_ != n_) throw InputError("graph union: vertex count mismatch");
    Graph g = *this;
    for (std::size_t i = 0; i < bits_.size(); ++i) g.bits_[i] |= other.bits_[i];
    return g;
  }

  Graph disjoint_union(const Graph& other) const {
    Graph g(n_ + other.n_);
    for (const auto& e : edges()) g.add_edge(e.u, e.v);
    for (const auto& e : other.edges()) g.add_edge(e.u + n_, e.v + n_);
    return g;
  }

  bool contains_subgraph_edges(const Graph& other) const {
    if (other.n_ != n_) return false;
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (other.bits_[i] & ~bits_[i]) return false;
    return true;
  }

  // BFS distances from a set of sources; -1 means unreachable.
  std::vector<int> bfs_distances(std::span<const int> sources) const {
    std::vector<int> dist(n_, -1);
    std::queue<int> q;
    for (int s : sources) {
      if (dist[s] == -1) {
        dist[s] = 0;
        q.push(s);
      }
    }
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for_each_neighbor(u, [&](int v) {
        if (dist[v] == -1) {
          dist[v] = dist[u] + 1;
          q.push(v);
        }
      });
    }
    return dist;
  }

  std::vector<int> bfs_distances(int source) const {
    int s[1] = {source};
    return bfs_distances(std::span<const int>(s, 1));
  }

  std::vector<int> component_ids() const {
    std::vector<int> comp(n_, -1);
    int next = 0;
    for (int v = 0; v < n_; ++v) {
      if (comp[v] != -1) continue;
      comp[v] = next;
      std::queue<int> q;
      q.push(v);
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        for_each_neighbor(u, [&](int w) {
          if (comp[w] == -1) {
            comp[w] = next;
            q.push(w);
          }
        });
      }
      ++next;
    }
    return comp;
  }

  bool is_connected() const {
    if (n_ <= 1) return true;
    auto comp = component_ids();
    return *std::max_element(comp.begin(), comp.end()) == 0;
  }

  // Diameter of the graph; -1 if disconnected, 0 for <= 1 vertex.
  int diameter() const {
    if (n_ <= 1) return 0;
    int diam = 0;
    for (int v = 0; v < n_; ++v) {
      auto dist = bfs_distances(v);
      for (int d : dist) {
        if (d == -1) return -1;
        diam = std::max(diam, d);
      }
    }
    return diam;
  }

  friend bool operator==(const Graph& a, const Graph& b) = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw InputError("graph: vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
  }

  uint64_t* mut_row(int v) { return bits_.data() + static_cast<std::size_t>(v) * words_; }

  int n_ = 0;
  int words_ = 0;
  std::vector<uint64_t> bits_;
};

inline Graph build_graph(int vertex_count, std::span<const VertexPair> edges) {
  Graph g(vertex_count);
  for (const auto& e : edges) g.add_edge(e.u, e.v);  // duplicates collapse in the bitmap
  return g;
}

// Length of the shortest cycle; nullopt for forests. BFS from every vertex,
// closing edge detected between distinct branches.
inline std::optional<int> girth(const Graph& g) {
  int n = g.vertex_count();
  int best = -1;
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      bool done = false;
      g.for_each_neighbor(u, [&](int v) {
        if (done) return;
        if (dist[v] == -1) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push(v);
        } else if (v != parent[u]) {
          // cycle through s (or shorter elsewhere); length bound is exact over all s
          int len = dist[u] + dist[v] + 1;
          if (best == -1 || len < best) best = len;
          if (best == 3) done = true;
        }
      });
      if (best == 3) return 3;
    }
  }
  if (best == -1) return std::nullopt;
  return best;
}

}  // namespace bootlab
