#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "bootlab/graph.hpp"

namespace bootlab {

// Upper-triangle adjacency bits of the canonically relabeled graph, packed
// most-significant-bit first so lexicographic vector compare equals bit-string
// compare.
using CanonicalForm = std::vector<uint64_t>;

namespace detail {

inline CanonicalForm pack_form(const Graph& g, const std::vector<int>& label) {
  int n = g.vertex_count();
  long long bits = static_cast<long long>(n) * (n - 1) / 2;
  CanonicalForm form((bits + 63) / 64, 0);
  for (int u = 0; u < n; ++u) {
    g.for_each_neighbor(u, [&](int v) {
      if (v <= u) return;
      int i = std::min(label[u], label[v]);
      int j = std::max(label[u], label[v]);
      long long k = static_cast<long long>(i) * n - static_cast<long long>(i) * (i + 1) / 2 + (j - i - 1);
      form[k >> 6] |= uint64_t{1} << (63 - (k & 63));
    });
  }
  return form;
}

// Order-preserving equitable refinement (1-WL): colors refined by sorted
// neighbour-colour multisets until stable.
inline void refine_colors(const Graph& g, std::vector<int>& color) {
  int n = g.vertex_count();
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> nb;
      g.for_each_neighbor(v, [&](int w) { nb.push_back(color[w]); });
      std::sort(nb.begin(), nb.end());
      nb.insert(nb.begin(), color[v]);
      sig[v] = {std::move(nb), v};
    }
    std::vector<int> idx(n);
    for (int v = 0; v < n; ++v) idx[v] = v;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return sig[a].first < sig[b].first; });
    std::vector<int> next(n);
    int c = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[idx[i]].first != sig[idx[i - 1]].first) ++c;
      next[idx[i]] = c;
    }
    if (next == color) return;
    color = std::move(next);
  }
}

struct CanonSearch {
  const Graph& g;
  CanonicalForm best;
  std::vector<int> best_label;
  bool have_best = false;

  explicit CanonSearch(const Graph& graph) : g(graph) {}

  void run(std::vector<int> color) {
    refine_colors(g, color);
    int n = g.vertex_count();
    // first non-singleton colour class, by colour order
    int target_color = -1;
    std::vector<int> members;
    for (int c = 0; c < n && target_color == -1; ++c) {
      members.clear();
      for (int v = 0; v < n; ++v)
        if (color[v] == c) members.push_back(v);
      if (members.size() > 1) target_color = c;
    }
    if (target_color == -1) {
      std::vector<int> label(n);
      for (int v = 0; v < n; ++v) label[v] = color[v];
      CanonicalForm form = pack_form(g, label);
      if (!have_best || form < best) {
        best = std::move(form);
        best_label = std::move(label);
        have_best = true;
      }
      return;
    }
    for (int v : members) {
      std::vector<int> split(n);
      for (int u = 0; u < n; ++u) {
        split[u] = 2 * color[u];
        if (color[u] == target_color && u != v) split[u] += 1;
      }
      run(std::move(split));
    }
  }
};

}  // namespace detail

// original vertex -> canonical position
inline std::vector<int> canonical_labeling(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return {};
  detail::CanonSearch search(g);
  search.run(std::vector<int>(n, 0));
  return search.best_label;
}

inline CanonicalForm canonical_form(const Graph& g) {
  if (g.vertex_count() == 0) return {};
  return detail::pack_form(g, canonical_labeling(g));
}

inline Graph canonicalized(const Graph& g) {
  auto label = canonical_labeling(g);
  return g.permuted(label);
}

inline std::vector<int> identity_labels(int n) {
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  return id;
}

// One representative per isomorphism class of simple graphs on n vertices,
// grown by vertex augmentation with canonical-form rejection. Deterministic:
// output sorted by (edge count, canonical form), each graph canonically
// labeled.
inline std::vector<Graph> enumerate_nonisomorphic(int n) {
  if (n < 1 || n > 8) throw InputError("enumerate_nonisomorphic: n must be in [1,8]");
  std::vector<Graph> current = {Graph(1)};
  for (int k = 1; k < n; ++k) {
    std::set<CanonicalForm> seen;
    std::vector<Graph> next;
    for (const Graph& g : current) {
      for (uint32_t mask = 0; mask < (uint32_t{1} << k); ++mask) {
        Graph h(k + 1);
        for (const auto& e : g.edges()) h.add_edge(e.u, e.v);
        for (int v = 0; v < k; ++v)
          if ((mask >> v) & 1) h.add_edge(v, k);
        auto label = canonical_labeling(h);
        auto form = detail::pack_form(h, label);
        if (seen.insert(form).second) next.push_back(h.permuted(label));
      }
    }
    current = std::move(next);
  }
  std::vector<std::pair<std::pair<int, CanonicalForm>, std::size_t>> keyed;
  keyed.reserve(current.size());
  for (std::size_t i = 0; i < current.size(); ++i)
    keyed.push_back({{current[i].edge_count(), detail::pack_form(current[i], identity_labels(current[i].vertex_count()))}, i});
  std::sort(keyed.begin(), keyed.end());
  std::vector<Graph> out;
  out.reserve(current.size());
  for (const auto& [key, i] : keyed) out.push_back(std::move(current[i]));
  return out;
}

}  // namespace bootlab
