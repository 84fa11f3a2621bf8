#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "bootlab/graph.hpp"

namespace bootlab {

// Injective map pattern vertex -> host vertex; every pattern edge lands on a
// host edge (non-induced subgraph semantics).
struct Embedding {
  std::vector<int> map;

  bool valid_for(const Graph& pattern, const Graph& host) const {
    int vp = pattern.vertex_count();
    if (static_cast<int>(map.size()) != vp) return false;
    std::vector<char> seen(host.vertex_count(), 0);
    for (int v : map) {
      if (v < 0 || v >= host.vertex_count() || seen[v]) return false;
      seen[v] = 1;
    }
    for (const auto& e : pattern.edges())
      if (!host.has_edge(map[e.u], map[e.v])) return false;
    return true;
  }
};

// Assignment order for the backtracking search, reusable across hosts.
// Anchored plans fix the two anchor vertices first; the rest are ordered by
// (most already-placed neighbours, degree, index) so pruning bites early.
struct MatchPlan {
  std::vector<int> order;
  std::vector<std::vector<int>> earlier_nbrs;  // per position: pattern vertices already placed and adjacent
  std::vector<int> pattern_degree;
  int anchor_a = -1;
  int anchor_b = -1;
  bool anchor_is_edge = false;
};

inline MatchPlan make_match_plan(const Graph& pattern, std::optional<VertexPair> anchor = std::nullopt) {
  int vp = pattern.vertex_count();
  MatchPlan plan;
  plan.pattern_degree.resize(vp);
  for (int v = 0; v < vp; ++v) plan.pattern_degree[v] = pattern.degree(v);
  std::vector<char> chosen(vp, 0);
  if (anchor) {
    if (anchor->u == anchor->v) throw InputError("anchor: degenerate pattern pair");
    plan.anchor_a = anchor->u;
    plan.anchor_b = anchor->v;
    plan.anchor_is_edge = pattern.has_edge(anchor->u, anchor->v);
    plan.order.push_back(anchor->u);
    plan.order.push_back(anchor->v);
    chosen[anchor->u] = chosen[anchor->v] = 1;
  }
  while (static_cast<int>(plan.order.size()) < vp) {
    int best = -1, best_conn = -1, best_deg = -1;
    for (int v = 0; v < vp; ++v) {
      if (chosen[v]) continue;
      int conn = 0;
      pattern.for_each_neighbor(v, [&](int w) { conn += chosen[w]; });
      if (conn > best_conn || (conn == best_conn && plan.pattern_degree[v] > best_deg)) {
        best = v;
        best_conn = conn;
        best_deg = plan.pattern_degree[v];
      }
    }
    plan.order.push_back(best);
    chosen[best] = 1;
  }
  plan.earlier_nbrs.resize(vp);
  std::vector<char> placed(vp, 0);
  for (int i = 0; i < vp; ++i) {
    int v = plan.order[i];
    pattern.for_each_neighbor(v, [&](int w) {
      if (placed[w]) plan.earlier_nbrs[i].push_back(w);
    });
    placed[v] = 1;
  }
  return plan;
}

namespace detail {

// Core backtracking over plan positions. Visitor gets the full pattern->host
// map and returns false to stop the enumeration.
template <typename Visitor>
bool match_recurse(const Graph& pattern, const Graph& host, const MatchPlan& plan, int depth,
                   std::vector<int>& pmap, std::vector<uint64_t>& used, std::vector<uint64_t>& scratch,
                   Visitor&& visit) {
  int vp = pattern.vertex_count();
  if (depth == vp) return visit(std::span<const int>(pmap.data(), pmap.size()));
  int words = host.row_words();
  int p = plan.order[depth];
  uint64_t* cand = scratch.data() + static_cast<std::size_t>(depth) * words;
  const auto& nbrs = plan.earlier_nbrs[depth];
  if (nbrs.empty()) {
    for (int w = 0; w < words; ++w) cand[w] = ~used[w];
    int hn = host.vertex_count();
    if (hn & 63) cand[words - 1] &= (uint64_t{1} << (hn & 63)) - 1;
  } else {
    const uint64_t* first = host.row(pmap[nbrs[0]]);
    for (int w = 0; w < words; ++w) cand[w] = first[w] & ~used[w];
    for (std::size_t i = 1; i < nbrs.size(); ++i) {
      const uint64_t* r = host.row(pmap[nbrs[i]]);
      for (int w = 0; w < words; ++w) cand[w] &= r[w];
    }
  }
  int pdeg = plan.pattern_degree[p];
  for (int w = 0; w < words; ++w) {
    uint64_t bits = cand[w];
    while (bits) {
      int b = std::countr_zero(bits);
      bits &= bits - 1;
      int h = w * 64 + b;
      if (host.degree(h) < pdeg) continue;
      pmap[p] = h;
      used[w] |= uint64_t{1} << b;
      bool go_on = match_recurse(pattern, host, plan, depth + 1, pmap, used, scratch,
                                 std::forward<Visitor>(visit));
      used[w] &= ~(uint64_t{1} << b);
      pmap[p] = -1;
      if (!go_on) return false;
    }
  }
  return true;
}

template <typename Visitor>
bool match_run(const Graph& pattern, const Graph& host, const MatchPlan& plan,
               std::optional<VertexPair> host_pair, Visitor&& visit) {
  int vp = pattern.vertex_count();
  int vh = host.vertex_count();
  if (vp > vh) return true;
  std::vector<int> pmap(vp, -1);
  std::vector<uint64_t> used(host.row_words(), 0);
  std::vector<uint64_t> scratch(static_cast<std::size_t>(vp) * host.row_words());
  if (plan.anchor_a < 0) {
    return match_recurse(pattern, host, plan, 0, pmap, used, scratch, std::forward<Visitor>(visit));
  }
  if (!host_pair) throw InputError("anchored match plan requires a host pair");
  int hx = host_pair->u, hy = host_pair->v;
  if (plan.anchor_is_edge && !host.has_edge(hx, hy)) return true;
  const int orients[2][2] = {{hx, hy}, {hy, hx}};
  for (const auto& o : orients) {
    int ia = o[0], ib = o[1];
    if (host.degree(ia) < plan.pattern_degree[plan.anchor_a]) continue;
    if (host.degree(ib) < plan.pattern_degree[plan.anchor_b]) continue;
    pmap[plan.anchor_a] = ia;
    pmap[plan.anchor_b] = ib;
    used[ia >> 6] |= uint64_t{1} << (ia & 63);
    used[ib >> 6] |= uint64_t{1} << (ib & 63);
    bool go_on = match_recurse(pattern, host, plan, 2, pmap, used, scratch, std::forward<Visitor>(visit));
    used[ia >> 6] &= ~(uint64_t{1} << (ia & 63));
    used[ib >> 6] &= ~(uint64_t{1} << (ib & 63));
    pmap[plan.anchor_a] = pmap[plan.anchor_b] = -1;
    if (!go_on) return false;
  }
  return true;
}

}  // namespace detail

// Enumerate embeddings; visitor returns false to stop. Returns true if the
// enumeration ran to completion.
template <typename Visitor>
bool for_each_embedding(const Graph& pattern, const Graph& host, const MatchPlan& plan,
                        std::optional<VertexPair> host_pair, Visitor&& visit) {
  return detail::match_run(pattern, host, plan, host_pair, std::forward<Visitor>(visit));
}

inline bool exists_embedding(const Graph& pattern, const Graph& host, const MatchPlan& plan,
                             std::optional<VertexPair> host_pair = std::nullopt) {
  return !detail::match_run(pattern, host, plan, host_pair, [](std::span<const int>) { return false; });
}

struct EmbedAnchor {
  VertexPair pattern_pair;  // edge or non-adjacent pair of the pattern
  VertexPair host_pair;
};

inline std::optional<Embedding> find_embedding(const Graph& pattern, const Graph& host,
                                               std::optional<EmbedAnchor> anchor = std::nullopt) {
  MatchPlan plan = anchor ? make_match_plan(pattern, anchor->pattern_pair) : make_match_plan(pattern);
  std::optional<Embedding> out;
  detail::match_run(pattern, host, plan,
                    anchor ? std::optional<VertexPair>(anchor->host_pair) : std::nullopt,
                    [&](std::span<const int> m) {
                      out = Embedding{std::vector<int>(m.begin(), m.end())};
                      return false;
                    });
  return out;
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  // injective + all vertices used + equal edge counts => bijective on edges
  return find_embedding(a, b).has_value();
}

inline long long count_automorphisms(const Graph& g) {
  MatchPlan plan = make_match_plan(g);
  long long count = 0;
  for_each_embedding(g, g, plan, std::nullopt, [&](std::span<const int>) {
    ++count;
    return true;
  });
  return count;
}

}  // namespace bootlab
