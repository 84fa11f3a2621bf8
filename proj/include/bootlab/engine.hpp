#pragma once

#include <algorithm>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bootlab/graph.hpp"
#include "bootlab/rule.hpp"

namespace bootlab {

// Full round-by-round record of an H-process.
struct ProcessTrace {
  Graph start;
  std::vector<std::vector<VertexPair>> rounds;  // newly infected per round, lex sorted
  int tau = 0;
  Graph final_graph;
  bool percolated = false;
  bool truncated = false;
  std::string rule_name;
};

namespace detail {

// One anchored infection test: does g + e contain a copy of the rule using e?
// Every new copy must use e, so testing orbit representatives onto e is exact.
inline bool edge_completes_copy(Graph& scratch, const InfectionRule& rule, VertexPair e) {
  scratch.add_edge(e.u, e.v);
  bool hit = false;
  const auto& plans = rule.rep_plans();
  const auto& commons = rule.rep_common_neighbors();
  for (std::size_t r = 0; r < plans.size() && !hit; ++r) {
    if (commons[r] > 0) {
      const uint64_t* ru = scratch.row(e.u);
      const uint64_t* rv = scratch.row(e.v);
      int cn = 0;
      for (int w = 0; w < scratch.row_words(); ++w) cn += std::popcount(ru[w] & rv[w]);
      if (cn < commons[r]) continue;
    }
    hit = exists_embedding(rule.graph(), scratch, plans[r], e);
  }
  scratch.remove_edge(e.u, e.v);
  return hit;
}

}  // namespace detail

// The non-edges of g whose addition completes a new copy of the rule graph.
inline std::vector<VertexPair> infect_step(const Graph& g, const InfectionRule& rule) {
  std::vector<VertexPair> out;
  if (rule.edge_count() == 1) return g.non_edges();  // single-edge rules infect everything at once
  Graph scratch = g;
  for (const auto& e : g.non_edges())
    if (detail::edge_completes_copy(scratch, rule, e)) out.push_back(e);
  return out;
}

inline bool is_stable(const Graph& g, const InfectionRule& rule) { return infect_step(g, rule).empty(); }

struct RunOptions {
  std::optional<long long> max_rounds;  // default C(n,2) - e(g) + 1, which cannot truncate
  bool incremental = true;              // distance-filtered retesting; naive recompute otherwise
  bool keep_rounds = true;              // false: only tau/final/percolated are tracked
};

inline ProcessTrace run_process(const Graph& g, const InfectionRule& rule, RunOptions opt = {}) {
  ProcessTrace trace;
  trace.start = g;
  trace.rule_name = rule.name();
  long long n = g.vertex_count();
  long long max_rounds = opt.max_rounds.value_or(n * (n - 1) / 2 - g.edge_count() + 1);

  Graph current = g;
  std::vector<VertexPair> candidates = g.non_edges();
  std::vector<char> retest(candidates.size(), 1);
  bool single_edge_rule = rule.edge_count() == 1;
  bool filter_active = opt.incremental && rule.connected() && !single_edge_rule;
  int filter_depth = filter_active ? rule.diameter() : 0;

  while (trace.tau < max_rounds) {
    std::vector<VertexPair> newly;
    std::vector<VertexPair> survivors;
    std::vector<char> survivor_retest;
    if (single_edge_rule) {
      newly = candidates;
      candidates.clear();
    } else {
      Graph scratch = current;
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        const auto& e = candidates[i];
        if (!retest[i]) {
          survivors.push_back(e);
          survivor_retest.push_back(0);
          continue;
        }
        if (detail::edge_completes_copy(scratch, rule, e)) {
          newly.push_back(e);
        } else {
          survivors.push_back(e);
          survivor_retest.push_back(0);
        }
      }
      candidates = std::move(survivors);
      retest = std::move(survivor_retest);
    }
    if (newly.empty()) break;
    for (const auto& e : newly) current.add_edge(e.u, e.v);
    ++trace.tau;
    if (opt.keep_rounds) trace.rounds.push_back(newly);
    if (candidates.empty()) continue;
    if (!filter_active) {
      std::fill(retest.begin(), retest.end(), 1);
      continue;
    }
    // A new copy through a failed candidate must contain a round-i edge; in
    // the graph-plus-candidate both endpoints are within diam(H) of it. With
    // d(x) = distance to the nearest new endpoint in the updated graph, the
    // sound retest set is d(u) <= D-1 or d(v) <= D-1 or both <= D.
    std::vector<int> sources;
    sources.reserve(newly.size() * 2);
    for (const auto& e : newly) {
      sources.push_back(e.u);
      sources.push_back(e.v);
    }
    auto dist = current.bfs_distances(std::span<const int>(sources.data(), sources.size()));
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      int du = dist[candidates[i].u];
      int dv = dist[candidates[i].v];
      if (du < 0) du = std::numeric_limits<int>::max();
      if (dv < 0) dv = std::numeric_limits<int>::max();
      bool near = du <= filter_depth - 1 || dv <= filter_depth - 1 ||
                  (du <= filter_depth && dv <= filter_depth);
      retest[i] = near ? 1 : 0;
    }
  }
  if (trace.tau >= max_rounds && !candidates.empty()) {
    // only a truncation if one more round would still add edges
    Graph scratch = current;
    for (const auto& e : candidates) {
      if (single_edge_rule || detail::edge_completes_copy(scratch, rule, e)) {
        trace.truncated = true;
        break;
      }
    }
  }
  trace.final_graph = current;
  trace.percolated = current.is_complete();
  return trace;
}

// Memory-lean runner for large hosts: no candidate list, full rescan per
// round, optional capture of the first rounds only.
struct StreamRunResult {
  int tau = 0;
  bool percolated = false;
  Graph final_graph;
  std::vector<std::vector<VertexPair>> prefix_rounds;
};

inline StreamRunResult run_process_streaming(const Graph& g, const InfectionRule& rule,
                                             int capture_limit = 0,
                                             std::optional<long long> max_rounds = std::nullopt) {
  StreamRunResult res;
  long long n = g.vertex_count();
  long long bound = max_rounds.value_or(n * (n - 1) / 2 - g.edge_count() + 1);
  Graph current = g;
  bool single_edge_rule = rule.edge_count() == 1;
  while (res.tau < bound) {
    std::vector<VertexPair> newly;
    Graph scratch = current;
    for (int u = 0; u < current.vertex_count(); ++u) {
      const uint64_t* row = current.row(u);
      for (int v = u + 1; v < current.vertex_count(); ++v) {
        if ((row[v >> 6] >> (v & 63)) & 1) continue;
        if (single_edge_rule || detail::edge_completes_copy(scratch, rule, VertexPair(u, v)))
          newly.emplace_back(u, v);
      }
    }
    if (newly.empty()) break;
    for (const auto& e : newly) current.add_edge(e.u, e.v);
    ++res.tau;
    if (res.tau <= capture_limit) res.prefix_rounds.push_back(std::move(newly));
  }
  res.final_graph = std::move(current);
  res.percolated = res.final_graph.is_complete();
  return res;
}

inline bool percolates(const Graph& g, const InfectionRule& rule) {
  RunOptions opt;
  opt.keep_rounds = false;
  return run_process(g, rule, opt).percolated;
}

inline bool self_percolates(const InfectionRule& rule) { return percolates(rule.graph(), rule); }

// ---------------------------------------------------------------------------
// Naive reference stepper: independent representation, no orbit collapsing,
// no incremental filtering. Kept deliberately separate from the optimized
// path so the two can be cross-checked.

namespace naive {

inline bool map_extends(const std::vector<std::vector<char>>& h, const std::vector<std::vector<char>>& host,
                        std::vector<int>& assign, std::vector<char>& used, std::size_t next) {
  if (next == assign.size()) return true;
  if (assign[next] != -1) return map_extends(h, host, assign, used, next + 1);
  int hn = static_cast<int>(host.size());
  for (int cand = 0; cand < hn; ++cand) {
    if (used[cand]) continue;
    bool ok = true;
    for (std::size_t p = 0; p < assign.size() && ok; ++p)
      if (assign[p] != -1 && h[next][p] && !host[cand][assign[p]]) ok = false;
    if (!ok) continue;
    assign[next] = cand;
    used[cand] = 1;
    if (map_extends(h, host, assign, used, next + 1)) {
      assign[next] = -1;
      used[cand] = 0;
      return true;
    }
    assign[next] = -1;
    used[cand] = 0;
  }
  return false;
}

inline std::vector<std::vector<char>> matrix_of(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<char>> m(n, std::vector<char>(n, 0));
  for (const auto& e : g.edges()) m[e.u][e.v] = m[e.v][e.u] = 1;
  return m;
}

inline std::vector<VertexPair> infect_step_naive(const Graph& g, const Graph& rule_graph) {
  auto h = matrix_of(rule_graph);
  int hv = rule_graph.vertex_count();
  auto rule_edges = rule_graph.edges();
  std::vector<VertexPair> out;
  for (const auto& e : g.non_edges()) {
    Graph plus = g;
    plus.add_edge(e.u, e.v);
    auto host = matrix_of(plus);
    bool infected = false;
    for (const auto& f : rule_edges) {
      // try f -> e in both orientations
      for (int orient = 0; orient < 2 && !infected; ++orient) {
        int a = orient == 0 ? f.u : f.v;
        int b = orient == 0 ? f.v : f.u;
        std::vector<int> assign(hv, -1);
        std::vector<char> used(plus.vertex_count(), 0);
        assign[a] = e.u;
        assign[b] = e.v;
        used[e.u] = used[e.v] = 1;
        bool consistent = true;
        for (int p = 0; p < hv && consistent; ++p)
          if (assign[p] != -1)
            for (int q = 0; q < hv; ++q)
              if (assign[q] != -1 && h[p][q] && !host[assign[p]][assign[q]]) consistent = false;
        if (consistent && map_extends(h, host, assign, used, 0)) infected = true;
      }
      if (infected) break;
    }
    if (infected) out.push_back(e);
  }
  return out;
}

inline ProcessTrace run_process_naive(const Graph& g, const Graph& rule_graph, const std::string& rule_name) {
  ProcessTrace trace;
  trace.start = g;
  trace.rule_name = rule_name;
  Graph current = g;
  for (;;) {
    auto newly = infect_step_naive(current, rule_graph);
    if (newly.empty()) break;
    for (const auto& e : newly) current.add_edge(e.u, e.v);
    trace.rounds.push_back(std::move(newly));
    ++trace.tau;
  }
  trace.final_graph = current;
  trace.percolated = current.is_complete();
  return trace;
}

}  // namespace naive

// ---------------------------------------------------------------------------
// Trace document: stable text serialization, rounds in time order, edges lex
// sorted.

inline void write_trace(std::ostream& os, const ProcessTrace& t) {
  os << "bootlab-trace 1\n";
  os << "n " << t.start.vertex_count() << '\n';
  os << "rule " << t.rule_name << '\n';
  auto start_edges = t.start.edges();
  os << "start " << start_edges.size() << '\n';
  for (const auto& e : start_edges) os << e.u << ' ' << e.v << '\n';
  os << "tau " << t.tau << '\n';
  os << "percolated " << (t.percolated ? 1 : 0) << '\n';
  os << "truncated " << (t.truncated ? 1 : 0) << '\n';
  os << "rounds " << t.rounds.size() << '\n';
  for (std::size_t i = 0; i < t.rounds.size(); ++i) {
    os << "round " << (i + 1) << ' ' << t.rounds[i].size() << '\n';
    for (const auto& e : t.rounds[i]) os << e.u << ' ' << e.v << '\n';
  }
}

inline std::string trace_to_string(const ProcessTrace& t) {
  std::ostringstream os;
  write_trace(os, t);
  return os.str();
}

inline ProcessTrace read_trace(std::istream& is) {
  auto expect_key = [&](const std::string& key) {
    std::string k;
    if (!(is >> k) || k != key) throw InputError("trace: expected '" + key + "'");
  };
  std::string magic;
  int version;
  if (!(is >> magic >> version) || magic != "bootlab-trace" || version != 1)
    throw InputError("trace: bad header");
  ProcessTrace t;
  int n, m;
  expect_key("n");
  is >> n;
  expect_key("rule");
  std::getline(is >> std::ws, t.rule_name);
  while (!t.rule_name.empty() && (t.rule_name.back() == '\r' || t.rule_name.back() == ' '))
    t.rule_name.pop_back();
  expect_key("start");
  is >> m;
  t.start = Graph(n);
  for (int i = 0; i < m; ++i) {
    int u, v;
    if (!(is >> u >> v)) throw InputError("trace: truncated start edges");
    t.start.add_edge(u, v);
  }
  expect_key("tau");
  is >> t.tau;
  int flag;
  expect_key("percolated");
  is >> flag;
  t.percolated = flag != 0;
  expect_key("truncated");
  is >> flag;
  t.truncated = flag != 0;
  int rounds;
  expect_key("rounds");
  is >> rounds;
  t.final_graph = t.start;
  for (int r = 0; r < rounds; ++r) {
    expect_key("round");
    int idx, k;
    is >> idx >> k;
    std::vector<VertexPair> round;
    for (int i = 0; i < k; ++i) {
      int u, v;
      if (!(is >> u >> v)) throw InputError("trace: truncated round edges");
      round.emplace_back(u, v);
      t.final_graph.add_edge(u, v);
    }
    t.rounds.push_back(std::move(round));
  }
  return t;
}

}  // namespace bootlab
