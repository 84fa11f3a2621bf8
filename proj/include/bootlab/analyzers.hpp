#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bootlab/chain.hpp"
#include "bootlab/engine.hpp"
#include "bootlab/enumerate.hpp"
#include "bootlab/graph.hpp"
#include "bootlab/graph6.hpp"
#include "bootlab/util.hpp"

namespace bootlab {

// ---------------------------------------------------------------------------
// (l,1)-inseparability: no deletion of at most l vertices plus at most one
// edge disconnects the graph. Isolated vertices after deletion count as a
// disconnection. Exhaustive over vertex subsets and edges.

namespace detail {

inline bool disconnected_after(const Graph& g, const std::vector<int>& removed_vertices,
                               std::optional<VertexPair> removed_edge) {
  int n = g.vertex_count();
  std::vector<char> gone(n, 0);
  for (int v : removed_vertices) gone[v] = 1;
  std::vector<int> keep;
  for (int v = 0; v < n; ++v)
    if (!gone[v]) keep.push_back(v);
  if (keep.size() < 2) return false;
  std::vector<int> comp(n, -1);
  int comps = 0;
  for (int s : keep) {
    if (comp[s] != -1) continue;
    ++comps;
    if (comps > 1) return true;
    std::vector<int> stack = {s};
    comp[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      g.for_each_neighbor(u, [&](int w) {
        if (gone[w] || comp[w] != -1) return;
        if (removed_edge && VertexPair(u, w) == *removed_edge) return;
        comp[w] = 1;
        stack.push_back(w);
      });
    }
  }
  return comps > 1;
}

template <typename F>
void for_each_subset_up_to(int n, int k, F&& f) {
  std::vector<int> subset;
  std::function<void(int)> rec = [&](int start) {
    f(subset);
    if (static_cast<int>(subset.size()) == k) return;
    for (int v = start; v < n; ++v) {
      subset.push_back(v);
      rec(v + 1);
      subset.pop_back();
    }
  };
  rec(0);
}

}  // namespace detail

inline bool is_l1_inseparable(const Graph& h, int l) {
  if (h.edge_count() == 0) throw InputError("inseparability: graph needs an edge");
  bool separable = false;
  auto edges = h.edges();
  detail::for_each_subset_up_to(h.vertex_count(), l, [&](const std::vector<int>& removed) {
    if (separable) return;
    if (detail::disconnected_after(h, removed, std::nullopt)) {
      separable = true;
      return;
    }
    for (const auto& e : edges) {
      if (std::find(removed.begin(), removed.end(), e.u) != removed.end()) continue;
      if (std::find(removed.begin(), removed.end(), e.v) != removed.end()) continue;
      if (detail::disconnected_after(h, removed, e)) {
        separable = true;
        return;
      }
    }
  });
  return !separable;
}

// ---------------------------------------------------------------------------
// Behrendian: every non-monochromatic edge colouring admits a
// non-monochromatic cycle that is the union of two or three monochromatic
// paths. Decided by enumerating edge-set partitions when e(f) <= edge_cap.

enum class Ternary { yes, no, unknown };

struct BehrendianReport {
  Ternary verdict = Ternary::unknown;
  std::vector<int> counterexample_colouring;  // block id per edge (edges() order), on "no"
};

inline BehrendianReport is_behrendian(const Graph& f, int edge_cap = 10) {
  BehrendianReport report;
  auto edges = f.edges();
  int m = static_cast<int>(edges.size());
  if (m > edge_cap) {
    report.verdict = Ternary::unknown;
    return report;
  }
  if (m < 2) {  // no non-monochromatic colouring exists; vacuously Behrendian
    report.verdict = Ternary::yes;
    return report;
  }
  // all cycles as cyclic edge-index sequences (edge subsets with all degrees
  // two and connected)
  std::vector<std::vector<int>> cycles;
  for (uint32_t mask = 1; mask < (uint32_t{1} << m); ++mask) {
    std::map<int, std::vector<int>> inc;  // vertex -> incident chosen edge ids
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      if (!((mask >> i) & 1)) continue;
      inc[edges[i].u].push_back(i);
      inc[edges[i].v].push_back(i);
      if (inc[edges[i].u].size() > 2 || inc[edges[i].v].size() > 2) ok = false;
    }
    if (!ok || inc.empty()) continue;
    for (const auto& [v, ids] : inc)
      if (ids.size() != 2) ok = false;
    if (!ok) continue;
    // walk the cycle; must be a single closed walk covering all chosen edges
    std::vector<int> order;
    int start_v = inc.begin()->first;
    int cur_v = start_v;
    int cur_e = inc.begin()->second[0];
    std::set<int> used;
    for (;;) {
      order.push_back(cur_e);
      used.insert(cur_e);
      int next_v = edges[cur_e].u == cur_v ? edges[cur_e].v : edges[cur_e].u;
      if (next_v == start_v) break;
      const auto& ids = inc[next_v];
      cur_e = ids[0] == cur_e ? ids[1] : ids[0];
      cur_v = next_v;
    }
    if (static_cast<int>(used.size()) == std::popcount(mask)) cycles.push_back(order);
  }
  // partitions of edges via restricted growth strings, skipping the
  // monochromatic one
  std::vector<int> block(m, 0);
  std::function<bool(int, int)> rec = [&](int i, int max_block) -> bool {
    if (i == m) {
      if (max_block == 0) return true;  // monochromatic: not a relevant colouring
      for (const auto& cycle : cycles) {
        int arcs = 0;
        int len = static_cast<int>(cycle.size());
        for (int j = 0; j < len; ++j)
          if (block[cycle[j]] != block[cycle[(j + 1) % len]]) ++arcs;
        if (arcs >= 2 && arcs <= 3) return true;
      }
      report.counterexample_colouring = block;
      return false;
    }
    for (int b = 0; b <= max_block + 1 && b < m; ++b) {
      block[i] = b;
      if (!rec(i + 1, std::max(max_block, b))) return false;
    }
    return true;
  };
  report.verdict = rec(1, 0) ? Ternary::yes : Ternary::no;
  return report;
}

// ---------------------------------------------------------------------------
// Chain conditions that make a replay round-exact: restrictions on pairwise
// copy intersections and the no-spanning-copy condition.

enum class ChainCondition { dagger, dagger_prime, star };

inline std::string condition_name(ChainCondition c) {
  switch (c) {
    case ChainCondition::dagger: return "dagger";
    case ChainCondition::dagger_prime: return "dagger-prime";
    case ChainCondition::star: return "star";
  }
  return "?";
}

struct ChainReport {
  struct Result {
    ChainCondition condition;
    bool pass = false;
    std::optional<std::pair<int, int>> offending_copies;              // 1-based, for dagger variants
    std::optional<std::vector<VertexPair>> spanning_copy;             // for star
    std::string detail;
  };
  std::vector<Result> results;

  bool all_pass() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }

  std::string to_string() const {
    std::ostringstream os;
    for (const auto& r : results) {
      os << condition_name(r.condition) << ' ' << (r.pass ? "pass" : "FAIL");
      if (!r.detail.empty()) os << " (" << r.detail << ")";
      os << '\n';
    }
    return os.str();
  }
};

inline ChainReport verify_chain_conditions(const Chain& chain, const std::set<ChainCondition>& which) {
  ChainReport report;
  int tau = chain.length();
  std::vector<std::vector<VertexPair>> copy_edges(tau);
  for (int i = 0; i < tau; ++i) copy_edges[i] = chain.copy_edges(i);

  if (which.count(ChainCondition::dagger)) {
    ChainReport::Result r{ChainCondition::dagger, true, std::nullopt, std::nullopt, ""};
    for (int i = 0; i < tau && r.pass; ++i) {
      for (int j = i + 1; j < tau && r.pass; ++j) {
        std::vector<VertexPair> inter;
        std::set_intersection(copy_edges[i].begin(), copy_edges[i].end(), copy_edges[j].begin(),
                              copy_edges[j].end(), std::back_inserter(inter));
        bool ok = j == i + 1 ? (inter.size() == 1 && inter[0] == chain.designated[i]) : inter.empty();
        if (!ok) {
          r.pass = false;
          r.offending_copies = {i + 1, j + 1};
          r.detail = "copies " + std::to_string(i + 1) + "," + std::to_string(j + 1) + " share " +
                     std::to_string(inter.size()) + " edge(s)";
        }
      }
    }
    report.results.push_back(std::move(r));
  }

  if (which.count(ChainCondition::dagger_prime)) {
    ChainReport::Result r{ChainCondition::dagger_prime, true, std::nullopt, std::nullopt, ""};
    for (int i = 0; i < tau && r.pass; ++i) {
      for (int j = i + 1; j < tau && r.pass; ++j) {
        if (std::binary_search(copy_edges[i].begin(), copy_edges[i].end(), chain.designated[j])) {
          r.pass = false;
          r.offending_copies = {i + 1, j + 1};
          r.detail = "designated edge " + std::to_string(j + 1) + " lies in copy " + std::to_string(i + 1);
        }
      }
    }
    report.results.push_back(std::move(r));
  }

  if (which.count(ChainCondition::star)) {
    ChainReport::Result r{ChainCondition::star, true, std::nullopt, std::nullopt, ""};
    std::vector<std::set<VertexPair>> copy_sets(tau);
    for (int i = 0; i < tau; ++i) copy_sets[i].insert(copy_edges[i].begin(), copy_edges[i].end());
    auto pattern_edges = chain.rule.graph().edges();
    std::set<std::vector<VertexPair>> checked;
    for (auto rep : chain.rule.orbits().representatives()) {
      Graph pattern = chain.rule.graph();
      pattern.remove_edge(rep.u, rep.v);
      MatchPlan plan = make_match_plan(pattern);
      for_each_embedding(pattern, chain.underlying, plan, std::nullopt, [&](std::span<const int> m) {
        std::vector<VertexPair> image;
        for (const auto& e : pattern.edges()) image.emplace_back(m[e.u], m[e.v]);
        std::sort(image.begin(), image.end());
        if (!checked.insert(image).second) return true;
        for (int i = 0; i < tau; ++i) {
          bool inside = true;
          for (const auto& e : image)
            if (!copy_sets[i].count(e)) {
              inside = false;
              break;
            }
          if (inside) return true;
        }
        r.pass = false;
        r.spanning_copy = image;
        r.detail = "copy of rule minus an edge spans multiple chain copies";
        return false;
      });
      if (!r.pass) break;
    }
    report.results.push_back(std::move(r));
  }
  return report;
}

// Engine replay: every designated edge infected for the first time exactly at
// its round, and nothing else is infected.
struct ReplayReport {
  bool pass = false;
  int tau = 0;
  std::string detail;
};

inline ReplayReport verify_round_exact(const Chain& chain) {
  ReplayReport rr;
  auto trace = run_process(chain.starting, chain.rule);
  rr.tau = trace.tau;
  if (trace.tau != chain.length()) {
    rr.detail = "tau " + std::to_string(trace.tau) + " != chain length " + std::to_string(chain.length());
    return rr;
  }
  for (int i = 0; i < chain.length(); ++i) {
    if (trace.rounds[i] != std::vector<VertexPair>{chain.designated[i]}) {
      rr.detail = "round " + std::to_string(i + 1) + " is not exactly the designated edge";
      return rr;
    }
  }
  rr.pass = true;
  return rr;
}

// ---------------------------------------------------------------------------
// Alternating-round extraction: lexicographically least new edge of every odd
// round; the result must be rule-free.

inline Graph extract_alternating_witness(const ProcessTrace& trace, const InfectionRule& rule) {
  if (trace.tau < 1) throw InputError("alternating extraction: trace must have tau >= 1");
  Graph out(trace.start.vertex_count());
  for (std::size_t i = 0; i < trace.rounds.size(); i += 2) {
    const auto& round = trace.rounds[i];
    auto least = *std::min_element(round.begin(), round.end());
    out.add_edge(least.u, least.v);
  }
  if (find_embedding(rule.graph(), out).has_value())
    throw InternalError("alternating extraction produced a graph containing the rule");
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive searches over all non-isomorphic starting graphs.

struct SearchResult {
  int optimum = 0;
  std::string witness_graph6;
  Graph witness;
  long long examined = 0;
  double wall_ms = 0;
};

inline SearchResult brute_force_max_running_time(const InfectionRule& rule, int n, unsigned jobs = 0) {
  auto t0 = std::chrono::steady_clock::now();
  auto graphs = enumerate_nonisomorphic(n);
  std::vector<int> taus(graphs.size());
  RunOptions opt;
  opt.keep_rounds = false;
  parallel_for(graphs.size(), jobs, [&](std::size_t i) { taus[i] = run_process(graphs[i], rule, opt).tau; });
  SearchResult res;
  std::size_t best = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i)
    if (taus[i] > taus[best]) best = i;
  res.optimum = taus[best];
  res.witness = graphs[best];
  res.witness_graph6 = encode_graph6(canonicalized(graphs[best]));
  res.examined = static_cast<long long>(graphs.size());
  res.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

inline SearchResult brute_force_weak_saturation(const InfectionRule& rule, int n, unsigned jobs = 0) {
  auto t0 = std::chrono::steady_clock::now();
  auto graphs = enumerate_nonisomorphic(n);  // sorted by edge count
  SearchResult res;
  RunOptions opt;
  opt.keep_rounds = false;
  std::size_t i = 0;
  while (i < graphs.size()) {
    int m = graphs[i].edge_count();
    std::size_t j = i;
    while (j < graphs.size() && graphs[j].edge_count() == m) ++j;
    std::vector<char> perc(j - i, 0);
    parallel_for(j - i, jobs,
                 [&](std::size_t k) { perc[k] = run_process(graphs[i + k], rule, opt).percolated ? 1 : 0; });
    for (std::size_t k = 0; k < perc.size(); ++k) {
      if (perc[k]) {
        res.optimum = m;
        res.witness = graphs[i + k];
        res.witness_graph6 = encode_graph6(canonicalized(graphs[i + k]));
        res.examined = static_cast<long long>(i + k + 1);
        res.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return res;
      }
    }
    i = j;
  }
  throw VerificationError("weak saturation: no percolating graph found (unexpected)");
}

// ---------------------------------------------------------------------------
// Monte Carlo percolation probability with a Wilson 95% interval.

struct ProbabilityEstimate {
  double p = 0;
  int successes = 0;
  int trials = 0;
  double estimate = 0;
  double lo = 0;
  double hi = 0;
};

inline Graph sample_gnp(int n, double p, uint64_t seed) {
  SplitMix64 rng(seed);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_double() < p) g.add_edge(u, v);
  return g;
}

inline ProbabilityEstimate percolation_probability(const InfectionRule& rule, int n, double p, int trials,
                                                   uint64_t seed, unsigned jobs = 0) {
  if (trials < 1) throw InputError("percolation probability: trials >= 1 required");
  std::vector<char> outcome(trials, 0);
  RunOptions opt;
  opt.keep_rounds = false;
  parallel_for(static_cast<std::size_t>(trials), jobs, [&](std::size_t i) {
    Graph g = sample_gnp(n, p, derive_seed(seed, i));
    outcome[i] = run_process(g, rule, opt).percolated ? 1 : 0;
  });
  ProbabilityEstimate est;
  est.p = p;
  est.trials = trials;
  for (char c : outcome) est.successes += c;
  est.estimate = static_cast<double>(est.successes) / trials;
  const double z = 1.959963984540054;  // 95%
  double nn = trials;
  double center = (est.estimate + z * z / (2 * nn)) / (1 + z * z / nn);
  double half = z * std::sqrt(est.estimate * (1 - est.estimate) / nn + z * z / (4 * nn * nn)) / (1 + z * z / nn);
  est.lo = std::max(0.0, center - half);
  est.hi = std::min(1.0, center + half);
  return est;
}

}  // namespace bootlab
