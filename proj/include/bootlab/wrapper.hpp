#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bootlab/constructions.hpp"
#include "bootlab/engine.hpp"
#include "bootlab/gadget.hpp"
#include "bootlab/graph.hpp"

namespace bootlab {

// Slow percolating wrapper: around a starting graph g it places an
// independent set I, one trigger gadget per edge of an auxiliary cheap
// percolating graph that is missing from g's final graph, and a C4-free
// (girth >= k+1) attachment between I and the gadgets' core sets. The
// resulting graph percolates while leaving g's process untouched for its
// full running time; both facts are engine-verified, not assumed.
struct WrapperOptions {
  GadgetParams gadget;   // defaults to a small verified instance
  int i_size = 0;        // 0: auto-sized from the attachment budget
  uint64_t seed = 1;     // attachment search seed
  int growth_attempts = 5;
};

struct WrapperReport {
  Graph wrapped;
  GadgetSpec gadget;
  int base_tau = 0;
  int wrapped_tau = 0;
  bool percolated = false;
  bool prefix_exact = false;  // rounds 1..base_tau of the wrapped process equal g's rounds
  int gadget_count = 0;
  int i_size = 0;
  double vertex_ratio = 0;  // v(wrapped) / v(g), the constant C of the construction

  bool contract_ok() const { return percolated && wrapped_tau >= base_tau && prefix_exact; }

  std::string summary() const {
    std::ostringstream os;
    os << "wrapper v=" << wrapped.vertex_count() << " gadgets=" << gadget_count << " |I|=" << i_size
       << " base_tau=" << base_tau << " wrapped_tau=" << wrapped_tau
       << " percolated=" << (percolated ? "yes" : "NO")
       << " prefix_exact=" << (prefix_exact ? "yes" : "NO") << " C=" << vertex_ratio;
    return os.str();
  }
};

namespace detail {

// Per-gadget attachment: each core vertex needs delta-1 attachment edges;
// every I-vertex carries one triple that includes a pair non-adjacent in the
// gadget, which keeps the attachment too sparse to complete rule copies.
inline std::vector<std::vector<int>> core_triples(const Graph& gamma, const std::vector<int>& core,
                                                  int quota_per_vertex) {
  std::vector<int> quota(core.size(), quota_per_vertex);
  std::vector<std::pair<int, int>> nonadj;
  for (std::size_t i = 0; i < core.size(); ++i)
    for (std::size_t j = i + 1; j < core.size(); ++j)
      if (!gamma.has_edge(core[i], core[j])) nonadj.emplace_back(static_cast<int>(i), static_cast<int>(j));
  if (nonadj.empty()) throw ConstructionError("wrapper: core set has no non-adjacent pair");
  std::vector<std::vector<int>> triples;
  auto remaining = [&] {
    for (int q : quota)
      if (q > 0) return true;
    return false;
  };
  while (remaining()) {
    auto best = nonadj[0];
    int best_score = -1;
    for (const auto& pr : nonadj) {
      int score = std::max(quota[pr.first], 0) + std::max(quota[pr.second], 0);
      if (score > best_score) {
        best_score = score;
        best = pr;
      }
    }
    int third = -1, third_q = std::numeric_limits<int>::min();
    for (std::size_t i = 0; i < core.size(); ++i) {
      if (static_cast<int>(i) == best.first || static_cast<int>(i) == best.second) continue;
      if (quota[i] > third_q) {
        third_q = quota[i];
        third = static_cast<int>(i);
      }
    }
    std::vector<int> triple = {best.first, best.second};
    if (third >= 0) triple.push_back(third);
    for (int idx : triple) --quota[idx];
    triples.push_back(std::move(triple));
  }
  return triples;
}

}  // namespace detail

inline WrapperReport slow_percolating_wrapper(const InfectionRule& rule, const Graph& g,
                                              WrapperOptions opt = {}) {
  int k = rule.vertex_count();
  int delta = rule.min_degree();
  if (!is_l1_inseparable(rule.graph(), 2))
    throw InputError("wrapper: rule must be (2,1)-inseparable");

  auto base = run_process(g, rule);
  if (base.tau < 1) throw InputError("wrapper: starting graph is already stable");
  VertexPair e_tau = *std::min_element(base.rounds.back().begin(), base.rounds.back().end());

  if (opt.gadget.ell == 0) opt.gadget.ell = 4;
  if (opt.gadget.spacing == 0) opt.gadget.spacing = k;
  if (opt.gadget.u_width == 0) opt.gadget.u_width = k;
  if (opt.gadget.min_dist_ef == 0) opt.gadget.min_dist_ef = 1;
  if (opt.gadget.min_dist_u == 0) opt.gadget.min_dist_u = 1;
  GadgetSpec gadget = gadget_graph(rule, opt.gadget);
  if (!gadget.all_ok())
    throw VerificationError("wrapper: gadget verification failed: " + gadget.summary());
  int r = gadget.vertex_count;
  auto triples = detail::core_triples(gadget.gamma, gadget.core_set, delta - 1);
  int d = static_cast<int>(triples.size());  // I-vertices per gadget

  int ng = g.vertex_count();
  int i_size = opt.i_size;
  if (i_size == 0) {
    // attachment budget: gadget_count * C(d,2) distinct I-pairs must fit
    // comfortably inside C(|I|,2) for the seeded C4-free search
    i_size = std::max(ng, 4 * d);
    for (;;) {
      long long gstar = 3LL * (ng + i_size);  // upper estimate of the gadget count
      long long pairs = gstar * d * (d - 1) / 2;
      long long cap = static_cast<long long>(i_size) * (i_size - 1) / 2;
      if (4 * pairs <= cap) break;
      i_size += std::max(8, i_size / 8);
    }
  }

  for (int attempt = 0; attempt < opt.growth_attempts; ++attempt, i_size += i_size / 4) {
    int nv = ng + i_size;
    Graph gprime = cheap_percolator(rule, nv);
    std::vector<VertexPair> gstar;
    for (const auto& f : gprime.edges()) {
      bool in_final = f.u < ng && f.v < ng && base.final_graph.has_edge(f.u, f.v);
      if (!in_final) gstar.push_back(f);
    }
    // C4-free attachment: supernode per gadget, d distinct I-vertices each,
    // no two gadgets sharing two I-vertices
    SplitMix64 rng(derive_seed(opt.seed, attempt));
    std::set<std::pair<int, int>> used_pairs;
    std::vector<std::vector<int>> gadget_ivs(gstar.size());
    bool b_ok = true;
    for (std::size_t gi = 0; gi < gstar.size() && b_ok; ++gi) {
      // a gadget's own target endpoints already carry its tail-window edges;
      // attaching them to the core as well would densify the interior
      int banned1 = gstar[gi].u >= ng ? gstar[gi].u - ng : -1;
      int banned2 = gstar[gi].v >= ng ? gstar[gi].v - ng : -1;
      bool placed = false;
      for (int tries = 0; tries < 800 && !placed; ++tries) {
        std::vector<int> pick;
        while (static_cast<int>(pick.size()) < d) {
          int x = static_cast<int>(rng.next_below(i_size));
          if (x == banned1 || x == banned2) continue;
          if (std::find(pick.begin(), pick.end(), x) == pick.end()) pick.push_back(x);
        }
        bool clean = true;
        for (int a = 0; a < d && clean; ++a)
          for (int b = a + 1; b < d && clean; ++b)
            if (used_pairs.count({std::min(pick[a], pick[b]), std::max(pick[a], pick[b])})) clean = false;
        if (!clean) continue;
        for (int a = 0; a < d; ++a)
          for (int b = a + 1; b < d; ++b)
            used_pairs.insert({std::min(pick[a], pick[b]), std::max(pick[a], pick[b])});
        gadget_ivs[gi] = std::move(pick);
        placed = true;
      }
      if (!placed) b_ok = false;
    }
    if (!b_ok) continue;  // grow I and retry

    // assemble
    int total = nv;
    std::vector<int> block_base(gstar.size());
    for (std::size_t gi = 0; gi < gstar.size(); ++gi) {
      block_base[gi] = total;
      total += r - 4;  // interior vertices; e and f endpoints are shared
    }
    Graph wrapped(total);
    for (const auto& e : g.edges()) wrapped.add_edge(e.u, e.v);
    auto interior_id = [&](std::size_t gi, int x) {
      // gadget vertex -> wrapped vertex: 0,1 are e_tau's endpoints; r-2, r-1
      // are the target pair; the rest are fresh per gadget
      return block_base[gi] + x - 2;
    };
    for (std::size_t gi = 0; gi < gstar.size(); ++gi) {
      const auto& f = gstar[gi];
      auto map_vertex = [&](int x) {
        if (x == 0) return e_tau.u;
        if (x == 1) return e_tau.v;
        if (x == r - 2) return f.u;
        if (x == r - 1) return f.v;
        return interior_id(gi, x);
      };
      for (const auto& ge : gadget.gamma.edges()) {
        if (VertexPair(ge.u, ge.v) == gadget.trigger_edge) continue;  // gadget minus e
        int a = map_vertex(ge.u), b = map_vertex(ge.v);
        if (a == b) throw ConstructionError("wrapper: degenerate gadget placement");
        wrapped.add_edge(a, b);
      }
      for (std::size_t t = 0; t < triples.size(); ++t) {
        int iv = ng + gadget_ivs[gi][t];
        for (int ci : triples[t]) wrapped.add_edge(iv, map_vertex(gadget.core_set[ci]));
      }
    }

    auto run = run_process_streaming(wrapped, rule, base.tau);
    WrapperReport report;
    report.wrapped = std::move(wrapped);
    report.gadget = gadget;
    report.base_tau = base.tau;
    report.wrapped_tau = run.tau;
    report.percolated = run.percolated;
    report.prefix_exact = static_cast<int>(run.prefix_rounds.size()) >= base.tau;
    for (int t = 0; t < base.tau && report.prefix_exact; ++t)
      if (run.prefix_rounds[t] != base.rounds[t]) report.prefix_exact = false;
    report.gadget_count = static_cast<int>(gstar.size());
    report.i_size = i_size;
    report.vertex_ratio = static_cast<double>(total) / ng;
    return report;
  }
  throw ConstructionError("wrapper: attachment search failed; increase i_size");
}

}  // namespace bootlab
