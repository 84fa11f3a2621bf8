#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bootlab/analyzers.hpp"
#include "bootlab/constructions.hpp"
#include "bootlab/engine.hpp"
#include "bootlab/graph.hpp"

namespace bootlab {

// Parameters of the trigger gadget. The chain part has `ell` copies; E'
// attaches each vertex of the low-index source window to delta(H)-1 higher
// vertices at offsets spacing, spacing+step, ..., E'' is the mirror image.
// The core set U is the middle window of width u_width. The parameter sizes
// used by the general asymptotic argument (window k^{3k}, spacing k^2,
// ell <= k^{4k}) are recorded by asymptotic_reference_params(); desk
// instances use searched small parameters and machine-check every clause
// instead.
struct GadgetParams {
  int ell = 0;
  int window = 0;   // 0: derived as (r - u_width) / 2 so the sources reach U
  int spacing = 0;  // 0: derived as v(H) + 2
  int u_width = 0;  // 0: derived as v(H) + 2
  int min_dist_ef = 0;
  int min_dist_u = 0;
};

struct GadgetSpec {
  Graph gamma;
  VertexPair trigger_edge;    // e, an edge of gamma
  VertexPair target_nonedge;  // f, not an edge of gamma
  std::vector<int> core_set;  // U
  GadgetParams params;
  int vertex_count = 0;
  int dist_ef = 0;
  int dist_u = 0;
  bool stability_ok = false;    // clause 1a: gamma - e is H-stable
  bool infection_ok = false;    // clause 1b: f infected by the process on gamma
  bool percolation_ok = false;  // clause 3: gamma + clique(U) percolates
  bool distance_ok = false;     // clause 2: distances meet the params

  bool all_ok() const { return stability_ok && infection_ok && percolation_ok && distance_ok; }

  std::string summary() const {
    std::ostringstream os;
    os << "gadget r=" << vertex_count << " ell=" << params.ell << " spacing=" << params.spacing
       << " window=" << params.window << " |U|=" << core_set.size() << " dist(e,f)=" << dist_ef
       << " dist(U,ef)=" << dist_u << " stability=" << (stability_ok ? "pass" : "FAIL")
       << " infection=" << (infection_ok ? "pass" : "FAIL")
       << " percolation=" << (percolation_ok ? "pass" : "FAIL")
       << " distances=" << (distance_ok ? "pass" : "FAIL");
    return os.str();
  }
};

struct AsymptoticGadgetReference {
  long long ell;        // ceil((2 k^{3k+3} - 2) / (k - 2))
  double log10_window;  // k^{3k}
  long long spacing;    // k^2
};

inline AsymptoticGadgetReference asymptotic_reference_params(int k) {
  // recorded without instantiation; for k = 5 the chain length alone is
  // ceil((2*5^18 - 2)/3)
  long long powk = 1;
  double log10w = 3.0 * k * std::log10(static_cast<double>(k));
  for (int i = 0; i < 3 * k + 3 && powk < (1LL << 61) / k; ++i) powk *= k;
  long long ell = (2 * powk - 2 + (k - 3)) / (k - 2);
  return {ell, log10w, static_cast<long long>(k) * k};
}

// Builds the gadget and verifies every clause computationally. Throws only on
// malformed inputs; failed clauses are reported in the returned flags.
inline GadgetSpec gadget_graph(const InfectionRule& rule, GadgetParams params) {
  int k = rule.vertex_count();
  int delta = rule.min_degree();
  if (!is_l1_inseparable(rule.graph(), 2))
    throw InputError("gadget: rule must be (2,1)-inseparable");
  if (params.ell < 2) throw InputError("gadget: ell >= 2 required");
  if (params.spacing == 0) params.spacing = k + 2;
  if (params.u_width == 0) params.u_width = k + 2;
  if (params.min_dist_ef == 0) params.min_dist_ef = k;
  if (params.min_dist_u == 0) params.min_dist_u = 2;
  if (params.spacing < k) throw InputError("gadget: spacing >= v(H) required");

  Chain chain = simple_rule_chain(rule, params.ell);
  int r = chain.ambient_vertices;
  if (params.u_width >= r - 2) throw InputError("gadget: u_width too large for ell");
  if (params.window == 0) params.window = (r - params.u_width) / 2;
  int w = params.window;
  int u_lo = w;
  int u_hi = std::min(r, w + params.u_width);

  Graph gamma = chain.starting;
  // attachment offsets: spacing + i*(k+1); the uneven step keeps offset sums
  // and differences off the offset set and beyond any copy window. The four
  // boundary vertices carry no attachment edges: the head and tail windows
  // already feed them, and the trigger/target pairs stay placeable when the
  // gadget is stamped onto overlapping endpoints.
  int step = params.spacing == k + 1 ? k + 2 : k + 1;
  for (int i = 2; i < w; ++i) {
    for (int t = 0; t < delta - 1; ++t) {
      int j = i + params.spacing + t * step;
      if (j < r - 2) gamma.add_edge(i, j);
      int mi = r - 1 - i;
      int mj = r - 1 - j;
      if (mj >= 2) gamma.add_edge(mi, mj);
    }
  }

  GadgetSpec spec;
  spec.params = params;
  spec.vertex_count = r;
  spec.trigger_edge = VertexPair(0, 1);
  spec.target_nonedge = chain.designated.back();
  for (int v = u_lo; v < u_hi; ++v) spec.core_set.push_back(v);
  spec.gamma = gamma;
  if (!gamma.has_edge(0, 1)) throw ConstructionError("gadget: trigger edge missing from chain head");
  if (gamma.has_edge(spec.target_nonedge.u, spec.target_nonedge.v))
    throw ConstructionError("gadget: target pair unexpectedly present");

  // clause 1a: gamma - e is H-stable
  Graph minus = gamma;
  minus.remove_edge(spec.trigger_edge.u, spec.trigger_edge.v);
  spec.stability_ok = is_stable(minus, rule);

  // clause 1b: f is infected in the process on gamma
  RunOptions light;
  light.keep_rounds = false;
  auto gtrace = run_process(gamma, rule, light);
  spec.infection_ok = gtrace.final_graph.has_edge(spec.target_nonedge.u, spec.target_nonedge.v);

  // clause 3: gamma + clique(U) percolates
  Graph seeded = gamma;
  for (std::size_t i = 0; i < spec.core_set.size(); ++i)
    for (std::size_t j = i + 1; j < spec.core_set.size(); ++j)
      seeded.add_edge(spec.core_set[i], spec.core_set[j]);
  spec.percolation_ok = run_process(seeded, rule, light).percolated;

  // clause 2: distances against the params
  int ev[2] = {spec.trigger_edge.u, spec.trigger_edge.v};
  int fv[2] = {spec.target_nonedge.u, spec.target_nonedge.v};
  auto de = gamma.bfs_distances(std::span<const int>(ev, 2));
  auto df = gamma.bfs_distances(std::span<const int>(fv, 2));
  spec.dist_ef = std::numeric_limits<int>::max();
  for (int x : fv) spec.dist_ef = std::min(spec.dist_ef, de[x] < 0 ? std::numeric_limits<int>::max() : de[x]);
  spec.dist_u = std::numeric_limits<int>::max();
  for (int u : spec.core_set) {
    int dd = std::min(de[u] < 0 ? std::numeric_limits<int>::max() : de[u],
                      df[u] < 0 ? std::numeric_limits<int>::max() : df[u]);
    spec.dist_u = std::min(spec.dist_u, dd);
  }
  spec.distance_ok = spec.dist_ef >= params.min_dist_ef && spec.dist_u >= params.min_dist_u;
  return spec;
}

// Smallest-passing-parameter search: scans chain lengths (and alignments of
// the core window) until all clauses verify at the requested distance
// thresholds. Deterministic; reports the failed clause trail on exhaustion.
inline GadgetSpec search_gadget(const InfectionRule& rule, int min_dist_ef, int min_dist_u,
                                int max_ell = 64) {
  int k = rule.vertex_count();
  std::string trail;
  for (int ell = 4; ell <= max_ell; ell += 2) {
    for (int uw : {k + 2, k + 4, 2 * k}) {
      GadgetParams p;
      p.ell = ell;
      p.u_width = uw;
      p.min_dist_ef = min_dist_ef;
      p.min_dist_u = min_dist_u;
      int r = (k - 2) * ell + 2;
      if (uw >= r - 2 * (k + 2)) continue;
      GadgetSpec spec = gadget_graph(rule, p);
      if (spec.all_ok()) return spec;
      trail += spec.summary() + "\n";
    }
  }
  throw VerificationError("gadget search exhausted without a passing instance:\n" + trail);
}

}  // namespace bootlab
