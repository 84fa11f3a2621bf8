#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "bootlab/graph.hpp"
#include "bootlab/isomorphism.hpp"

namespace bootlab {

// An automorphism of g mapping edge `from` onto edge `to` (as a set), if any.
inline std::optional<std::vector<int>> automorphism_mapping_edge(const Graph& g, VertexPair from, VertexPair to) {
  MatchPlan plan = make_match_plan(g, from);
  std::optional<std::vector<int>> out;
  for_each_embedding(g, g, plan, to, [&](std::span<const int> m) {
    out = std::vector<int>(m.begin(), m.end());
    return false;
  });
  return out;
}

// Rule edges partitioned into automorphism orbits. Each non-representative
// edge stores a witness automorphism carrying the orbit representative onto
// it, so pairwise witnesses come from composition.
class EdgeOrbitPartition {
 public:
  static EdgeOrbitPartition compute(const Graph& g) {
    auto edges = g.edges();
    if (edges.empty()) throw InputError("edge orbits: rule graph has no edges");
    EdgeOrbitPartition part;
    part.vertex_count_ = g.vertex_count();
    for (const auto& e : edges) {
      bool placed = false;
      for (std::size_t i = 0; i < part.orbits_.size() && !placed; ++i) {
        auto witness = automorphism_mapping_edge(g, part.orbits_[i][0], e);
        if (witness) {
          part.orbits_[i].push_back(e);
          part.witness_from_rep_[i].push_back(*witness);
          placed = true;
        }
      }
      if (!placed) {
        part.orbits_.push_back({e});
        part.witness_from_rep_.push_back({identity(g.vertex_count())});
      }
    }
    return part;
  }

  std::size_t orbit_count() const { return orbits_.size(); }
  const std::vector<std::vector<VertexPair>>& orbits() const { return orbits_; }
  VertexPair representative(std::size_t i) const { return orbits_[i][0]; }

  std::vector<VertexPair> representatives() const {
    std::vector<VertexPair> reps;
    reps.reserve(orbits_.size());
    for (const auto& o : orbits_) reps.push_back(o[0]);
    return reps;
  }

  std::optional<std::size_t> orbit_of(VertexPair e) const {
    for (std::size_t i = 0; i < orbits_.size(); ++i)
      if (std::find(orbits_[i].begin(), orbits_[i].end(), e) != orbits_[i].end()) return i;
    return std::nullopt;
  }

  // Automorphism mapping e1 onto e2; both must lie in the same orbit.
  std::vector<int> exchange_witness(VertexPair e1, VertexPair e2) const {
    auto o1 = orbit_of(e1), o2 = orbit_of(e2);
    if (!o1 || !o2 || *o1 != *o2) throw InputError("exchange witness: edges not in one orbit");
    const auto& orbit = orbits_[*o1];
    const auto& wits = witness_from_rep_[*o1];
    auto i1 = std::find(orbit.begin(), orbit.end(), e1) - orbit.begin();
    auto i2 = std::find(orbit.begin(), orbit.end(), e2) - orbit.begin();
    const auto& s1 = wits[i1];  // rep -> e1
    const auto& s2 = wits[i2];  // rep -> e2
    std::vector<int> inv1(s1.size());
    for (std::size_t v = 0; v < s1.size(); ++v) inv1[s1[v]] = static_cast<int>(v);
    std::vector<int> out(s1.size());
    for (std::size_t v = 0; v < s1.size(); ++v) out[v] = s2[inv1[v]];
    return out;  // s2 ∘ s1⁻¹ : e1 -> e2
  }

 private:
  static std::vector<int> identity(int n) {
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    return id;
  }

  int vertex_count_ = 0;
  std::vector<std::vector<VertexPair>> orbits_;
  std::vector<std::vector<std::vector<int>>> witness_from_rep_;
};

inline EdgeOrbitPartition edge_orbits(const Graph& rule) { return EdgeOrbitPartition::compute(rule); }

}  // namespace bootlab
