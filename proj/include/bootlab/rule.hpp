#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bootlab/graph.hpp"
#include "bootlab/isomorphism.hpp"
#include "bootlab/orbits.hpp"

namespace bootlab {

struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational reduced(long long n, long long d) {
    long long g = std::gcd(n < 0 ? -n : n, d < 0 ? -d : d);
    if (g == 0) g = 1;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    return {n / g, d / g};
  }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  friend bool operator==(const Rational&, const Rational&) = default;
};

// A rule graph H with cached automorphism edge-orbits, degree statistics and
// per-orbit anchored match plans; everything the infection test needs.
class InfectionRule {
 public:
  InfectionRule(Graph graph, std::string name)
      : graph_(std::move(graph)), name_(std::move(name)), orbits_(EdgeOrbitPartition::compute(graph_)) {
    v_ = graph_.vertex_count();
    e_ = graph_.edge_count();
    min_degree_ = v_ > 0 ? graph_.degree(0) : 0;
    max_degree_ = 0;
    for (int v = 0; v < v_; ++v) {
      int d = graph_.degree(v);
      min_degree_ = std::min(min_degree_, d);
      max_degree_ = std::max(max_degree_, d);
    }
    connected_ = graph_.is_connected();
    diameter_ = connected_ ? graph_.diameter() : -1;
    for (auto rep : orbits_.representatives()) {
      rep_plans_.push_back(make_match_plan(graph_, rep));
      int cn = 0;
      const uint64_t* ra = graph_.row(rep.u);
      const uint64_t* rb = graph_.row(rep.v);
      for (int w = 0; w < graph_.row_words(); ++w) cn += std::popcount(ra[w] & rb[w]);
      rep_common_neighbors_.push_back(cn);
    }
  }

  const Graph& graph() const { return graph_; }
  const std::string& name() const { return name_; }
  const EdgeOrbitPartition& orbits() const { return orbits_; }
  const std::vector<MatchPlan>& rep_plans() const { return rep_plans_; }
  const std::vector<int>& rep_common_neighbors() const { return rep_common_neighbors_; }

  int vertex_count() const { return v_; }
  int edge_count() const { return e_; }
  int min_degree() const { return min_degree_; }
  int max_degree() const { return max_degree_; }
  bool connected() const { return connected_; }
  int diameter() const { return diameter_; }  // -1 when disconnected

  // lambda(H) = (e-2)/(v-2), defined for v > 2
  std::optional<Rational> lambda() const {
    if (v_ <= 2) return std::nullopt;
    return Rational::reduced(e_ - 2, v_ - 2);
  }

 private:
  Graph graph_;
  std::string name_;
  EdgeOrbitPartition orbits_;
  std::vector<MatchPlan> rep_plans_;
  std::vector<int> rep_common_neighbors_;
  int v_ = 0, e_ = 0, min_degree_ = 0, max_degree_ = 0, diameter_ = -1;
  bool connected_ = false;
};

}  // namespace bootlab
