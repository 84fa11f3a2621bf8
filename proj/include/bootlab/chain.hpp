#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bootlab/catalog.hpp"
#include "bootlab/graph.hpp"
#include "bootlab/rule.hpp"

namespace bootlab {

// A sequence of copies of the rule graph with designated edges e_i, where
// e_i is an edge of copy i and, below the last index, also of copy i+1.
// underlying = union of the copies; starting = underlying minus all e_i.
struct Chain {
  InfectionRule rule;
  int ambient_vertices = 0;
  std::vector<std::vector<int>> copies;  // copy i: rule vertex j -> ambient vertex
  std::vector<VertexPair> designated;    // e_1 .. e_tau
  Graph underlying;
  Graph starting;

  int length() const { return static_cast<int>(copies.size()); }

  std::vector<VertexPair> copy_edges(int i) const {
    std::vector<VertexPair> out;
    for (const auto& e : rule.graph().edges())
      out.emplace_back(copies[i][e.u], copies[i][e.v]);
    std::sort(out.begin(), out.end());
    return out;
  }

  // Checks the structural invariants; throws ConstructionError on violation.
  void validate() const {
    if (copies.size() != designated.size())
      throw ConstructionError("chain: one designated edge per copy required");
    int vh = rule.vertex_count();
    for (std::size_t i = 0; i < copies.size(); ++i) {
      if (static_cast<int>(copies[i].size()) != vh) throw ConstructionError("chain: copy arity mismatch");
      std::set<int> img(copies[i].begin(), copies[i].end());
      if (static_cast<int>(img.size()) != vh) throw ConstructionError("chain: copy not injective");
      for (int v : copies[i])
        if (v < 0 || v >= ambient_vertices) throw ConstructionError("chain: copy vertex out of range");
    }
    for (std::size_t i = 0; i < copies.size(); ++i) {
      auto edges = copy_edges(static_cast<int>(i));
      auto has = [&](VertexPair e) { return std::binary_search(edges.begin(), edges.end(), e); };
      if (!has(designated[i]))
        throw ConstructionError("chain: designated edge " + std::to_string(i + 1) + " not in its copy");
      if (i + 1 < copies.size()) {
        auto next = copy_edges(static_cast<int>(i) + 1);
        if (!std::binary_search(next.begin(), next.end(), designated[i]))
          throw ConstructionError("chain: designated edge " + std::to_string(i + 1) + " not shared with next copy");
      }
    }
    Graph expect_underlying(ambient_vertices);
    for (std::size_t i = 0; i < copies.size(); ++i)
      for (const auto& e : copy_edges(static_cast<int>(i))) expect_underlying.add_edge(e.u, e.v);
    if (!(expect_underlying == underlying)) throw ConstructionError("chain: underlying graph mismatch");
    Graph expect_start = expect_underlying;
    for (const auto& e : designated) expect_start.remove_edge(e.u, e.v);
    if (!(expect_start == starting)) throw ConstructionError("chain: starting graph mismatch");
  }
};

inline Chain make_chain(InfectionRule rule, int ambient, std::vector<std::vector<int>> copies,
                        std::vector<VertexPair> designated) {
  Chain chain{std::move(rule), ambient, std::move(copies), std::move(designated), Graph(ambient), Graph(ambient)};
  for (int i = 0; i < chain.length(); ++i)
    for (const auto& e : chain.copy_edges(i)) chain.underlying.add_edge(e.u, e.v);
  chain.starting = chain.underlying;
  for (const auto& e : chain.designated) chain.starting.remove_edge(e.u, e.v);
  chain.validate();
  return chain;
}

inline void write_chain(std::ostream& os, const Chain& c) {
  os << "bootlab-chain 1\n";
  os << "rule " << c.rule.name() << '\n';
  os << "n " << c.ambient_vertices << '\n';
  os << "copies " << c.length() << '\n';
  for (int i = 0; i < c.length(); ++i) {
    os << "copy " << (i + 1);
    for (int v : c.copies[i]) os << ' ' << v;
    os << '\n';
  }
  os << "designated " << c.designated.size() << '\n';
  for (const auto& e : c.designated) os << e.u << ' ' << e.v << '\n';
}

inline std::string chain_to_string(const Chain& c) {
  std::ostringstream os;
  write_chain(os, c);
  return os.str();
}

inline Chain read_chain(std::istream& is) {
  auto expect_key = [&](const std::string& key) {
    std::string k;
    if (!(is >> k) || k != key) throw InputError("chain: expected '" + key + "'");
  };
  std::string magic;
  int version;
  if (!(is >> magic >> version) || magic != "bootlab-chain" || version != 1)
    throw InputError("chain: bad header");
  expect_key("rule");
  std::string rule_name;
  std::getline(is >> std::ws, rule_name);
  while (!rule_name.empty() && (rule_name.back() == '\r' || rule_name.back() == ' ')) rule_name.pop_back();
  int n, tau;
  expect_key("n");
  is >> n;
  expect_key("copies");
  is >> tau;
  InfectionRule rule = rule_from_spec(rule_name);
  int vh = rule.vertex_count();
  std::vector<std::vector<int>> copies;
  for (int i = 0; i < tau; ++i) {
    expect_key("copy");
    int idx;
    is >> idx;
    std::vector<int> copy(vh);
    for (int j = 0; j < vh; ++j)
      if (!(is >> copy[j])) throw InputError("chain: truncated copy");
    copies.push_back(std::move(copy));
  }
  int m;
  expect_key("designated");
  is >> m;
  std::vector<VertexPair> designated;
  for (int i = 0; i < m; ++i) {
    int u, v;
    if (!(is >> u >> v)) throw InputError("chain: truncated designated edges");
    designated.emplace_back(u, v);
  }
  return make_chain(std::move(rule), n, std::move(copies), std::move(designated));
}

}  // namespace bootlab
