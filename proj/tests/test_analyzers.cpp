#include <catch2/catch_amalgamated.hpp>

#include "bootlab/analyzers.hpp"
#include "bootlab/constructions.hpp"
#include "bootlab/gadget.hpp"

using namespace bootlab;

TEST_CASE("inseparability checker") {
  CHECK(is_l1_inseparable(clique_graph(5), 2));
  CHECK_FALSE(is_l1_inseparable(wheel_graph(7), 2));
  CHECK_FALSE(is_l1_inseparable(clique_graph(4), 2));
  CHECK(is_l1_inseparable(clique_graph(6), 2));
  CHECK(is_l1_inseparable(square_of_cycle_graph(8), 2));
  CHECK_FALSE(is_l1_inseparable(glued_cliques_graph(5), 2));
  // K7 is (3,1)-inseparable but K5 is not
  CHECK(is_l1_inseparable(clique_graph(7), 3));
  CHECK_FALSE(is_l1_inseparable(clique_graph(5), 3));
  CHECK_THROWS_AS(is_l1_inseparable(Graph(3), 2), InputError);
}

TEST_CASE("behrendian checker") {
  CHECK(is_behrendian(cycle_graph(3)).verdict == Ternary::yes);
  Graph k5m = Graph::complete(5);
  k5m.remove_edge(0, 1);
  CHECK(is_behrendian(k5m).verdict == Ternary::yes);
  auto p4 = is_behrendian(path_graph(4));
  CHECK(p4.verdict == Ternary::no);
  CHECK_FALSE(p4.counterexample_colouring.empty());
  CHECK(is_behrendian(Graph::complete(6), 10).verdict == Ternary::unknown);
  // a 4-cycle: colouring opposite edges with two colours gives 4 arcs
  CHECK(is_behrendian(cycle_graph(4)).verdict == Ternary::no);
  // single edge: no non-monochromatic colouring exists
  CHECK(is_behrendian(path_graph(2)).verdict == Ternary::yes);
}

TEST_CASE("chain condition dichotomy") {
  // simple K5-chain passes (*)
  Chain k5chain = simple_clique_chain(5, 4);
  auto rep5 = verify_chain_conditions(k5chain, {ChainCondition::dagger, ChainCondition::dagger_prime, ChainCondition::star});
  CHECK(rep5.all_pass());

  // simple K4-chain with d >= 2 fails (*) with a concrete spanning witness
  Chain k4chain = simple_clique_chain(4, 2);
  auto rep4 = verify_chain_conditions(k4chain, {ChainCondition::star});
  REQUIRE(rep4.results.size() == 1);
  CHECK_FALSE(rep4.results[0].pass);
  REQUIRE(rep4.results[0].spanning_copy.has_value());
  // the witness is a genuine K4-minus-an-edge inside the underlying graph
  // not contained in one copy
  const auto& witness = *rep4.results[0].spanning_copy;
  CHECK(witness.size() == 5);
  for (const auto& e : witness) CHECK(k4chain.underlying.has_edge(e.u, e.v));
  for (int i = 0; i < k4chain.length(); ++i) {
    auto ce = k4chain.copy_edges(i);
    bool inside = true;
    for (const auto& e : witness)
      if (!std::binary_search(ce.begin(), ce.end(), e)) inside = false;
    CHECK_FALSE(inside);
  }

  // (dagger) holds for simple chains of either clique order
  CHECK(verify_chain_conditions(k4chain, {ChainCondition::dagger}).all_pass());
}

TEST_CASE("round exactness of verified chains") {
  for (int k : {5, 6}) {
    for (int d : {2, 4}) {
      Chain c = simple_clique_chain(k, d);
      auto replay = verify_round_exact(c);
      CHECK(replay.pass);
      CHECK(replay.tau == d);
    }
  }
  // K4-chains percolate, so the replay is not round-exact
  CHECK_FALSE(verify_round_exact(simple_clique_chain(4, 3)).pass);
}

TEST_CASE("alternating extraction") {
  auto k4 = rule_from_spec("clique 4");
  auto trace = run_process(k4_extremal(8), k4);
  REQUIRE(trace.tau == 5);
  Graph witness = extract_alternating_witness(trace, k4);
  CHECK(witness.edge_count() == 3);  // rounds 1, 3, 5
  CHECK_FALSE(find_embedding(k4.graph(), witness).has_value());

  // tau = 1: a single edge, rule-free whenever e(H) >= 2
  auto single = run_process(path_graph(3), rule_from_spec("clique 3"));
  REQUIRE(single.tau == 1);
  CHECK(extract_alternating_witness(single, rule_from_spec("clique 3")).edge_count() == 1);

  // seeded random starts under C4
  auto c4 = rule_from_spec("cycle 4");
  SplitMix64 rng(2025);
  int done = 0;
  for (int iter = 0; iter < 20; ++iter) {
    Graph g = sample_gnp(12, 0.3, derive_seed(99, iter));
    auto t = run_process(g, c4);
    if (t.tau < 1) continue;
    Graph w = extract_alternating_witness(t, c4);
    CHECK_FALSE(find_embedding(c4.graph(), w).has_value());
    ++done;
  }
  CHECK(done > 0);

  CHECK_THROWS_AS(extract_alternating_witness(run_process(Graph::complete(4), k4), k4), InputError);
}

TEST_CASE("brute force maximum running time") {
  auto k3 = rule_from_spec("clique 3");
  auto r = brute_force_max_running_time(k3, 5);
  CHECK(r.optimum == 2);
  CHECK(r.examined == 34);
  CHECK(run_process(r.witness, k3).tau == 2);
  CHECK(decode_graph6(r.witness_graph6).vertex_count() == 5);

  auto k4 = rule_from_spec("clique 4");
  CHECK(brute_force_max_running_time(k4, 6, 2).optimum == 3);
  CHECK(brute_force_max_running_time(k4, 7, 2).optimum == 4);

  // isomorphism stability: jobs count does not change the result
  auto seq = brute_force_max_running_time(k3, 6, 1);
  auto par = brute_force_max_running_time(k3, 6, 4);
  CHECK(seq.optimum == par.optimum);
  CHECK(seq.witness_graph6 == par.witness_graph6);
}

TEST_CASE("brute force weak saturation") {
  auto k3 = rule_from_spec("clique 3");
  CHECK(brute_force_weak_saturation(k3, 5).optimum == 4);
  auto k4 = rule_from_spec("clique 4");
  auto r = brute_force_weak_saturation(k4, 6, 2);
  CHECK(r.optimum == 9);
  CHECK(percolates(r.witness, k4));
  auto c4 = rule_from_spec("cycle 4");
  CHECK(brute_force_weak_saturation(c4, 5).optimum == 5);
}

TEST_CASE("clique-plus-pendant stabilizes fast") {
  // M_{K_3^+}(n) <= 3, exhaustively for n <= 7
  auto rule = rule_from_spec("clique-plus-pendant 3");
  for (int n = 4; n <= 7; ++n)
    CHECK(brute_force_max_running_time(rule, n).optimum <= 3);
}

TEST_CASE("monte carlo percolation probability") {
  auto k3 = rule_from_spec("clique 3");
  auto sure = percolation_probability(k3, 50, 1.0, 5, 1);
  CHECK(sure.estimate == 1.0);
  CHECK(sure.lo > 0.5);

  auto high = percolation_probability(k3, 50, 0.30, 200, 777, 4);
  CHECK(high.estimate >= 0.95);

  // deterministic given the seed, independent of the worker count
  auto a = percolation_probability(k3, 30, 0.1, 100, 42, 1);
  auto b = percolation_probability(k3, 30, 0.1, 100, 42, 8);
  CHECK(a.successes == b.successes);

  CHECK_THROWS_AS(percolation_probability(k3, 10, 0.5, 0, 1), InputError);
}

TEST_CASE("clique join law") {
  // if final(g) has a clique W with |W| >= v(H)-1 and every u in U has
  // delta(H)-1 g-neighbours in W, then U ∪ W is a clique in the final graph
  SplitMix64 rng(4242);
  for (const std::string spec : {"clique 4", "clique 5", "cycle 5"}) {
    auto rule = rule_from_spec(spec);
    int k = rule.vertex_count(), delta = rule.min_degree();
    for (int iter = 0; iter < 5; ++iter) {
      int w = k - 1 + static_cast<int>(rng.next_below(2));
      int extras = 2 + static_cast<int>(rng.next_below(3));
      Graph g(w + extras);
      for (int a = 0; a < w; ++a)
        for (int b = a + 1; b < w; ++b) g.add_edge(a, b);
      for (int x = w; x < w + extras; ++x) {
        // delta-1 random clique neighbours
        std::vector<int> picks;
        while (static_cast<int>(picks.size()) < delta - 1) {
          int c = static_cast<int>(rng.next_below(w));
          if (std::find(picks.begin(), picks.end(), c) == picks.end()) picks.push_back(c);
        }
        for (int c : picks) g.add_edge(x, c);
      }
      auto final_g = run_process(g, rule).final_graph;
      for (int a = 0; a < g.vertex_count(); ++a)
        for (int b = a + 1; b < g.vertex_count(); ++b) CHECK(final_g.has_edge(a, b));
    }
  }
}

TEST_CASE("gadget verification for K5") {
  InfectionRule k5(clique_graph(5), "clique 5");
  GadgetParams p;
  p.ell = 18;
  p.min_dist_ef = 5;
  p.min_dist_u = 3;
  auto spec = gadget_graph(k5, p);
  CHECK(spec.stability_ok);
  CHECK(spec.infection_ok);
  CHECK(spec.percolation_ok);
  CHECK(spec.distance_ok);
  CHECK(spec.dist_ef >= 5);

  // the search finds the smallest passing instance deterministically
  auto found = search_gadget(k5, 5, 3);
  CHECK(found.all_ok());
  auto again = search_gadget(k5, 5, 3);
  CHECK(again.vertex_count == found.vertex_count);

  CHECK_THROWS_AS(gadget_graph(rule_from_spec("clique 4"), p), InputError);  // (2,1)-separable
  // asymptotic reference parameters are recorded without instantiation
  auto ref = asymptotic_reference_params(5);
  CHECK(ref.ell == 2543131510416LL);  // ceil((2*5^18-2)/3)
  CHECK(ref.spacing == 25);
}
