#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bootlab/analyzers.hpp"
#include "bootlab/arithmetic.hpp"
#include "bootlab/catalog.hpp"
#include "bootlab/constructions.hpp"
#include "bootlab/engine.hpp"
#include "bootlab/gadget.hpp"
#include "bootlab/graph6.hpp"
#include "bootlab/wrapper.hpp"

using namespace bootlab;

namespace {

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  // edge-list files start with "n m"; a bare graph6 line otherwise
  std::istringstream probe(text);
  long long a, b;
  if (probe >> a >> b) {
    std::istringstream is(text);
    try {
      return read_edge_list(is);
    } catch (const InputError&) {
    }
  }
  std::string line;
  std::istringstream ls(text);
  std::getline(ls, line);
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ')) line.pop_back();
  return decode_graph6(line);
}

InfectionRule resolve_rule(const std::string& spec) {
  if (spec.rfind("file:", 0) == 0) {
    Graph g = load_graph_file(spec.substr(5));
    return InfectionRule(std::move(g), spec);
  }
  return rule_from_spec(spec);
}

void write_graph_files(const Graph& g, const std::string& prefix) {
  {
    std::ofstream out(prefix + ".g6");
    out << encode_graph6(g) << '\n';
  }
  std::ofstream out(prefix + ".edges");
  write_edge_list(out, g);
  std::cout << "wrote " << prefix << ".g6 and " << prefix << ".edges\n";
}

std::vector<double> parse_double_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int v = std::stoi(text);
    return {v, v};
  }
  return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

std::ostream& open_or_stdout(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw InputError("cannot open output file '" + path + "'");
  return file;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bootlab: graph bootstrap percolation laboratory"};
  app.require_subcommand(1);
  bool verification_failed = false;

  // ---- run ----------------------------------------------------------------
  auto* run_cmd = app.add_subcommand("run", "run the H-process on a starting graph");
  std::string run_rule, run_start, run_trace_out;
  long long run_max_rounds = -1;
  run_cmd->add_option("--rule", run_rule, "infection rule spec")->required();
  run_cmd->add_option("--start", run_start, "starting graph file (edge list or graph6)")->required();
  run_cmd->add_option("--max-rounds", run_max_rounds, "round cap; truncation is reported");
  run_cmd->add_option("--trace-out", run_trace_out, "write the trace document here");
  run_cmd->callback([&] {
    auto rule = resolve_rule(run_rule);
    Graph start = load_graph_file(run_start);
    RunOptions opt;
    if (run_max_rounds >= 0) opt.max_rounds = run_max_rounds;
    auto trace = run_process(start, rule, opt);
    if (!run_trace_out.empty()) {
      std::ofstream out(run_trace_out);
      write_trace(out, trace);
    }
    if (trace.truncated) {
      std::cerr << "warning: truncated at " << trace.tau << " rounds before stabilization\n";
      verification_failed = true;
    }
    std::cout << "tau=" << trace.tau << " percolated=" << (trace.percolated ? "true" : "false") << "\n";
  });

  // ---- construct ----------------------------------------------------------
  auto* con = app.add_subcommand("construct", "build the explicit constructions");
  con->require_subcommand(1);
  con->fallthrough();
  std::string out_prefix = "bootlab-out";
  con->add_option("--out", out_prefix, "output file prefix")->capture_default_str();

  auto emit_chain = [&](const Chain& chain, const std::set<ChainCondition>& which) {
    {
      std::ofstream out(out_prefix + ".chain");
      write_chain(out, chain);
    }
    write_graph_files(chain.starting, out_prefix + "-start");
    auto rep = verify_chain_conditions(chain, which);
    auto replay = verify_round_exact(chain);
    std::ostringstream report;
    report << rep.to_string();
    report << "replay " << (replay.pass ? "pass" : "FAIL");
    if (!replay.detail.empty()) report << " (" << replay.detail << ")";
    report << "\n";
    {
      std::ofstream out(out_prefix + ".report");
      out << report.str();
    }
    std::cout << report.str();
    std::cout << "length=" << chain.length() << " vertices=" << chain.ambient_vertices << "\n";
    if (!rep.all_pass() || !replay.pass) verification_failed = true;
  };

  auto* c_chain = con->add_subcommand("simple-chain", "simple clique chain");
  int cc_k = 5, cc_d = 3;
  c_chain->add_option("--k", cc_k, "clique order")->required();
  c_chain->add_option("--d", cc_d, "chain length")->required();
  c_chain->callback([&] {
    Chain chain = simple_clique_chain(cc_k, cc_d);
    emit_chain(chain, {ChainCondition::dagger, ChainCondition::star});
  });

  auto* c_k4 = con->add_subcommand("k4-extremal", "iterated K4-minus-an-edge start");
  int k4_n = 6;
  c_k4->add_option("--n", k4_n)->required();
  c_k4->callback([&] { write_graph_files(k4_extremal(k4_n), out_prefix); });

  auto* c_star = con->add_subcommand("star-extremal", "disjoint stars plus isolated vertices");
  int st_t = 4;
  long long st_n = 10;
  c_star->add_option("--t", st_t)->required();
  c_star->add_option("--n", st_n)->required();
  c_star->callback([&] { write_graph_files(star_extremal(st_t, st_n), out_prefix); });

  auto* c_path = con->add_subcommand("path", "path on n vertices");
  int path_n = 10;
  c_path->add_option("--n", path_n)->required();
  c_path->callback([&] { write_graph_files(path_start(path_n), out_prefix); });

  auto* c_dil = con->add_subcommand("dilation-k5", "linked dilation K5-chains over Z_p");
  long long dil_p = 61;
  bool dil_auto = false;
  std::string dil_set_file;
  int dil_c = 4;
  c_dil->add_option("--prime", dil_p)->required();
  c_dil->add_flag("--auto-set", dil_auto, "search the dilation set");
  c_dil->add_option("--set-file", dil_set_file, "read the dilation set from a file");
  c_dil->add_option("--coeff-bound", dil_c)->capture_default_str();
  c_dil->callback([&] {
    DilationSet set;
    if (dil_auto) {
      set = exhaustive_best_set(dil_p, dil_c);
      std::ofstream out(out_prefix + ".set");
      write_dilation_set(out, set);
      std::cout << "searched set size " << set.elements.size() << "\n";
    } else if (!dil_set_file.empty()) {
      std::ifstream in(dil_set_file);
      if (!in) throw InputError("cannot open set file");
      set = read_dilation_set(in);
    } else {
      throw InputError("dilation-k5: --auto-set or --set-file required");
    }
    Chain chain = dilation_k5_assembly(dil_p, set);
    emit_chain(chain, {ChainCondition::dagger, ChainCondition::star});
  });

  auto* c_lad = con->add_subcommand("ladder-k6", "ladder K6-chains with slopes");
  int lad_seg = 3, lad_count = 2;
  std::string lad_slopes;
  c_lad->add_option("--segments", lad_seg)->required();
  c_lad->add_option("--slope-count", lad_count);
  c_lad->add_option("--slopes", lad_slopes, "explicit comma-separated slopes");
  c_lad->callback([&] {
    std::vector<int> slopes = lad_slopes.empty() ? ladder_default_slopes(lad_count) : parse_int_list(lad_slopes);
    Chain chain = ladder_k6_chain(lad_seg, slopes);
    emit_chain(chain, {ChainCondition::dagger_prime, ChainCondition::star});
  });

  auto* c_cheap = con->add_subcommand("cheap-percolator", "sparse percolating graph");
  std::string cheap_rule;
  int cheap_n = 10;
  c_cheap->add_option("--rule", cheap_rule)->required();
  c_cheap->add_option("--n", cheap_n)->required();
  c_cheap->callback([&] {
    auto rule = resolve_rule(cheap_rule);
    Graph g = cheap_percolator(rule, cheap_n);
    if (!percolates(g, rule)) verification_failed = true;
    write_graph_files(g, out_prefix);
  });

  auto* c_gad = con->add_subcommand("gadget", "trigger gadget with verified clauses");
  std::string gad_rule;
  GadgetParams gad_params;
  bool gad_search = false;
  c_gad->add_option("--rule", gad_rule)->required();
  c_gad->add_flag("--search", gad_search, "search the smallest passing parameters");
  c_gad->add_option("--ell", gad_params.ell);
  c_gad->add_option("--spacing", gad_params.spacing);
  c_gad->add_option("--u-width", gad_params.u_width);
  c_gad->add_option("--min-dist-ef", gad_params.min_dist_ef);
  c_gad->add_option("--min-dist-u", gad_params.min_dist_u);
  c_gad->callback([&] {
    auto rule = resolve_rule(gad_rule);
    GadgetSpec spec;
    if (gad_search) {
      int ef = gad_params.min_dist_ef ? gad_params.min_dist_ef : rule.vertex_count();
      int du = gad_params.min_dist_u ? gad_params.min_dist_u : rule.vertex_count();
      spec = search_gadget(rule, ef, du, 128);
    } else {
      if (gad_params.ell == 0) throw InputError("gadget: --ell or --search required");
      spec = gadget_graph(rule, gad_params);
    }
    std::cout << spec.summary() << "\n";
    if (!spec.all_ok()) verification_failed = true;
    write_graph_files(spec.gamma, out_prefix);
  });

  auto* c_wrap = con->add_subcommand("wrapper", "percolating wrapper preserving the running time");
  std::string wrap_rule, wrap_start;
  uint64_t wrap_seed = 0;
  c_wrap->add_option("--rule", wrap_rule)->required();
  c_wrap->add_option("--start", wrap_start, "starting graph file")->required();
  c_wrap->add_option("--seed", wrap_seed)->required();
  c_wrap->callback([&] {
    auto rule = resolve_rule(wrap_rule);
    Graph g = load_graph_file(wrap_start);
    WrapperOptions wopt;
    wopt.seed = wrap_seed;
    auto rep = slow_percolating_wrapper(rule, g, wopt);
    std::cout << rep.summary() << "\n";
    if (!rep.contract_ok()) verification_failed = true;
    write_graph_files(rep.wrapped, out_prefix);
  });

  auto* c_bip = con->add_subcommand("high-girth-bipartite", "random bipartite graph, right degrees d, girth > k");
  int bip_n = 40, bip_k = 4, bip_d = 2;
  uint64_t bip_seed = 0;
  c_bip->add_option("--n", bip_n)->required();
  c_bip->add_option("--k", bip_k)->required();
  c_bip->add_option("--d", bip_d)->required();
  c_bip->add_option("--seed", bip_seed)->required();
  c_bip->callback([&] {
    Graph b = high_girth_bipartite(bip_n, bip_k, bip_d, bip_seed);
    auto gv = girth(b);
    std::cout << "girth=" << (gv ? std::to_string(*gv) : std::string("acyclic")) << "\n";
    if (gv && *gv <= bip_k) verification_failed = true;
    write_graph_files(b, out_prefix);
  });

  auto* c_pend = con->add_subcommand("pendant-simulation", "pendant-simulation rule and start");
  int pend_len = 4;
  c_pend->add_option("--chain-length", pend_len)->capture_default_str();
  c_pend->callback([&] {
    auto [rule, builder] = pendant_simulation_rule();
    Chain base = simple_rule_chain(InfectionRule(clique_graph(6), "clique 6"), pend_len);
    write_graph_files(rule.graph(), out_prefix + "-rule");
    write_graph_files(builder(base.starting), out_prefix + "-start");
  });

  auto* c_glued = con->add_subcommand("glued-cliques", "two cliques glued along an edge plus one more edge");
  int glued_k = 4;
  c_glued->add_option("--k", glued_k)->required();
  c_glued->callback([&] { write_graph_files(glued_cliques_rule(glued_k).graph(), out_prefix); });

  // ---- search ---------------------------------------------------------------
  auto* search_cmd = app.add_subcommand("search", "exhaustive searches over all n-vertex graphs");
  search_cmd->require_subcommand(1);
  std::string search_rule, search_range, search_out;
  unsigned search_jobs = 1;
  for (auto* sub : {search_cmd->add_subcommand("max-time", "maximum running time M_H(n)"),
                    search_cmd->add_subcommand("weak-sat", "weak saturation number ws(n,H)")}) {
    sub->add_option("--rule", search_rule)->required();
    sub->add_option("--n", search_range, "single n or range a..b")->required();
    sub->add_option("--jobs", search_jobs)->capture_default_str();
    sub->add_option("--out", search_out, "CSV output file (default stdout)");
  }
  search_cmd->callback([&] {
    auto rule = resolve_rule(search_rule);
    auto [lo, hi] = parse_range(search_range);
    bool max_time = search_cmd->get_subcommand("max-time")->parsed();
    std::ofstream file;
    auto& os = open_or_stdout(file, search_out);
    os << "n,value,witness_graph6\n";
    for (int n = lo; n <= hi; ++n) {
      SearchResult res = max_time ? brute_force_max_running_time(rule, n, search_jobs)
                                  : brute_force_weak_saturation(rule, n, search_jobs);
      os << n << ',' << res.optimum << ',' << res.witness_graph6 << '\n';
    }
  });

  // ---- analyze --------------------------------------------------------------
  auto* ana = app.add_subcommand("analyze", "property checkers");
  ana->require_subcommand(1);

  auto* a_insep = ana->add_subcommand("inseparable", "(l,1)-inseparability");
  std::string ai_rule;
  int ai_l = 2;
  a_insep->add_option("--rule", ai_rule)->required();
  a_insep->add_option("--l", ai_l)->capture_default_str();
  a_insep->callback([&] {
    auto rule = resolve_rule(ai_rule);
    bool insep = is_l1_inseparable(rule.graph(), ai_l);
    std::cout << "inseparable(" << ai_l << ",1) " << (insep ? "true" : "false") << "\n";
  });

  auto* a_beh = ana->add_subcommand("behrendian", "Behrendian property");
  std::string ab_rule;
  int ab_cap = 10;
  a_beh->add_option("--rule", ab_rule)->required();
  a_beh->add_option("--cap", ab_cap, "edge cap for the partition enumeration")->capture_default_str();
  a_beh->callback([&] {
    auto rule = resolve_rule(ab_rule);
    auto rep = is_behrendian(rule.graph(), ab_cap);
    const char* verdict = rep.verdict == Ternary::yes ? "true" : rep.verdict == Ternary::no ? "false" : "unknown";
    std::cout << "behrendian " << verdict << "\n";
  });

  auto* a_self = ana->add_subcommand("self-percolates", "does H percolate on itself");
  std::string as_rule;
  a_self->add_option("--rule", as_rule)->required();
  a_self->callback([&] {
    auto rule = resolve_rule(as_rule);
    std::cout << "self-percolates " << (self_percolates(rule) ? "true" : "false") << "\n";
  });

  auto* a_chain = ana->add_subcommand("chain", "chain conditions and replay");
  std::string ac_file, ac_which = "dagger,star";
  bool ac_replay = false;
  a_chain->add_option("--file", ac_file, "chain document")->required();
  a_chain->add_option("--which", ac_which, "comma list of dagger,dagger-prime,star")->capture_default_str();
  a_chain->add_flag("--replay", ac_replay, "also check the engine replay is round-exact");
  a_chain->callback([&] {
    std::ifstream in(ac_file);
    if (!in) throw InputError("cannot open chain file");
    Chain chain = read_chain(in);
    std::set<ChainCondition> which;
    std::stringstream ss(ac_which);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item == "dagger") which.insert(ChainCondition::dagger);
      else if (item == "dagger-prime") which.insert(ChainCondition::dagger_prime);
      else if (item == "star") which.insert(ChainCondition::star);
      else throw InputError("unknown chain condition '" + item + "'");
    }
    auto rep = verify_chain_conditions(chain, which);
    std::cout << rep.to_string();
    if (!rep.all_pass()) verification_failed = true;
    if (ac_replay) {
      auto replay = verify_round_exact(chain);
      std::cout << "replay " << (replay.pass ? "pass" : "FAIL") << "\n";
      if (!replay.pass) verification_failed = true;
    }
  });

  // ---- threshold ------------------------------------------------------------
  auto* thr = app.add_subcommand("threshold", "Monte Carlo percolation probability on G(n,p)");
  std::string thr_rule, thr_ps, thr_out;
  int thr_n = 50, thr_trials = 200;
  uint64_t thr_seed = 0;
  unsigned thr_jobs = 1;
  thr->add_option("--rule", thr_rule)->required();
  thr->add_option("--n", thr_n)->required();
  thr->add_option("--p", thr_ps, "comma-separated edge probabilities")->required();
  thr->add_option("--trials", thr_trials)->capture_default_str();
  thr->add_option("--seed", thr_seed)->required();
  thr->add_option("--jobs", thr_jobs)->capture_default_str();
  thr->add_option("--out", thr_out, "CSV output file (default stdout)");
  thr->callback([&] {
    auto rule = resolve_rule(thr_rule);
    std::ofstream file;
    auto& os = open_or_stdout(file, thr_out);
    os << "p,estimate,lo,hi\n";
    char line[128];
    for (double p : parse_double_list(thr_ps)) {
      auto est = percolation_probability(rule, thr_n, p, thr_trials, thr_seed, thr_jobs);
      std::snprintf(line, sizeof line, "%.9g,%.6f,%.6f,%.6f\n", est.p, est.estimate, est.lo, est.hi);
      os << line;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return verification_failed ? 2 : 0;
}
