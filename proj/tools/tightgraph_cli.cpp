// Batch front end: graph6 records on stdin (one per line), JSON on stdout,
// diagnostics on stderr. Exit 0 on success, 1 on domain errors, 2 on usage.

#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tightgraph/decompose.hpp"
#include "tightgraph/enumerate.hpp"
#include "tightgraph/graph6.hpp"
#include "tightgraph/random_build.hpp"
#include "tightgraph/reduce.hpp"
#include "tightgraph/triangle_seq.hpp"

using nlohmann::json;

namespace {

std::string chomp(std::string line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
  return line;
}

int for_each_input_line(const std::function<void(const std::string&)>& fn) {
  std::string line;
  while (std::getline(std::cin, line)) {
    line = chomp(line);
    if (line.empty()) continue;
    fn(line);
  }
  return 0;
}

json edge_list_json(const std::vector<tg::Edge>& edges) {
  json arr = json::array();
  for (const auto& e : edges) arr.push_back(json::array({e.u, e.v}));
  return arr;
}

int run_check(int l) {
  tg::SparsityParams p(l);
  return for_each_input_line([&](const std::string& line) {
    tg::SimpleGraph g = tg::read_graph6(line);
    const bool sparse = tg::is_sparse(g, p);
    const bool tight = sparse && tg::freedom_count(g) == p.l;
    json j{{"graph6", line},
           {"l", l},
           {"sparse", sparse},
           {"tight", tight},
           {"verdict", tight ? "tight" : (sparse ? "sparse" : "not-sparse")}};
    std::cout << j.dump() << "\n";
  });
}

int run_reduce(int l) {
  tg::SparsityParams p(l);
  return for_each_input_line([&](const std::string& line) {
    tg::SimpleGraph g = tg::read_graph6(line);
    auto cert = tg::deconstruct(g, p);
    std::cout << tg::certificate_to_json(cert) << "\n";
  });
}

int run_replay() {
  return for_each_input_line([&](const std::string& line) {
    auto cert = tg::certificate_from_json(line);
    std::cout << tg::write_graph6(tg::replay(cert)) << "\n";
  });
}

int run_decompose(int l, std::optional<std::uint64_t> seed) {
  tg::SparsityParams p(l);
  std::mt19937_64 rng(seed.value_or(0));
  return for_each_input_line([&](const std::string& line) {
    tg::SimpleGraph g = tg::read_graph6(line);
    tg::Decomposition d;
    if (l == 3 && seed) {
      // pick the adjoined pair at random; doubling an existing edge is fine
      const int n = g.vertex_count();
      tg::Vertex u = static_cast<tg::Vertex>(tg::bounded_draw(rng, n));
      tg::Vertex v = static_cast<tg::Vertex>(tg::bounded_draw(rng, n - 1));
      if (v >= u) ++v;
      d = tg::decompose(g, p, tg::make_edge(u, v));
    } else {
      d = tg::decompose(g, p);
    }
    json j{{"graph6", line},
           {"l", l},
           {"T", edge_list_json(d.tree_edges)},
           {"P", edge_list_json(d.map_edges)}};
    if (d.added_edge) j["added_edge"] = json::array({d.added_edge->u, d.added_edge->v});
    std::cout << j.dump() << "\n";
  });
}

int run_enumerate(int l, int n_max, bool oracle, bool graphs, int jobs) {
  tg::SparsityParams p(l);
  if (oracle) {
    auto rep = tg::compare_generators(n_max, p, jobs);
    json counts = json::object();
    json oracle_counts = json::object();
    for (const auto& [n, pair] : rep.counts) {
      counts[std::to_string(n)] = pair.first;
      oracle_counts[std::to_string(n)] = pair.second;
    }
    json j{{"l", l},
           {"n_max", n_max},
           {"counts", counts},
           {"oracle_counts", oracle_counts},
           {"match", rep.equal},
           {"mismatches", rep.mismatches}};
    std::cout << j.dump() << "\n";
    return rep.equal ? 0 : 1;
  }
  auto corpus = tg::generate_by_moves(n_max, p, jobs);
  if (graphs) {
    for (const auto& [n, forms] : corpus)
      for (const auto& f : forms) std::cout << tg::write_graph6(tg::from_canonical(f)) << "\n";
    return 0;
  }
  json counts = json::object();
  for (const auto& [n, forms] : corpus) counts[std::to_string(n)] = forms.size();
  json j{{"l", l}, {"n_max", n_max}, {"counts", counts}};
  std::cout << j.dump() << "\n";
  return 0;
}

int run_verify_lemmas(int l, int n_max, bool from_stdin, int jobs) {
  tg::SparsityParams p(l);
  std::vector<tg::SimpleGraph> corpus;
  if (from_stdin) {
    for_each_input_line(
        [&](const std::string& line) { corpus.push_back(tg::read_graph6(line)); });
    for (const auto& g : corpus)
      if (!tg::is_tight(g, p))
        throw std::invalid_argument("corpus graph is not tight: " + tg::write_graph6(g));
  } else {
    for (const auto& [n, forms] : tg::generate_by_moves(n_max, p, jobs))
      for (const auto& g : tg::decode_level(forms)) corpus.push_back(g);
  }
  bool all_pass = true;
  std::cout << "[";
  bool first = true;
  for (const auto& rep : tg::verify_structure_suite(corpus, p, jobs)) {
    if (!first) std::cout << ",";
    first = false;
    std::cout << tg::report_to_json(rep);
    all_pass = all_pass && rep.passed();
  }
  std::cout << "]\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(2,l)-tight graph toolkit: recognition, certified construction "
               "sequences, spanning decompositions, enumeration"};
  app.require_subcommand(1);

  int l = 2;
  int n_max = 7;
  int jobs = 1;
  bool oracle = false;
  bool graphs = false;
  bool stdin_corpus = false;
  std::optional<std::uint64_t> seed;

  auto add_l = [&](CLI::App* cmd) {
    cmd->add_option("--l", l, "sparsity parameter l (1, 2 or 3)")
        ->required()
        ->check(CLI::Range(1, 3));
  };

  auto* check = app.add_subcommand("check", "print sparse/tight verdict per input graph");
  add_l(check);

  auto* reduce = app.add_subcommand(
      "reduce", "deconstruct each tight input graph; emits a certificate JSON per line");
  add_l(reduce);

  auto* replay = app.add_subcommand(
      "replay", "rebuild graphs from certificate JSON lines; emits graph6 per line");

  auto* decompose = app.add_subcommand(
      "decompose", "emit spanning tree/map decompositions as JSON per line");
  add_l(decompose);
  decompose->add_option("--seed", seed,
                        "randomize the adjoined edge for l=3 (default: first non-edge)");

  auto* enumerate = app.add_subcommand("enumerate", "generate all tight graphs up to --n");
  add_l(enumerate);
  enumerate->add_option("--n", n_max, "largest vertex count")->required();
  enumerate->add_flag("--oracle", oracle, "also run the brute-force generator and compare");
  enumerate->add_flag("--graphs", graphs, "stream graph6 records instead of counts");
  enumerate->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand(
      "verify-lemmas", "check the triangle-sequence structure suite over a corpus");
  add_l(verify);
  verify->add_option("--n", n_max, "enumerate the corpus up to this order");
  verify->add_flag("--stdin", stdin_corpus, "read the corpus from stdin instead");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(check)) return run_check(l);
    if (app.got_subcommand(reduce)) return run_reduce(l);
    if (app.got_subcommand(replay)) return run_replay();
    if (app.got_subcommand(decompose)) return run_decompose(l, seed);
    if (app.got_subcommand(enumerate)) return run_enumerate(l, n_max, oracle, graphs, jobs);
    if (app.got_subcommand(verify)) return run_verify_lemmas(l, n_max, stdin_corpus, jobs);
  } catch (const tg::Graph6Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
