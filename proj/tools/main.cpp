#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "lpl/cayley.hpp"
#include "lpl/connectivity.hpp"
#include "lpl/constructors.hpp"
#include "lpl/group.hpp"
#include "lpl/io.hpp"
#include "lpl/replacement.hpp"
#include "lpl/serialize.hpp"
#include "lpl/verifier.hpp"

namespace {

using namespace lpl;

struct BuiltGraph {
  Graph graph;
  std::string family;
  std::vector<std::string> vertex_names;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

std::string sdp_vertex_name(int id, int n) {
  int a = sdp_first(id, n), b = sdp_second(id, n);
  std::string bits;
  for (int p = 0; p < n; ++p) bits += (a >> p & 1) ? '1' : '0';
  return "(" + bits + "," + std::to_string(b) + ")";
}

BuiltGraph build_ccc(int n) {
  Graph q = hypercube(n);
  RotationMap rot = default_rotation_map(q, RotationStrategy::HypercubeDims);
  auto product = replacement_product(q, rot, cycle(n));
  return {std::move(product.graph), "ccc", {}};
}

BuiltGraph build_cayley_sdp_graph(int n, const std::vector<int>& gens) {
  std::vector<int> s_b;
  for (int s : gens) {
    if (s < 1 || s >= n) throw CLI::ValidationError("--gens must lie in 1..n-1");
    s_b.push_back(s);
    s_b.push_back((n - s) % n);
  }
  std::vector<int> s_a;
  for (int i = 0; i < n; ++i) s_a.push_back(1 << i);
  auto built = build_sdp_cayley_spec(boolean_vector_group(n), s_a,
                                     cyclic_group(n), s_b, shift_action(n), 1);
  BuiltGraph out{cayley_graph(built.spec), "cayley-sdp", {}};
  out.vertex_names.reserve(out.graph.vertex_count);
  for (int v = 0; v < out.graph.vertex_count; ++v)
    out.vertex_names.push_back(sdp_vertex_name(v, n));
  return out;
}

BuiltGraph build_named_family(const std::string& family, int n, int d,
                              const std::vector<int>& gens, std::uint64_t seed) {
  if (family == "circulant") return {circulant(n, gens), family, {}};
  if (family == "hypercube") return {hypercube(n), family, {}};
  if (family == "complete") return {complete(n), family, {}};
  if (family == "cycle") return {cycle(n), family, {}};
  if (family == "star") return {star(n), family, {}};
  if (family == "random-regular") return {random_regular(n, d, seed), family, {}};
  if (family == "ccc") return build_ccc(n);
  if (family == "cayley-sdp") return build_cayley_sdp_graph(n, gens);
  throw CLI::ValidationError("unknown family: " + family);
}

// "circulant:8:1,3", "hypercube:3", "random-regular:8:3:1", or a file path.
BuiltGraph parse_graph_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) {
    std::ifstream probe(spec);
    if (probe.good()) return {read_edge_list_file(spec), "file:" + spec, {}};
    // fall through: maybe a family without parameters (none exist today)
    throw CLI::ValidationError("cannot open graph file: " + spec);
  }
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  const std::string& family = parts[0];
  int n = parts.size() > 1 ? std::stoi(parts[1]) : 0;
  if (family == "circulant" || family == "cayley-sdp") {
    if (parts.size() < 3) throw CLI::ValidationError(family + " needs n and gens");
    return build_named_family(family, n, 0, parse_int_list(parts[2]), 1);
  }
  if (family == "random-regular") {
    if (parts.size() < 3) throw CLI::ValidationError("random-regular needs n and d");
    std::uint64_t seed = parts.size() > 3 ? std::stoull(parts[3]) : 1;
    return build_named_family(family, n, std::stoi(parts[2]), {}, seed);
  }
  return build_named_family(family, n, 0, {}, 1);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
  }
}

RotationStrategy parse_rotation(const std::string& name) {
  if (name == "sorted") return RotationStrategy::SortedNeighbors;
  if (name == "dims") return RotationStrategy::HypercubeDims;
  if (name == "gens") return RotationStrategy::CirculantGens;
  throw CLI::ValidationError("unknown rotation strategy: " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lpl: edge-connectivity and restricted edge-connectivity of "
               "replacement products and Cayley graphs"};
  app.require_subcommand(1);

  int jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  app.add_option("--jobs", jobs, "worker threads for the cut-pair loop")
      ->envname("LPL_JOBS");

  std::string family, input, out_path, format = "edge-list", rotation = "sorted";
  std::string g1_spec, g2_spec;
  int n = 0, d = 0;
  std::string gens_text;
  std::uint64_t seed = 1;
  bool replacement_mode = false;

  auto add_family_opts = [&](CLI::App* cmd, bool with_input) {
    if (with_input)
      cmd->add_option("input", input, "edge-list file to read");
    cmd->add_option("--family", family,
                    "circulant|hypercube|complete|cycle|star|random-regular|ccc|cayley-sdp");
    cmd->add_option("--n", n, "order parameter");
    cmd->add_option("--d", d, "degree (random-regular)");
    cmd->add_option("--gens", gens_text, "comma-separated generators");
    cmd->add_option("--seed", seed, "seed (random-regular)");
  };

  auto* construct = app.add_subcommand("construct", "build a graph and print it");
  add_family_opts(construct, false);
  construct->add_flag("--replacement", replacement_mode,
                      "build a replacement product from --g1 and --g2");
  construct->add_option("--g1", g1_spec, "first factor (file or family:args)");
  construct->add_option("--g2", g2_spec, "second factor (file or family:args)");
  construct->add_option("--rotation", rotation, "sorted|dims|gens (default sorted)");
  construct->add_option("--format", format, "edge-list|dot|json");
  construct->add_option("--out", out_path, "write to file instead of stdout");

  bool transitive = false, brute_check = false;
  auto* analyze = app.add_subcommand("analyze", "exact connectivity report");
  add_family_opts(analyze, true);
  analyze->add_flag("--transitive", transitive,
                    "restrict the first contracted edge to vertex 0 "
                    "(sound on vertex-transitive graphs)");
  analyze->add_flag("--brute-force-check", brute_check,
                    "cross-check lambda' against subset enumeration");
  analyze->add_option("--out", out_path, "write to file instead of stdout");

  std::string suite;
  int count = 50;
  int p14_d = 0, p14_s = 0;
  auto* verify = app.add_subcommand("verify", "check bounds and golden values");
  verify->add_option("--suite", suite, "paper|random|cut-vertex");
  verify->add_option("--seed", seed, "seed for randomized suites");
  verify->add_option("--count", count, "instance count for randomized suites");
  verify->add_option("--d", p14_d, "degree for --problem-1-4");
  verify->add_option("--s", p14_s, "gap for --problem-1-4");
  bool problem14 = false;
  verify->add_flag("--problem-1-4", problem14,
                   "build the degree-d instance with lambda' = d+s");
  verify->add_option("--out", out_path, "write to file instead of stdout");

  auto* atom = app.add_subcommand("atom", "minimum-cardinality fragment");
  add_family_opts(atom, true);
  atom->add_flag("--transitive", transitive,
                 "restrict the first contracted edge to vertex 0");
  atom->add_option("--out", out_path, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    auto build_input = [&]() -> BuiltGraph {
      if (!input.empty() && !family.empty())
        throw CLI::ValidationError("give either an input file or --family, not both");
      if (!input.empty()) return {read_edge_list_file(input), "file:" + input, {}};
      if (family.empty())
        throw CLI::ValidationError("provide an input file or --family");
      return build_named_family(family, n, d, parse_int_list(gens_text), seed);
    };
    auto render = [&](const BuiltGraph& built) {
      if (format == "json")
        return graph_json(built.graph, built.family, built.vertex_names);
      if (format == "dot") return to_dot(built.graph);
      if (format == "edge-list") return to_edge_list(built.graph);
      throw CLI::ValidationError("unknown format: " + format);
    };

    if (construct->parsed()) {
      BuiltGraph built;
      std::string text;
      if (replacement_mode) {
        if (g1_spec.empty() || g2_spec.empty())
          throw CLI::ValidationError("--replacement needs --g1 and --g2");
        BuiltGraph a = parse_graph_spec(g1_spec);
        BuiltGraph b = parse_graph_spec(g2_spec);
        RotationMap rot = a.graph.rotation && rotation == "sorted" &&
                                  !construct->count("--rotation")
                              ? *a.graph.rotation
                              : default_rotation_map(a.graph, parse_rotation(rotation));
        auto product = replacement_product(a.graph, rot, b.graph);
        long cross = 0;
        for (const auto& [u, v] : product.graph.edges())
          if (u / b.graph.vertex_count != v / b.graph.vertex_count) ++cross;
        if (format == "json") {
          text = replacement_json(product, cross);
        } else {
          text = render({product.graph, "replacement-product", {}});
        }
        emit(text, out_path);
        return 0;
      }
      built = build_input();
      emit(render(built), out_path);
      return 0;
    }

    if (analyze->parsed()) {
      BuiltGraph built = build_input();
      LambdaPrimeOptions opts;
      opts.use_vertex_transitivity = transitive;
      opts.jobs = jobs;
      auto report = classify(built.graph, opts);
      std::string violations = report_violations(built.graph, report);
      int brute = -1;
      if (brute_check) {
        brute = restricted_edge_connectivity_bruteforce(built.graph,
                                                        opts.brute_force_threshold);
        if (!report.lambda_prime || *report.lambda_prime != brute) {
          if (!violations.empty()) violations += "; ";
          violations += "brute-force lambda' mismatch";
        }
      }
      emit(analyze_json(built.graph, report, violations, brute), out_path);
      return violations.empty() ? 0 : 1;
    }

    if (atom->parsed()) {
      BuiltGraph built = build_input();
      LambdaPrimeOptions opts;
      opts.use_vertex_transitivity = transitive;
      opts.jobs = jobs;
      auto result = lambda_prime_atom(built.graph, opts);
      emit(atom_json(built.graph, result), out_path);
      return 0;
    }

    if (verify->parsed()) {
      LambdaPrimeOptions opts;
      opts.jobs = jobs;
      BoundReport report;
      std::string label;
      if (problem14) {
        label = "problem-1-4";
        opts.use_vertex_transitivity = true;  // the instance is a Cayley graph
        std::cerr << "building degree-" << p14_d << " instance with gap " << p14_s
                  << " (order " << ((long)(p14_d + p14_s) << (p14_d + p14_s))
                  << ")...\n";
        report = build_lambda_prime_gap(p14_d, p14_s, opts).report;
      } else if (suite == "paper") {
        label = "paper";
        report = verify_golden_values(opts);
      } else if (suite == "random") {
        label = "random";
        report = random_product_sweep(seed, count, opts);
      } else if (suite == "cut-vertex") {
        label = "cut-vertex";
        report = search_cut_vertex_witness(seed, count);
      } else {
        throw CLI::ValidationError("choose --suite paper|random|cut-vertex "
                                   "or --problem-1-4");
      }
      emit(bound_report_json(report, label), out_path);
      return report.all_hold() ? 0 : 1;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
