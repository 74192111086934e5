#include "p5col/cli.hpp"

#include "p5col/errors.hpp"
#include "p5col/graph.hpp"
#include "p5col/solver.hpp"
#include "p5col/testkit.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace p5col {
namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

std::string format_colouring(const Colouring& c) {
  std::string s;
  for (std::size_t v = 0; v < c.colours.size(); ++v) s += std::to_string(v + 1) + ' ' + std::to_string(c.colours[v]) + '\n';
  return s;
}

/// Parses "v c" lines. Throws std::invalid_argument on malformed lines and
/// returns nullopt when the vertices are not each listed exactly once.
std::optional<Colouring> parse_colouring(const std::string& text, std::size_t n) {
  std::vector<Colour> colours(n, 0);
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::size_t seen = 0;
  bool complete = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    std::istringstream fields(line);
    long long v = 0;
    long long c = 0;
    std::string rest;
    if (!(fields >> v >> c) || (fields >> rest)) {
      throw std::invalid_argument("colouring line " + std::to_string(line_no) + ": expected \"v c\"");
    }
    if (v < 1 || static_cast<std::size_t>(v) > n || c < 1 || c > kMaxColours || colours[v - 1] != 0) {
      complete = false;
      continue;
    }
    colours[v - 1] = static_cast<Colour>(c);
    ++seen;
  }
  if (!complete || seen != n) return std::nullopt;
  return Colouring{std::move(colours)};
}

json one_based(const std::vector<Vertex>& vs) {
  json a = json::array();
  for (Vertex v : vs) a.push_back(v + 1);
  return a;
}

std::string path_text(const P5Certificate& cert) {
  auto p = cert.path;
  if (p.front() > p.back()) std::reverse(p.begin(), p.end());
  std::string s;
  for (Vertex v : p) s += (s.empty() ? "" : " ") + std::to_string(v + 1);
  return s;
}

json metrics_json(const SolveMetrics& m, bool timing) {
  json j = {
      {"instances_created", m.instances_created},
      {"max_depth", m.max_depth},
      {"dominating_searches", m.dominating_searches},
      {"max_stable_pair_leaves", m.max_stable_pair_leaves},
      {"max_dynamic_pair_leaves", m.max_dynamic_pair_leaves},
  };
  if (timing) j["wall_time_ms"] = static_cast<double>(m.wall_time.count()) / 1e6;
  return j;
}

Method parse_method(const std::string& s) {
  if (s == "one") return Method::one;
  if (s == "two") return Method::two;
  throw std::invalid_argument("unknown method '" + s + "'");
}

struct SolveArgs {
  std::string input;
  int k = 0;
  std::string lists;
  std::string method = "two";
  std::string validate = "off";
  std::uint64_t max_instances = 10'000'000;
  unsigned jobs = 1;
  bool trace = false;
  bool quiet = false;
  bool timing = false;
  std::string output;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  json report;
  report["input"] = a.input;
  report["k"] = a.k;
  report["method"] = a.method;

  auto fail = [&](int code, json error) {
    report["decision"] = "error";
    report["error"] = std::move(error);
    out << report.dump(2) << '\n';
    return code;
  };

  const Graph g = read_dimacs_file(a.input);
  if (a.k < 1 || a.k > kMaxColours) throw std::invalid_argument("--k must be in 1.." + std::to_string(kMaxColours));
  const Instance inst = a.lists.empty() ? full_instance(g, a.k) : read_instance(read_file(a.lists), g, a.k);
  report["vertices"] = inst.vertex_count();
  report["edges"] = inst.graph().edges().size();

  const char* env_trace = std::getenv("P5COLOR_TRACE");
  const bool tracing = !a.quiet && (a.trace || (env_trace != nullptr && *env_trace != '\0' && std::string(env_trace) != "0"));

  SolveConfig cfg;
  cfg.method = parse_method(a.method);
  if (a.validate == "full") {
    cfg.validate = Validation::full_p5_check;
  } else if (a.validate != "off") {
    throw std::invalid_argument("--validate must be off or full");
  }
  cfg.max_instances = a.max_instances;
  cfg.jobs = std::max(1U, a.jobs);
  cfg.trace = tracing ? &err : nullptr;

  Decision d;
  try {
    d = solve_list_colouring(inst, cfg);
  } catch (const StructureError& e) {
    json error = {{"kind", to_string(e.kind())}, {"message", e.what()}, {"witness", one_based(e.witness())}};
    if (e.certificate()) {
      error["certificate"] = path_text(*e.certificate());
      err << to_string(e.kind()) << " certificate: " << path_text(*e.certificate()) << '\n';
    }
    return fail(exit_input_error, std::move(error));
  } catch (const BudgetExceeded& e) {
    err << e.what() << '\n';
    return fail(exit_budget, {{"kind", "BudgetExceeded"}, {"message", e.what()}, {"limit", e.limit()}});
  }

  report["metrics"] = metrics_json(d.metrics, a.timing);
  if (!d.sat()) {
    report["decision"] = "unsat";
    out << report.dump(2) << '\n';
    return exit_unsat;
  }
  report["decision"] = "sat";
  report["colouring"] = d.colouring->colours;
  if (!a.output.empty()) {
    write_text(a.output, format_colouring(*d.colouring), out);
    report["colouring_file"] = a.output;
  }
  out << report.dump(2) << '\n';
  return exit_sat;
}

int cmd_check(const std::string& input, std::ostream& out) {
  const Graph g = read_dimacs_file(input);
  if (auto cert = find_induced_p5(g)) {
    out << "not P5-free: induced P5 " << path_text(*cert) << '\n';
    return 1;
  }
  out << "P5-free\n";
  return 0;
}

struct GenArgs {
  std::string family;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double p = 0.5;
  std::size_t clique = 0;
  std::vector<std::size_t> parts;
  std::string output;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  testkit::GenSpec spec;
  spec.family = testkit::family_from_string(a.family);
  spec.n = a.n;
  spec.seed = a.seed;
  spec.p = a.p;
  spec.clique = a.clique;
  spec.parts = a.parts;
  write_text(a.output, write_dimacs(testkit::generate(spec)), out);
  return 0;
}

int cmd_verify(const std::string& graph, const std::string& colouring, int k, const std::string& lists,
               std::ostream& out) {
  const Graph g = read_dimacs_file(graph);
  if (k < 1 || k > kMaxColours) throw std::invalid_argument("--k must be in 1.." + std::to_string(kMaxColours));
  const Instance inst = lists.empty() ? full_instance(g, k) : read_instance(read_file(lists), g, k);
  const auto c = parse_colouring(read_file(colouring), g.vertex_count());
  if (!c) {
    out << "invalid: every vertex must be listed exactly once with a colour in 1.." << kMaxColours << '\n';
    return 1;
  }
  if (!verify_colouring(inst, *c)) {
    out << "invalid: colour outside a list or monochromatic edge\n";
    return 1;
  }
  out << "valid\n";
  return 0;
}

struct BenchArgs {
  std::string corpus;
  int k = 3;
  std::string method = "both";
  bool sublists = false;
  std::uint64_t max_instances = 10'000'000;
  std::string output;
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  if (a.k < 1 || a.k > kMaxColours) throw std::invalid_argument("--k must be in 1.." + std::to_string(kMaxColours));
  std::vector<Method> methods;
  if (a.method == "both") {
    methods = {Method::one, Method::two};
  } else {
    methods = {parse_method(a.method)};
  }
  std::ostringstream csv;
  csv << "graph_id,n,m,method,decision,instances_created,max_depth,millis\n";
  for (const auto& entry : testkit::read_manifest_file(a.corpus)) {
    const Graph g = testkit::generate(entry.spec);
    const Instance inst = a.sublists ? testkit::random_sublists(g, a.k, entry.spec.seed) : full_instance(g, a.k);
    for (Method m : methods) {
      SolveConfig cfg;
      cfg.method = m;
      cfg.max_instances = a.max_instances;
      std::string decision;
      SolveMetrics metrics;
      try {
        const Decision d = solve_list_colouring(inst, cfg);
        decision = d.sat() ? "sat" : "unsat";
        metrics = d.metrics;
      } catch (const StructureError&) {
        decision = "error";
      } catch (const BudgetExceeded&) {
        decision = "budget";
      }
      csv << entry.id << ',' << g.vertex_count() << ',' << g.edges().size() << ',' << to_string(m) << ',' << decision
          << ',' << metrics.instances_created << ',' << metrics.max_depth << ','
          << static_cast<double>(metrics.wall_time.count()) / 1e6 << '\n';
    }
  }
  write_text(a.output, csv.str(), out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact k-colouring and restricted list colouring of P5-free graphs", "p5color"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Decide colourability of a DIMACS graph");
  s->add_option("input", solve.input, "DIMACS .col file")->required();
  s->add_option("--k", solve.k, "Number of colours")->required();
  s->add_option("--lists", solve.lists, "Lists file, lines \"v: c1 c2 ...\"");
  s->add_option("--method", solve.method, "Dependency removal method")->check(CLI::IsMember({"one", "two"}));
  s->add_option("--validate", solve.validate, "Check P5-freeness up front")->check(CLI::IsMember({"off", "full"}));
  s->add_option("--max-instances", solve.max_instances, "Instance budget");
  s->add_option("--jobs", solve.jobs, "Worker threads");
  s->add_flag("--trace", solve.trace, "Trace the search on stderr");
  s->add_flag("--quiet", solve.quiet, "Suppress traces");
  s->add_flag("--timing", solve.timing, "Include wall time in the report");
  s->add_option("-o,--output", solve.output, "Write the colouring here");

  std::string check_input;
  auto* c = app.add_subcommand("check", "Test a DIMACS graph for an induced P5");
  c->add_option("input", check_input, "DIMACS .col file")->required();

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate a P5-free graph");
  g->add_option("--family", gen.family, "split, cograph, multipartite or er_rejection")
      ->required()
      ->check(CLI::IsMember({"split", "cograph", "multipartite", "er_rejection"}));
  g->add_option("--n", gen.n, "Vertex count");
  g->add_option("--seed", gen.seed, "RNG seed");
  g->add_option("--p", gen.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  g->add_option("--clique", gen.clique, "Clique size for split graphs");
  g->add_option("--parts", gen.parts, "Part sizes for multipartite graphs")->delimiter(',');
  g->add_option("-o,--output", gen.output, "Output file (stdout if absent)");

  std::string verify_graph;
  std::string verify_colouring_path;
  int verify_k = 0;
  std::string verify_lists;
  auto* v = app.add_subcommand("verify", "Check a colouring against a graph");
  v->add_option("graph", verify_graph, "DIMACS .col file")->required();
  v->add_option("colouring", verify_colouring_path, "Colouring file, lines \"v c\"")->required();
  v->add_option("--k", verify_k, "Number of colours")->required();
  v->add_option("--lists", verify_lists, "Lists file");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Solve every graph of a corpus manifest");
  b->add_option("--corpus", bench.corpus, "Manifest file")->required();
  b->add_option("--k", bench.k, "Number of colours");
  b->add_option("--method", bench.method, "one, two or both")->check(CLI::IsMember({"one", "two", "both"}));
  b->add_flag("--sublists", bench.sublists, "Random sublists seeded by each graph's seed");
  b->add_option("--max-instances", bench.max_instances, "Instance budget per solve");
  b->add_option("-o,--output", bench.output, "CSV file (stdout if absent)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : exit_input_error;
  }

  try {
    if (s->parsed()) return cmd_solve(solve, out, err);
    if (c->parsed()) return cmd_check(check_input, out);
    if (g->parsed()) return cmd_gen(gen, out);
    if (v->parsed()) return cmd_verify(verify_graph, verify_colouring_path, verify_k, verify_lists, out);
    if (b->parsed()) return cmd_bench(bench, out);
  } catch (const DimacsError& e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  }
  return exit_input_error;
}

}  // namespace p5col
