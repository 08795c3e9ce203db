// gapred: run, verify and solve gap-reduction pipelines from the shell.
//
// Exit codes: 0 success, 1 usage, 2 parse, 3 domain, 4 cap exceeded,
// 5 verification failure.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gapred/error.hpp"
#include "gapred/expander.hpp"
#include "gapred/generate.hpp"
#include "gapred/io.hpp"
#include "gapred/pipeline.hpp"
#include "gapred/rational.hpp"
#include "gapred/rng.hpp"

namespace {

namespace fs = std::filesystem;
using namespace gapred;

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kDomain = 3, kCap = 4, kVerify = 5 };

struct Options {
  std::string pipeline;
  std::string in;
  std::string out;
  std::string problem;
  std::string kind;
  std::string p = "1";
  std::optional<std::uint64_t> seed;
  int n = 0;
  int d = 0;
  int vars = 0;
  int clauses = 0;
  int edges = 0;
  int arcs = 0;
  int a = 0;
  int b = 0;
  bool oriented = false;
};

std::uint64_t resolve_seed(const Options& o, const PipelineSpec& spec) {
  if (o.seed) return *o.seed;
  return spec.seed.value_or(0);
}

PipelineRun load_and_run(const Options& o, PipelineSpec& spec, std::uint64_t& seed) {
  spec = parse_pipeline_spec(read_text_file(o.pipeline));
  seed = resolve_seed(o, spec);
  Instance input = load_instance(o.in, expected_input(spec, InstanceKind::cnf));
  return run_pipeline(spec, std::move(input), seed);
}

int cmd_reduce(const Options& o) {
  PipelineSpec spec;
  std::uint64_t seed = 0;
  const PipelineRun run = load_and_run(o, spec, seed);
  fs::create_directories(o.out);
  const Instance& out = run.output();
  const fs::path instance_path = fs::path(o.out) / instance_file_name(out.kind);
  write_text_file(instance_path.string(), serialize_instance(out));
  write_text_file((fs::path(o.out) / "provenance.json").string(), provenance_json(spec, run, seed));
  std::cout << "wrote " << instance_path.string() << " (" << to_string(out.kind) << ", n=" << out.size_n()
            << ", m=" << out.size_m() << ", gap " << to_string(out.gap) << ")\n";
  if (out.budget) std::cout << "budget " << *out.budget << "\n";
  return kOk;
}

int cmd_verify(const Options& o) {
  PipelineSpec spec;
  std::uint64_t seed = 0;
  const PipelineRun run = load_and_run(o, spec, seed);
  const VerifyReport report = verify_run(spec, run);
  for (const CheckResult& c : report.checks)
    std::cout << "[" << c.step << "] " << c.step_name << ": " << c.check << ": " << to_string(c.status)
              << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
  const int code = report.exit_code();
  std::cout << (code == 0 ? "verified" : code == kCap ? "unverifiable at this size" : "verification FAILED") << "\n";
  return code;
}

int cmd_solve(const Options& o) {
  const SolveOutput r = solve_problem(o.problem, o.in);
  std::cout << "value " << r.value << "\n" << "witness " << r.witness;
  return kOk;
}

int cmd_gen(const Options& o) {
  Rng rng = Rng(o.seed.value_or(0)).split("gen").split(o.kind);
  std::string text;
  if (o.kind == "e3cnf")
    text = write_dimacs(random_e3cnf(o.vars, o.clauses, rng));
  else if (o.kind == "regular")
    text = write_graph_json(random_regular_graph(o.n, o.d, rng));
  else if (o.kind == "graph")
    text = write_graph_json(random_graph(o.n, o.edges, rng));
  else if (o.kind == "digraph")
    text = write_digraph_json(random_digraph(o.n, o.arcs, o.oriented, rng));
  else if (o.kind == "bipartite")
    text = write_bipartite_json(random_bipartite(o.a, o.b, o.edges, rng));
  else
    throw DomainError("unknown kind '" + o.kind + "' (e3cnf, regular, graph, digraph, bipartite)");
  if (o.out.empty())
    std::cout << text;
  else
    write_text_file(o.out, text);
  return kOk;
}

int cmd_expander(const Options& o) {
  const Rational p = parse_rational(o.p);
  const Expander e = build_expander(o.n, p, o.seed.value_or(0));
  nlohmann::json spec{{"n", e.spec.n},
                      {"p", to_string(e.spec.p)},
                      {"d", e.spec.d},
                      {"certified_h", to_string(e.spec.certified_h)},
                      {"certificate", to_string(e.spec.kind)}};
  std::cout << spec.dump() << "\n";
  if (o.out.empty())
    std::cout << write_graph_json(e.graph);
  else
    write_text_file(o.out, write_graph_json(e.graph));
  return kOk;
}

template <class F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ResourceError& e) {
    std::cerr << "unverifiable at this size: " << e.what() << "\n";
    return kCap;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gapred: gap-preserving reductions with exact verification"};
  app.require_subcommand(1);
  Options o;

  auto* reduce = app.add_subcommand("reduce", "apply a pipeline and write the output instance with provenance.json");
  reduce->add_option("--pipeline", o.pipeline, "pipeline spec (JSON)")->required()->check(CLI::ExistingFile);
  reduce->add_option("--in", o.in, "input instance")->required();
  reduce->add_option("--out", o.out, "output directory")->required();
  reduce->add_option("--seed", o.seed, "seed for every random choice");

  auto* solve = app.add_subcommand("solve", "run an exact solver or recognizer");
  solve->add_option("--problem", o.problem, "problem tag")->required()->check(CLI::IsMember(solve_problems()));
  solve->add_option("--in", o.in, "input instance")->required();

  auto* verify = app.add_subcommand("verify", "apply a pipeline and check every step against the exact solvers");
  verify->add_option("--pipeline", o.pipeline, "pipeline spec (JSON)")->required()->check(CLI::ExistingFile);
  verify->add_option("--in", o.in, "input instance")->required();
  verify->add_option("--seed", o.seed, "seed for every random choice");

  auto* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--kind", o.kind, "e3cnf, regular, graph, digraph or bipartite")->required();
  gen->add_option("--seed", o.seed, "seed");
  gen->add_option("--vars", o.vars, "variables (e3cnf)");
  gen->add_option("--clauses", o.clauses, "clauses (e3cnf)");
  gen->add_option("--n", o.n, "vertices");
  gen->add_option("--d", o.d, "degree (regular)");
  gen->add_option("--edges", o.edges, "edges (graph, bipartite)");
  gen->add_option("--arcs", o.arcs, "arcs (digraph)");
  gen->add_flag("--oriented", o.oriented, "no antiparallel pairs (digraph)");
  gen->add_option("--a", o.a, "left side size (bipartite)");
  gen->add_option("--b", o.b, "right side size (bipartite)");
  gen->add_option("--out", o.out, "output file (default stdout)");

  auto* expander = app.add_subcommand("expander", "build a regular graph with certified edge expansion");
  expander->add_option("--n", o.n, "vertices")->required();
  expander->add_option("--p", o.p, "expansion target as p/q")->required();
  expander->add_option("--seed", o.seed, "seed");
  expander->add_option("--out", o.out, "graph output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (reduce->parsed()) return guarded([&] { return cmd_reduce(o); });
  if (solve->parsed()) return guarded([&] { return cmd_solve(o); });
  if (verify->parsed()) return guarded([&] { return cmd_verify(o); });
  if (gen->parsed()) return guarded([&] { return cmd_gen(o); });
  if (expander->parsed()) return guarded([&] { return cmd_expander(o); });
  return kUsage;
}
