#pragma once

// Chains reductions described by a small JSON spec, records what every step
// did, and checks each step's optimum correspondence with the exact solvers.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gapred/model.hpp"
#include "gapred/rational.hpp"
#include "gapred/sparseola.hpp"

namespace gapred {

enum class InstanceKind { cnf, graph, digraph, bipartite };

std::string to_string(InstanceKind kind);
InstanceKind parse_instance_kind(std::string_view name);

struct Instance {
  InstanceKind kind = InstanceKind::cnf;
  CnfFormula cnf;
  MultiGraph graph;
  Digraph digraph;
  BipartiteGraph bipartite;
  GapParams gap;
  /// The quantity gap fractions refer to (clauses, edges, vertices or arcs).
  std::int64_t unit = 0;
  std::optional<std::int64_t> budget;

  /// Vertices or variables.
  std::int64_t size_n() const;
  /// Edges, arcs or clauses (with multiplicity).
  std::int64_t size_m() const;
};

Instance load_instance(const std::string& path, InstanceKind kind);
Instance parse_instance(std::string_view text, InstanceKind kind);
/// DIMACS for formulas, JSON otherwise.
std::string serialize_instance(const Instance& inst);
/// "instance.cnf" or "instance.json".
std::string instance_file_name(InstanceKind kind);

struct StepSpec {
  std::string name;
  /// Raw parameter values as written in the spec (numbers and fractions as text).
  std::map<std::string, std::string> params;
};

struct PipelineSpec {
  std::vector<StepSpec> steps;
  std::optional<std::uint64_t> seed;
  GapParams gap;
  ParamMode mode = ParamMode::desk;
  std::optional<InstanceKind> input;
};

/// {"input": "cnf", "gap": ["0", "1"], "mode": "desk", "seed": 7,
///  "steps": ["e3sat_to_nae4sat", {"name": "blowup", "t": 2}]}.
/// Unknown steps and incompatible adjacent kinds are DomainErrors.
PipelineSpec parse_pipeline_spec(std::string_view text);

/// Every registered step name with its input and output kinds.
struct StepInfo {
  std::string name;
  InstanceKind input;
  InstanceKind output;
};
const std::vector<StepInfo>& registered_steps();

/// The instance kind a spec expects as input: "input" if given, else the
/// first step's input kind, else `fallback`.
InstanceKind expected_input(const PipelineSpec& spec, InstanceKind fallback);

struct StepRecord {
  std::string name;
  std::uint64_t seed = 0;
  std::int64_t in_n = 0;
  std::int64_t in_m = 0;
  std::int64_t out_n = 0;
  std::int64_t out_m = 0;
  GapParams gap_in;
  GapParams gap_out;
  std::optional<std::int64_t> budget;
  /// Step-specific values needed to re-derive the budget and gap.
  std::map<std::string, std::string> details;
};

struct PipelineRun {
  std::vector<Instance> stages;  // stages[0] is the input, stages[i+1] the output of step i
  std::vector<StepRecord> records;

  const Instance& output() const { return stages.back(); }
};

/// The input's gap and unit are set from the spec before the first step.
PipelineRun run_pipeline(const PipelineSpec& spec, Instance input, std::uint64_t seed);

/// provenance.json content.
std::string provenance_json(const PipelineSpec& spec, const PipelineRun& run, std::uint64_t seed);

/// Re-derives a step's budget from its recorded sizes and parameters alone.
/// nullopt for steps that do not produce a budget.
std::optional<std::int64_t> recompute_budget(const StepRecord& record);

enum class CheckStatus { pass, fail, unverifiable };
std::string to_string(CheckStatus status);

struct CheckResult {
  std::size_t step = 0;
  std::string step_name;
  std::string check;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool any(CheckStatus status) const;
  /// 0 when everything passed, 5 on any failure, else 4 when some check ran
  /// past a solver cap.
  int exit_code() const;
};

/// Checks the optimum correspondence of every step of the run, the witness
/// lifts, and that each recorded budget matches recompute_budget.
VerifyReport verify_run(const PipelineSpec& spec, const PipelineRun& run);

/// Dispatches to the exact solver named by `problem`; the instance kind
/// follows from the problem. Returns the value line and a JSON witness.
struct SolveOutput {
  std::string value;
  std::string witness;
};
SolveOutput solve_problem(std::string_view problem, const std::string& path);
std::vector<std::string> solve_problems();

}  // namespace gapred
