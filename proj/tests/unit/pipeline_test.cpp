#include <gtest/gtest.h>

#include "gapred/error.hpp"
#include "gapred/generate.hpp"
#include "gapred/io.hpp"
#include "gapred/pipeline.hpp"
#include "gapred/satchain.hpp"

namespace gapred {
namespace {

Instance cnf_instance(const CnfFormula& f) { return parse_instance(write_dimacs(f), InstanceKind::cnf); }

Instance graph_instance(const MultiGraph& g) { return parse_instance(write_graph_json(g), InstanceKind::graph); }

const char* kSatchain = R"({"gap": ["1/2", "1"],
  "steps": ["e3sat_to_nae4sat", "nae4sat_to_nae3sat", "nae3sat_to_multicut", "multicut_to_simplecut"]})";

TEST(PipelineSpec, ParsesStepsAndParameters) {
  const PipelineSpec spec = parse_pipeline_spec(R"({"seed": 3, "mode": "paper", "gap": {"alpha": "1/3", "beta": 1},
    "steps": ["fvs_to_fas", {"name": "blowup", "t": 3}]})");
  EXPECT_EQ(spec.seed, 3u);
  EXPECT_EQ(spec.mode, ParamMode::paper);
  EXPECT_EQ(spec.gap.alpha(), Rational(1, 3));
  ASSERT_EQ(spec.steps.size(), 2u);
  EXPECT_EQ(spec.steps[1].params.at("t"), "3");
  EXPECT_EQ(expected_input(spec, InstanceKind::cnf), InstanceKind::digraph);
}

TEST(PipelineSpec, RejectsMismatchAndUnknownSteps) {
  EXPECT_THROW(parse_pipeline_spec(R"({"steps": ["e3sat_to_nae4sat", "blowup"]})"), DomainError);
  EXPECT_THROW(parse_pipeline_spec(R"({"steps": ["nope"]})"), DomainError);
  EXPECT_THROW(parse_pipeline_spec(R"({"steps": [)"), ParseError);
  EXPECT_THROW(parse_pipeline_spec(R"({"gap": ["1", "0"]})"), DomainError);
}

TEST(PipelineSpec, RegistryCoversAllSteps) {
  EXPECT_EQ(registered_steps().size(), 18u);
  for (const StepInfo& s : registered_steps()) EXPECT_FALSE(s.name.empty());
}

TEST(RunPipeline, EmptyIsIdentity) {
  Rng rng(1);
  const CnfFormula f = random_e3cnf(4, 3, rng);
  const PipelineRun run = run_pipeline(parse_pipeline_spec(R"({"input": "cnf"})"), cnf_instance(f), 0);
  EXPECT_EQ(run.output().cnf, f);
  EXPECT_TRUE(run.records.empty());
}

TEST(RunPipeline, SatchainGapMatchesClosedForm) {
  const CnfFormula f(3, {{{0, true}, {1, true}, {2, false}}});
  const PipelineSpec spec = parse_pipeline_spec(kSatchain);
  const PipelineRun run = run_pipeline(spec, cnf_instance(f), 1);
  EXPECT_EQ(run.output().kind, InstanceKind::graph);
  EXPECT_EQ(run.output().gap, satchain_closed_form(spec.gap));
  EXPECT_EQ(run.output().unit, run.output().graph.edge_count());
  const VerifyReport report = verify_run(spec, run);
  EXPECT_EQ(report.exit_code(), 0);
}

TEST(RunPipeline, SameSeedSameBytes) {
  Rng rng(2);
  const CnfFormula f = random_e3cnf(4, 2, rng);
  const PipelineSpec spec = parse_pipeline_spec(R"({"steps": ["nae3_to_ssat", "ssat_to_fvs"]})");
  const PipelineRun a = run_pipeline(spec, cnf_instance(f), 5);
  const PipelineRun b = run_pipeline(spec, cnf_instance(f), 5);
  EXPECT_EQ(serialize_instance(a.output()), serialize_instance(b.output()));
  EXPECT_EQ(provenance_json(spec, a, 5), provenance_json(spec, b, 5));
}

TEST(RunPipeline, KindMismatchIsDomainError) {
  const PipelineSpec spec = parse_pipeline_spec(kSatchain);
  EXPECT_THROW(run_pipeline(spec, graph_instance(MultiGraph(2)), 0), DomainError);
}

TEST(Verify, DenseChainPasses) {
  const MultiGraph g(4, {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
  const PipelineSpec spec = parse_pipeline_spec(R"({"steps": ["maxcut_to_ola"]})");
  const PipelineRun run = run_pipeline(spec, graph_instance(g), 0);
  const VerifyReport report = verify_run(spec, run);
  for (const CheckResult& c : report.checks) EXPECT_EQ(c.status, CheckStatus::pass) << c.check << ": " << c.detail;
  EXPECT_EQ(recompute_budget(run.records[0]), run.output().budget);
}

TEST(Verify, CorruptedBudgetFails) {
  const MultiGraph g(3, {{0, 1, 1}, {1, 2, 1}});
  const PipelineSpec spec = parse_pipeline_spec(R"({"steps": [{"name": "maxcut_to_ola", "budget_adjust": 1}]})");
  const VerifyReport report = verify_run(spec, run_pipeline(spec, graph_instance(g), 0));
  EXPECT_TRUE(report.any(CheckStatus::fail));
  EXPECT_EQ(report.exit_code(), 5);
}

TEST(Verify, OverCapIsUnverifiable) {
  Rng rng(3);
  const MultiGraph g = random_graph(12, 20, rng);
  const PipelineSpec spec = parse_pipeline_spec(R"({"steps": ["maxcut_to_ola"]})");
  const VerifyReport report = verify_run(spec, run_pipeline(spec, graph_instance(g), 0));
  EXPECT_TRUE(report.any(CheckStatus::unverifiable));
  EXPECT_FALSE(report.any(CheckStatus::fail));
  EXPECT_EQ(report.exit_code(), 4);
}

TEST(Verify, CompletionChainPasses) {
  const MultiGraph g(4, {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
  for (const char* target : {"chain_to_fillin", "chain_to_threshold", "chain_to_trivially_perfect"}) {
    const PipelineSpec spec =
        parse_pipeline_spec(std::string(R"({"steps": ["ola_to_chain", ")") + target + R"("]})");
    const PipelineRun run = run_pipeline(spec, graph_instance(g), 0);
    EXPECT_EQ(run.output().budget, 15);
    EXPECT_EQ(verify_run(spec, run).exit_code(), 0) << target;
  }
}

TEST(Verify, SparseDeskPipelinePasses) {
  Rng rng(4);
  const MultiGraph g = random_regular_graph(6, 3, rng);
  const PipelineSpec spec = parse_pipeline_spec(R"({"gap": ["1/2", "1"], "steps": [{"name": "bisection_to_ola",
    "Z": 2, "phi": "1/2", "p_H": 1, "p_Hi": 1, "alpha_rounding": "floor"}]})");
  const PipelineRun run = run_pipeline(spec, graph_instance(g), 2);
  ASSERT_TRUE(run.output().budget.has_value());
  EXPECT_EQ(recompute_budget(run.records[0]), run.output().budget);
  EXPECT_EQ(verify_run(spec, run).exit_code(), 0);
}

TEST(Verify, FastChainPasses) {
  const PipelineSpec spec =
      parse_pipeline_spec(R"({"input": "digraph", "steps": [{"name": "blowup", "t": 2}, "complete_to_tournament"]})");
  const Instance c3 = parse_instance(R"({"n": 3, "edges": [[0, 1], [1, 2], [2, 0]]})", InstanceKind::digraph);
  const PipelineRun run = run_pipeline(spec, c3, 8);
  EXPECT_EQ(run.output().digraph.arc_count(), 15);
  EXPECT_EQ(verify_run(spec, run).exit_code(), 0);
}

TEST(Solve, UnknownProblemIsDomainError) {
  EXPECT_THROW(solve_problem("nope", "/dev/null"), DomainError);
  EXPECT_GE(solve_problems().size(), 15u);
}

}  // namespace
}  // namespace gapred
