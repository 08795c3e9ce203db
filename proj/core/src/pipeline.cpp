#include "gapred/pipeline.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gapred/completion.hpp"
#include "gapred/denseola.hpp"
#include "gapred/error.hpp"
#include "gapred/expander.hpp"
#include "gapred/fastchain.hpp"
#include "gapred/io.hpp"
#include "gapred/oracle.hpp"
#include "gapred/rng.hpp"
#include "gapred/satchain.hpp"
#include "gapred/sparseola.hpp"

namespace gapred {

using nlohmann::json;

std::string to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::cnf:
      return "cnf";
    case InstanceKind::graph:
      return "graph";
    case InstanceKind::digraph:
      return "digraph";
    case InstanceKind::bipartite:
      return "bipartite";
  }
  return "unknown";
}

InstanceKind parse_instance_kind(std::string_view name) {
  for (InstanceKind k : {InstanceKind::cnf, InstanceKind::graph, InstanceKind::digraph, InstanceKind::bipartite})
    if (to_string(k) == name) return k;
  throw DomainError("unknown instance kind '" + std::string(name) + "'");
}

std::int64_t Instance::size_n() const {
  switch (kind) {
    case InstanceKind::cnf:
      return cnf.var_count();
    case InstanceKind::graph:
      return graph.n();
    case InstanceKind::digraph:
      return digraph.n();
    case InstanceKind::bipartite:
      return bipartite.a_size() + bipartite.b_size();
  }
  return 0;
}

std::int64_t Instance::size_m() const {
  switch (kind) {
    case InstanceKind::cnf:
      return static_cast<std::int64_t>(cnf.clause_count());
    case InstanceKind::graph:
      return graph.edge_count();
    case InstanceKind::digraph:
      return digraph.arc_count();
    case InstanceKind::bipartite:
      return static_cast<std::int64_t>(bipartite.edges().size());
  }
  return 0;
}

Instance parse_instance(std::string_view text, InstanceKind kind) {
  Instance inst;
  inst.kind = kind;
  switch (kind) {
    case InstanceKind::cnf:
      inst.cnf = parse_dimacs(text);
      break;
    case InstanceKind::graph:
      inst.graph = parse_graph_json(text);
      break;
    case InstanceKind::digraph:
      inst.digraph = parse_digraph_json(text);
      break;
    case InstanceKind::bipartite:
      inst.bipartite = parse_bipartite_json(text);
      break;
  }
  inst.unit = inst.size_m();
  return inst;
}

Instance load_instance(const std::string& path, InstanceKind kind) { return parse_instance(read_text_file(path), kind); }

std::string serialize_instance(const Instance& inst) {
  switch (inst.kind) {
    case InstanceKind::cnf:
      return write_dimacs(inst.cnf);
    case InstanceKind::graph:
      return write_graph_json(inst.graph);
    case InstanceKind::digraph:
      return write_digraph_json(inst.digraph);
    case InstanceKind::bipartite:
      return write_bipartite_json(inst.bipartite);
  }
  return {};
}

std::string instance_file_name(InstanceKind kind) {
  return kind == InstanceKind::cnf ? "instance.cnf" : "instance.json";
}

// ---------------------------------------------------------------------------
// Parameter access

namespace {

std::string param_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::optional<std::string> param(const StepSpec& step, const std::string& key) {
  const auto it = step.params.find(key);
  if (it == step.params.end()) return std::nullopt;
  return it->second;
}

std::int64_t int_param(const StepSpec& step, const std::string& key, std::int64_t fallback) {
  const auto text = param(step, key);
  if (!text) return fallback;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(*text, &used);
    if (used != text->size()) throw std::invalid_argument(*text);
    return v;
  } catch (const std::exception&) {
    throw DomainError("step " + step.name + ": parameter " + key + " must be an integer, got '" + *text + "'");
  }
}

Rational rational_param(const StepSpec& step, const std::string& key, const Rational& fallback) {
  const auto text = param(step, key);
  return text ? parse_rational(*text) : fallback;
}

std::string detail(const StepRecord& r, const std::string& key) {
  const auto it = r.details.find(key);
  if (it == r.details.end()) throw DomainError("record of " + r.name + " lacks '" + key + "'");
  return it->second;
}

std::int64_t detail_int(const StepRecord& r, const std::string& key) { return std::stoll(detail(r, key)); }

std::string str(std::int64_t v) { return std::to_string(v); }

}  // namespace

// ---------------------------------------------------------------------------
// Step table

namespace {

struct StepContext {
  const PipelineSpec& spec;
  const StepSpec& step;
  std::uint64_t seed;
  const std::vector<StepRecord>& previous;
};

using StepFn = std::function<Instance(const Instance&, const StepContext&, StepRecord&)>;

struct StepEntry {
  StepInfo info;
  StepFn apply;
};

Instance make_cnf(CnfFormula f, GapParams gap, std::int64_t unit) {
  Instance out;
  out.kind = InstanceKind::cnf;
  out.cnf = std::move(f);
  out.gap = std::move(gap);
  out.unit = unit;
  return out;
}

Instance make_graph(MultiGraph g, GapParams gap, std::int64_t unit) {
  Instance out;
  out.kind = InstanceKind::graph;
  out.graph = std::move(g);
  out.gap = std::move(gap);
  out.unit = unit;
  return out;
}

Instance make_digraph(Digraph d, GapParams gap, std::int64_t unit) {
  Instance out;
  out.kind = InstanceKind::digraph;
  out.digraph = std::move(d);
  out.gap = std::move(gap);
  out.unit = unit;
  return out;
}

template <class T>
Instance from_gap(const GapInstance<T>& g);
template <>
Instance from_gap(const GapInstance<CnfFormula>& g) {
  return make_cnf(g.instance, g.gap, g.unit);
}
template <>
Instance from_gap(const GapInstance<MultiGraph>& g) {
  return make_graph(g.instance, g.gap, g.unit);
}
template <>
Instance from_gap(const GapInstance<Digraph>& g) {
  return make_digraph(g.instance, g.gap, g.unit);
}

GapInstance<CnfFormula> cnf_in(const Instance& in) { return {in.cnf, in.gap, in.unit}; }
GapInstance<MultiGraph> graph_in(const Instance& in) { return {in.graph, in.gap, in.unit}; }
GapInstance<Digraph> digraph_in(const Instance& in) { return {in.digraph, in.gap, in.unit}; }

std::int64_t adjusted(std::int64_t budget, const StepContext& ctx) {
  return budget + int_param(ctx.step, "budget_adjust", 0);
}

SparseOverrides sparse_overrides(const StepSpec& step) {
  SparseOverrides o;
  o.Z = static_cast<int>(int_param(step, "Z", 0));
  o.phi = rational_param(step, "phi", Rational(0));
  o.p_H = int_param(step, "p_H", 0);
  o.p_Hi = int_param(step, "p_Hi", 0);
  return o;
}

ParamMode sparse_mode(const StepContext& ctx) {
  const auto m = param(ctx.step, "mode");
  if (!m) return ctx.spec.mode;
  if (*m == "paper") return ParamMode::paper;
  if (*m == "desk") return ParamMode::desk;
  throw DomainError("step " + ctx.step.name + ": mode must be paper or desk");
}

AlphaRounding sparse_rounding(const StepSpec& step) {
  const auto r = param(step, "alpha_rounding");
  if (!r || *r == "exact") return AlphaRounding::exact;
  if (*r == "floor") return AlphaRounding::floor;
  throw DomainError("step " + step.name + ": alpha_rounding must be exact or floor");
}

struct SparseSetup {
  SparseOverrides overrides;
  SparseParams params;
  SparseLayout layout;
};

SparseSetup sparse_setup(const Instance& in, const StepSpec& step, ParamMode mode, std::uint64_t seed) {
  SparseSetup s;
  const MultiGraph& g = in.graph;
  const int d_G = g.n() == 0 ? 0 : static_cast<int>(g.degree(0));
  s.overrides = sparse_overrides(step);
  s.params = derive_params(in.gap, d_G, mode, s.overrides);
  s.layout = build_T(g, s.params, seed, s.overrides);
  return s;
}

Instance completion_step(const Instance& in, const StepContext& ctx, StepRecord& rec,
                         CompletionInstance (*fn)(const ChainInstance&)) {
  ChainInstance ci;
  ci.graph = in.bipartite;
  ci.budget = in.budget.value_or(0);
  const CompletionInstance c = fn(ci);
  Instance out = make_graph(c.graph, in.gap, c.graph.edge_count());
  rec.details["target"] = to_string(c.target);
  rec.details["a_size"] = str(in.bipartite.a_size());
  if (in.budget) {
    rec.details["k_in"] = str(*in.budget);
    out.budget = adjusted(*in.budget, ctx);
  }
  return out;
}

const std::vector<StepEntry>& step_table() {
  using K = InstanceKind;
  static const std::vector<StepEntry> table = {
      {{"e3sat_to_nae4sat", K::cnf, K::cnf},
       [](const Instance& in, const StepContext&, StepRecord&) { return from_gap(e3sat_to_nae4sat(cnf_in(in)).output); }},
      {{"nae4sat_to_nae3sat", K::cnf, K::cnf},
       [](const Instance& in, const StepContext&, StepRecord&) {
         return from_gap(nae4sat_to_nae3sat(cnf_in(in)).output);
       }},
      {{"nae3sat_to_multicut", K::cnf, K::graph},
       [](const Instance& in, const StepContext&, StepRecord&) {
         return from_gap(nae3sat_to_multicut(cnf_in(in)).output);
       }},
      {{"multicut_to_simplecut", K::graph, K::graph},
       [](const Instance& in, const StepContext&, StepRecord&) {
         return from_gap(multicut_to_simplecut(graph_in(in)).output);
       }},
      {{"maxcut_to_ola", K::graph, K::graph},
       [](const Instance& in, const StepContext& ctx, StepRecord& rec) {
         const DenseOlaOutput d = maxcut_to_ola(graph_in(in));
         Instance out = make_graph(d.graph, in.gap, d.graph.edge_count());
         out.budget = adjusted(d.budget, ctx);
         rec.details["source_n"] = str(d.source_n);
         rec.details["source_m"] = str(d.source_m);
         rec.details["alpha"] = to_string(in.gap.alpha());
         rec.details["beta"] = to_string(in.gap.beta());
         rec.details["M"] = str(d.M);
         rec.details["yes_threshold"] = str(d.yes_threshold);
         rec.details["threshold_rounded"] = d.threshold_rounded ? "true" : "false";
         return out;
       }},
      {{"ola_to_chain", K::graph, K::bipartite},
       [](const Instance& in, const StepContext& ctx, StepRecord& rec) {
         std::int64_t k = 0;
         std::string source;
         if (param(ctx.step, "k")) {
           k = int_param(ctx.step, "k", 0);
           source = "parameter";
         } else if (in.budget) {
           k = *in.budget;
           source = "previous step";
         } else {
           k = ola_exact(in.graph).value;
           source = "ola_exact";
         }
         const ChainInstance ci = ola_to_chain(in.graph, k);
         Instance out;
         out.kind = K::bipartite;
         out.bipartite = ci.graph;
         out.gap = in.gap;
         out.unit = static_cast<std::int64_t>(ci.graph.edges().size());
         out.budget = adjusted(ci.budget, ctx);
         rec.details["k"] = str(k);
         rec.details["k_source"] = source;
         rec.details["source_n"] = str(ci.source_n);
         rec.details["delta"] = str(ci.source_delta);
         rec.details["source_edges"] = str(ci.source_edges);
         return out;
       }},
      {{"chain_to_fillin", K::bipartite, K::graph},
       [](const Instance& in, const StepContext& ctx, StepRecord& rec) {
         return completion_step(in, ctx, rec, &chain_to_fillin);
       }},
      {{"chain_to_interval", K::bipartite, K::graph},
       [](const Instance& in, const StepContext& ctx, StepRecord& rec) {
         return completion_step(in, ctx, rec, &chain_to_interval);
       }},
      {{"chain_to_proper_interval", K::bipartite, K::graph},
       [](const Instance& in, const StepContext& ctx, StepRecord& rec) {
         return completion_step(in, ctx, rec, &chain_to_proper_interval);
       }},
      {{"chain_to_threshold", K::bipartite, K::graph},
       [](const Instance& in, const StepContext& ctx, StepRecord& rec) {
         return completion_step(in, ctx, rec, &chain_to_threshold);
       }},
      {{"chain_to_trivially_perfect", K::bipartite, K::graph},
       [](const Instance& in, const StepContext& ctx, StepRecord& rec) {
         return completion_step(in, ctx, rec, &chain_to_trivially_perfect);
       }},
      {{"bisection_to_ola", K::graph, K::graph},
       [](const Instance& in, const StepContext& ctx, StepRecord& rec) {
         const ParamMode mode = sparse_mode(ctx);
         const SparseSetup s = sparse_setup(in, ctx.step, mode, ctx.seed);
         const AlphaRounding rounding = sparse_rounding(ctx.step);
         const SparseLayout& layout = s.layout;
         Instance out = make_graph(layout.graph, in.gap, layout.graph.edge_count());
         rec.details["mode"] = to_string(mode);
         rec.details["n"] = str(layout.n);
         rec.details["m"] = str(layout.m);
         rec.details["d_G"] = str(layout.params.d_G);
         rec.details["Z"] = str(layout.params.Z);
         rec.details["block_size"] = str(layout.block_size);
         rec.details["alpha"] = to_string(layout.params.alpha);
         rec.details["alpha_rounding"] = rounding == AlphaRounding::floor ? "floor" : "exact";
         rec.details["d_H"] = layout.params.d_H.str();
         rec.details["degree_bound"] = layout.params.degree_bound().str();
         rec.details["checks_hold"] = layout.params.all_checks_hold() ? "true" : "false";
         const SymbolicBudget symbolic = compute_budget_symbolic(layout, rounding);
         rec.details["budget_constant"] = symbolic.constant.str();
         const MultiGraph h = layout.h_subgraph();
         if (static_cast<std::size_t>(h.n()) <= caps::kOla) {
           const std::int64_t ola_h = ola_exact(h).value;
           rec.details["ola_H"] = str(ola_h);
           out.budget = adjusted(compute_budget(layout, ola_h, rounding), ctx);
         }
         return out;
       }},
      {{"nae3_to_ssat", K::cnf, K::cnf},
       [](const Instance& in, const StepContext& ctx, StepRecord& rec) {
         const SsatReduction r = nae3_to_ssat(cnf_in(in), ctx.seed);
         rec.details["d"] = str(r.d);
         rec.details["profile_ok"] = r.profile.ok ? "true" : "false";
         return from_gap(r.output);
       }},
      {{"ssat_to_fvs", K::cnf, K::digraph},
       [](const Instance& in, const StepContext&, StepRecord& rec) {
         const FvsReduction r = ssat_to_fvs(cnf_in(in));
         rec.details["d"] = str(r.d);
         return from_gap(r.output);
       }},
      {{"fvs_to_fas", K::digraph, K::digraph},
       [](const Instance& in, const StepContext&, StepRecord& rec) {
         const FasReduction r = fvs_to_fas(digraph_in(in));
         rec.details["r"] = str(r.r);
         return from_gap(r.output);
       }},
      {{"subdivide_arcs", K::digraph, K::digraph},
       [](const Instance& in, const StepContext&, StepRecord&) {
         GapInstance<Digraph> g = digraph_in(in);
         g.unit = in.digraph.arc_count();
         return from_gap(subdivide_arcs(g));
       }},
      {{"blowup", K::digraph, K::digraph},
       [](const Instance& in, const StepContext& ctx, StepRecord& rec) {
         const int t = static_cast<int>(int_param(ctx.step, "t", 2));
         rec.details["t"] = str(t);
         Digraph d = blowup(in.digraph, t);
         const std::int64_t m = d.arc_count();
         return make_digraph(std::move(d), in.gap, m);
       }},
      {{"complete_to_tournament", K::digraph, K::digraph},
       [](const Instance& in, const StepContext& ctx, StepRecord& rec) {
         const TournamentCompletion tc = complete_to_tournament(in.digraph, ctx.seed);
         int t = 1;
         std::int64_t core_m = in.digraph.arc_count();
         for (auto it = ctx.previous.rbegin(); it != ctx.previous.rend(); ++it)
           if (it->name == "blowup") {
             t = static_cast<int>(detail_int(*it, "t"));
             core_m = it->in_m;
             break;
           }
         const FastParams fp = tournament_thresholds(in.gap, 0, t, core_m, tc.random_arcs);
         rec.details["random_arcs"] = str(tc.random_arcs);
         rec.details["t"] = str(t);
         rec.details["core_m"] = str(core_m);
         rec.details["low"] = to_string(fp.low);
         rec.details["high"] = to_string(fp.high);
         return make_digraph(tc.tournament, in.gap, in.unit);
       }},
  };
  return table;
}

const StepEntry& find_step(const std::string& name) {
  for (const StepEntry& e : step_table())
    if (e.info.name == name) return e;
  throw DomainError("unknown step '" + name + "'");
}

}  // namespace

const std::vector<StepInfo>& registered_steps() {
  static const std::vector<StepInfo> infos = [] {
    std::vector<StepInfo> v;
    for (const StepEntry& e : step_table()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

InstanceKind expected_input(const PipelineSpec& spec, InstanceKind fallback) {
  if (spec.input) return *spec.input;
  if (!spec.steps.empty()) return find_step(spec.steps.front().name).info.input;
  return fallback;
}

PipelineSpec parse_pipeline_spec(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(std::min(e.byte, text.size())), '\n');
    throw ParseError(std::string("pipeline spec: ") + e.what(), static_cast<std::size_t>(line));
  }
  if (!j.is_object()) throw ParseError("pipeline spec must be a JSON object", 0);

  PipelineSpec spec;
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) throw ParseError("pipeline spec: seed must be a non-negative integer", 0);
    spec.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("gap")) {
    const json& g = j["gap"];
    if (g.is_array() && g.size() == 2)
      spec.gap = GapParams::parse(param_text(g[0]), param_text(g[1]));
    else if (g.is_object() && g.contains("alpha") && g.contains("beta"))
      spec.gap = GapParams::parse(param_text(g["alpha"]), param_text(g["beta"]));
    else
      throw ParseError("pipeline spec: gap must be [alpha, beta] or {\"alpha\", \"beta\"}", 0);
  }
  if (j.contains("mode")) {
    const std::string mode = param_text(j["mode"]);
    if (mode == "paper")
      spec.mode = ParamMode::paper;
    else if (mode == "desk")
      spec.mode = ParamMode::desk;
    else
      throw ParseError("pipeline spec: mode must be paper or desk", 0);
  }
  if (j.contains("input")) spec.input = parse_instance_kind(param_text(j["input"]));
  if (j.contains("steps")) {
    if (!j["steps"].is_array()) throw ParseError("pipeline spec: steps must be an array", 0);
    for (const json& s : j["steps"]) {
      StepSpec step;
      if (s.is_string()) {
        step.name = s.get<std::string>();
      } else if (s.is_object() && s.contains("name") && s["name"].is_string()) {
        step.name = s["name"].get<std::string>();
        for (const auto& [key, value] : s.items())
          if (key != "name") step.params[key] = param_text(value);
      } else {
        throw ParseError("pipeline spec: each step is a name or an object with \"name\"", 0);
      }
      spec.steps.push_back(std::move(step));
    }
  }

  std::optional<InstanceKind> kind = spec.input;
  for (const StepSpec& step : spec.steps) {
    const StepEntry& e = find_step(step.name);
    if (kind && *kind != e.info.input)
      throw DomainError("step " + step.name + " expects " + to_string(e.info.input) + " input but receives " +
                        to_string(*kind));
    kind = e.info.output;
  }
  return spec;
}

PipelineRun run_pipeline(const PipelineSpec& spec, Instance input, std::uint64_t seed) {
  const InstanceKind want = expected_input(spec, input.kind);
  if (input.kind != want)
    throw DomainError("pipeline expects " + to_string(want) + " input, got " + to_string(input.kind));
  input.gap = spec.gap;
  input.unit = input.size_m();
  if (!spec.steps.empty() && spec.steps.front().name == "fvs_to_fas") input.unit = input.size_n();

  PipelineRun run;
  run.stages.push_back(std::move(input));
  const Rng root(seed);
  for (std::size_t i = 0; i < spec.steps.size(); ++i) {
    const StepSpec& step = spec.steps[i];
    const StepEntry& entry = find_step(step.name);
    const Instance& in = run.stages.back();
    StepRecord rec;
    rec.name = step.name;
    rec.seed = root.split(static_cast<std::uint64_t>(i)).split(step.name)();
    rec.in_n = in.size_n();
    rec.in_m = in.size_m();
    rec.gap_in = in.gap;
    const StepContext ctx{spec, step, rec.seed, run.records};
    Instance out = entry.apply(in, ctx, rec);
    rec.out_n = out.size_n();
    rec.out_m = out.size_m();
    rec.gap_out = out.gap;
    rec.budget = out.budget;
    run.records.push_back(std::move(rec));
    run.stages.push_back(std::move(out));
  }
  return run;
}

std::string provenance_json(const PipelineSpec& spec, const PipelineRun& run, std::uint64_t seed) {
  json steps = json::array();
  for (const StepRecord& r : run.records) {
    json s{{"name", r.name},
           {"seed", r.seed},
           {"in", {{"n", r.in_n}, {"m", r.in_m}}},
           {"out", {{"n", r.out_n}, {"m", r.out_m}}},
           {"gap_in", {to_string(r.gap_in.alpha()), to_string(r.gap_in.beta())}},
           {"gap_out", {to_string(r.gap_out.alpha()), to_string(r.gap_out.beta())}},
           {"details", r.details}};
    s["budget"] = r.budget ? json(*r.budget) : json(nullptr);
    steps.push_back(std::move(s));
  }
  const Instance& out = run.output();
  json doc{{"seed", seed},
           {"mode", to_string(spec.mode)},
           {"input_kind", to_string(run.stages.front().kind)},
           {"output_kind", to_string(out.kind)},
           {"gap", {to_string(out.gap.alpha()), to_string(out.gap.beta())}},
           {"unit", out.unit},
           {"steps", steps}};
  doc["budget"] = out.budget ? json(*out.budget) : json(nullptr);
  return doc.dump(2) + "\n";
}

std::optional<std::int64_t> recompute_budget(const StepRecord& r) {
  if (r.name == "maxcut_to_ola") {
    const std::int64_t n = detail_int(r, "source_n");
    const std::int64_t m = detail_int(r, "source_m");
    const Rational alpha = parse_rational(detail(r, "alpha"));
    const Rational beta = parse_rational(detail(r, "beta"));
    const std::int64_t M = to_int64(ceil(Rational(2) / (beta - alpha)));
    const std::int64_t threshold = to_int64(ceil(beta * m));
    return binomial((M + 1) * n + 1, 3) - threshold * M * n;
  }
  if (r.name == "ola_to_chain") {
    const std::int64_t n = detail_int(r, "source_n");
    return detail_int(r, "k") + detail_int(r, "delta") * n * (n - 1) / 2 - 2 * detail_int(r, "source_edges");
  }
  if (r.name.rfind("chain_to_", 0) == 0) {
    if (!r.details.count("k_in")) return std::nullopt;
    return detail_int(r, "k_in");
  }
  if (r.name == "bisection_to_ola") {
    if (!r.details.count("ola_H")) return std::nullopt;
    const AlphaRounding rounding = detail(r, "alpha_rounding") == "floor" ? AlphaRounding::floor : AlphaRounding::exact;
    const BudgetTerms t = budget_terms(static_cast<int>(detail_int(r, "n")), detail_int(r, "m"),
                                       static_cast<int>(detail_int(r, "Z")), static_cast<int>(detail_int(r, "block_size")),
                                       parse_rational(detail(r, "alpha")), rounding);
    return to_int64(t.constant() + detail_int(r, "ola_H"));
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Verification

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "FAIL";
    case CheckStatus::unverifiable:
      return "unverifiable at this size";
  }
  return "unknown";
}

bool VerifyReport::any(CheckStatus status) const {
  return std::any_of(checks.begin(), checks.end(), [status](const CheckResult& c) { return c.status == status; });
}

int VerifyReport::exit_code() const {
  if (any(CheckStatus::fail)) return 5;
  if (any(CheckStatus::unverifiable)) return 4;
  return 0;
}

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

std::string eq_text(std::int64_t got, std::int64_t want) { return str(got) + (got == want ? " == " : " != ") + str(want); }

class Checker {
 public:
  Checker(VerifyReport& report, std::size_t step, std::string name) : report_(report), step_(step), name_(std::move(name)) {}

  void operator()(const std::string& check, const std::function<Outcome()>& body) {
    CheckResult r{step_, name_, check, CheckStatus::pass, {}};
    try {
      const Outcome o = body();
      r.status = o.ok ? CheckStatus::pass : CheckStatus::fail;
      r.detail = o.detail;
    } catch (const ResourceError& e) {
      r.status = CheckStatus::unverifiable;
      r.detail = e.what();
    } catch (const Error& e) {
      r.status = CheckStatus::fail;
      r.detail = e.what();
    }
    report_.checks.push_back(std::move(r));
  }

 private:
  VerifyReport& report_;
  std::size_t step_;
  std::string name_;
};

SolveResult<VertexPartition> best_cut(const MultiGraph& g) {
  if (static_cast<std::size_t>(g.n()) <= caps::kMaxCut) return max_cut_exact(g);
  return max_cut_exact_sparse(g);
}

void verify_step(Checker& check, const PipelineSpec& spec, const StepSpec& step, const StepRecord& rec,
                 const Instance& in, const Instance& out) {
  const std::string& name = step.name;
  if (name == "e3sat_to_nae4sat") {
    check("max_nae(out) = max_sat(in)", [&] {
      const auto sat = max_sat_exact(in.cnf);
      const auto nae = max_nae_exact(out.cnf);
      const Nae4Reduction r = e3sat_to_nae4sat(cnf_in(in));
      const std::int64_t lifted = count_satisfied(in.cnf, r.lift(nae.witness));
      return Outcome{nae.value == sat.value && lifted == sat.value,
                     eq_text(nae.value, sat.value) + ", lifted witness satisfies " + str(lifted)};
    });
  } else if (name == "nae4sat_to_nae3sat") {
    check("max_nae(out) = m + max_nae(in)", [&] {
      const auto a = max_nae_exact(in.cnf);
      const auto b = max_nae_exact(out.cnf);
      const Nae3Reduction r = nae4sat_to_nae3sat(cnf_in(in));
      const std::int64_t lifted = count_nae_satisfied(in.cnf, r.lift(b.witness));
      const std::int64_t m = static_cast<std::int64_t>(in.cnf.clause_count());
      return Outcome{b.value == m + a.value && lifted == a.value,
                     eq_text(b.value, m + a.value) + ", lifted witness NAE-satisfies " + str(lifted)};
    });
  } else if (name == "nae3sat_to_multicut") {
    check("max_cut(out) = 3m + 2 max_nae(in)", [&] {
      const auto nae = max_nae_exact(in.cnf);
      const auto cut = best_cut(out.graph);
      const MultiCutReduction r = nae3sat_to_multicut(cnf_in(in));
      const std::int64_t lifted = count_nae_satisfied(in.cnf, r.lift(cut.witness));
      const std::int64_t m = static_cast<std::int64_t>(in.cnf.clause_count());
      return Outcome{cut.value == 3 * m + 2 * nae.value && lifted == nae.value,
                     eq_text(cut.value, 3 * m + 2 * nae.value) + ", lifted witness NAE-satisfies " + str(lifted)};
    });
  } else if (name == "multicut_to_simplecut") {
    check("max_cut(out) = 2m + max_cut(in)", [&] {
      const auto a = best_cut(in.graph);
      const auto b = best_cut(out.graph);
      const SimpleCutReduction r = multicut_to_simplecut(graph_in(in));
      const std::int64_t lifted = cut_size(in.graph, r.lift(b.witness));
      const std::int64_t m = in.graph.edge_count();
      return Outcome{b.value == 2 * m + a.value && lifted == a.value,
                     eq_text(b.value, 2 * m + a.value) + ", lifted cut " + str(lifted)};
    });
  } else if (name == "maxcut_to_ola") {
    const DenseOlaOutput d = maxcut_to_ola(graph_in(in));
    check("identity: cost(out) + source cost = C(N+1, 3)", [&] {
      const auto ola = ola_exact(out.graph);
      const std::int64_t total = ola.value + source_cost_under(d, ola.witness);
      return Outcome{total == d.complete_cost(), eq_text(total, d.complete_cost())};
    });
    check("forward and backward bounds", [&] {
      const auto cut = max_cut_exact(in.graph);
      const auto ola = ola_exact(out.graph);
      const std::int64_t k = out.budget.value_or(d.budget);
      const bool yes = cut.value >= d.yes_threshold;
      const bool small = ola.value <= k;
      bool ok = !yes || small;
      std::string text = "maxcut " + str(cut.value) + ", OLA " + str(ola.value) + ", budget " + str(k);
      if (small) {
        const std::int64_t lifted = cut_size(in.graph, cut_from_ordering(d, ola.witness));
        ok = ok && Rational(cut.value) > d.gap.alpha() * d.source_m && Rational(lifted) > d.gap.alpha() * d.source_m;
        text += ", lifted cut " + str(lifted);
      }
      return Outcome{ok, text};
    });
  } else if (name == "ola_to_chain") {
    const std::int64_t k = detail_int(rec, "k");
    const ChainInstance ci = ola_to_chain(in.graph, k);
    check("min_chain(out) = OLA(in) + offset", [&] {
      const auto ola = ola_exact(in.graph);
      const auto chain = min_chain_completion_exact(out.bipartite);
      const std::int64_t per_order = chain_cost_for_order(ci, ola.witness);
      return Outcome{chain.value == ola.value + ci.offset() && per_order == chain_claim_value(ci, in.graph, ola.witness),
                     eq_text(chain.value, ola.value + ci.offset()) + ", cost under the OLA witness " + str(per_order)};
    });
  } else if (name == "chain_to_fillin" || name == "chain_to_interval" || name == "chain_to_proper_interval") {
    check("min_fill_in(out) = min_chain(in)", [&] {
      const auto chain = min_chain_completion_exact(in.bipartite);
      const auto fill = min_fill_in_exact(out.graph);
      const MultiGraph filled = with_added_edges(out.graph, fill.witness);
      const bool classes = is_interval(filled) && is_proper_interval(filled);
      return Outcome{fill.value == chain.value && classes,
                     eq_text(fill.value, chain.value) + (classes ? ", witness interval and proper interval"
                                                                 : ", witness fails interval/proper interval")};
    });
  } else if (name == "chain_to_threshold" || name == "chain_to_trivially_perfect") {
    check("min completion(out) = min_chain(in)", [&] {
      const GraphClass cls = name == "chain_to_threshold" ? GraphClass::threshold : GraphClass::trivially_perfect;
      const auto chain = min_chain_completion_exact(in.bipartite);
      const auto best = min_completion_exact(out.graph, cls);
      const bool member = verify_completion(out.graph, best.witness, cls);
      return Outcome{best.value == chain.value && member,
                     eq_text(best.value, chain.value) + (member ? ", witness in class" : ", witness outside the class")};
    });
  } else if (name == "bisection_to_ola") {
    const ParamMode mode = detail(rec, "mode") == "paper" ? ParamMode::paper : ParamMode::desk;
    const SparseSetup s = sparse_setup(in, step, mode, rec.seed);
    const SparseLayout& layout = s.layout;
    check("vertex count n + Z ceil(phi n)", [&] {
      const std::int64_t want = layout.n + static_cast<std::int64_t>(layout.params.Z) * layout.block_size;
      return Outcome{out.graph.n() == want, eq_text(out.graph.n(), want)};
    });
    check("max degree within the closed-form bound", [&] {
      const BigInt bound = layout.params.degree_bound();
      return Outcome{BigInt(out.graph.max_degree()) <= bound,
                     str(out.graph.max_degree()) + " <= " + bound.str()};
    });
    check("forward bound", [&] {
      if (!out.budget) return Outcome{true, "budget symbolic, skipped"};
      const auto bis = min_bisection_exact(in.graph);
      const Rational am = layout.params.alpha * layout.m;
      if (Rational(bis.value) > am) return Outcome{true, "min bisection " + str(bis.value) + " above alpha m, not applicable"};
      const auto ola_h = ola_exact(layout.h_subgraph());
      const std::int64_t cost = cost_of_ordering(out.graph, ordering_from_bisection(layout, bis.witness, ola_h.witness));
      return Outcome{cost <= *out.budget, str(cost) + " <= " + str(*out.budget)};
    });
    check("recovered bisection (reported)", [&] {
      const auto ola = ola_exact(out.graph);
      const VertexPartition p = bisection_from_ordering(layout, ola.witness);
      const StructureReport sr = structure_report(layout, ola.witness);
      const auto bis = min_bisection_exact(in.graph);
      return Outcome{p.count_a() == p.count_b(),
                     "recovered cut " + str(cut_size(in.graph, p)) + " vs min bisection " + str(bis.value) +
                         ", H consecutive " + (sr.h_consecutive ? "yes" : "no") + ", OLA " + str(ola.value)};
    });
  } else if (name == "nae3_to_ssat") {
    const SsatReduction r = nae3_to_ssat(cnf_in(in), rec.seed);
    check("occurrence profile", [&] {
      return Outcome{r.profile.ok && r.profile.d == r.d,
                     r.profile.ok ? "d = " + str(r.d) : r.profile.violations.front()};
    });
    check("max_sat(out) = (1 + 3d) m + max_nae(in)", [&] {
      const auto nae = max_nae_exact(in.cnf);
      const auto sat = max_sat_exact(out.cnf);
      const std::int64_t m = static_cast<std::int64_t>(in.cnf.clause_count());
      const std::int64_t want = (1 + 3 * static_cast<std::int64_t>(r.d)) * m + nae.value;
      const std::int64_t lifted = count_nae_satisfied(in.cnf, r.lift(sat.witness));
      return Outcome{sat.value == want && lifted == nae.value,
                     eq_text(sat.value, want) + ", majority lift NAE-satisfies " + str(lifted)};
    });
  } else if (name == "ssat_to_fvs") {
    const FvsReduction r = ssat_to_fvs(cnf_in(in));
    check("balanced with in/out-degree d + 2", [&] {
      return Outcome{out.digraph.is_balanced_regular(r.d + 2) && !out.digraph.has_loops(), "d = " + str(r.d)};
    });
    check("fvs against satisfiability", [&] {
      const auto sat = max_sat_exact(in.cnf);
      const auto fvs = min_fvs_exact(out.digraph);
      const std::int64_t n = in.cnf.var_count();
      const std::int64_t fvs_size = static_cast<std::int64_t>(fvs.witness.size());
      if (sat.value == static_cast<std::int64_t>(in.cnf.clause_count())) {
        const std::int64_t lifted = count_satisfied(in.cnf, r.lift(fvs.witness));
        return Outcome{fvs_size == n && lifted == sat.value,
                       "satisfiable, " + eq_text(fvs_size, n) + ", lifted assignment satisfies " + str(lifted)};
      }
      return Outcome{fvs_size > n, "unsatisfiable, fvs " + str(fvs_size) + " > " + str(n)};
    });
  } else if (name == "fvs_to_fas") {
    check("min_fas(out) = min_fvs(in)", [&] {
      const auto fvs = min_fvs_exact(in.digraph);
      const auto fas = min_fas_exact(out.digraph);
      const FasReduction r = fvs_to_fas(digraph_in(in));
      const std::vector<int> lifted = r.lift(fas.witness);
      std::vector<bool> removed(static_cast<std::size_t>(in.digraph.n()), false);
      for (int v : lifted) removed[static_cast<std::size_t>(v)] = true;
      const bool ok = fas.value == static_cast<std::int64_t>(fvs.witness.size()) && is_acyclic(in.digraph, removed) &&
                      static_cast<std::int64_t>(lifted.size()) <= fas.value;
      return Outcome{ok, eq_text(fas.value, static_cast<std::int64_t>(fvs.witness.size())) + ", lifted set of size " +
                             str(static_cast<std::int64_t>(lifted.size()))};
    });
  } else if (name == "subdivide_arcs") {
    check("min_fas preserved", [&] {
      const auto a = min_fas_exact(in.digraph);
      const auto b = min_fas_exact(out.digraph);
      return Outcome{a.value == b.value, eq_text(b.value, a.value)};
    });
  } else if (name == "blowup") {
    check("fas(G_t) = t^2 fas(G)", [&] {
      const std::int64_t t = detail_int(rec, "t");
      const auto a = min_fas_exact(in.digraph);
      const auto b = min_fas_exact(out.digraph);
      return Outcome{b.value == t * t * a.value, eq_text(b.value, t * t * a.value)};
    });
  } else if (name == "complete_to_tournament") {
    check("fas sandwich", [&] {
      const std::int64_t random_arcs = detail_int(rec, "random_arcs");
      const auto a = min_fas_exact(in.digraph);
      const auto b = min_fas_exact(out.digraph);
      return Outcome{a.value <= b.value && b.value <= a.value + random_arcs,
                     str(a.value) + " <= " + str(b.value) + " <= " + str(a.value + random_arcs)};
    });
  }
  (void)spec;
}

}  // namespace

VerifyReport verify_run(const PipelineSpec& spec, const PipelineRun& run) {
  VerifyReport report;
  for (std::size_t i = 0; i < run.records.size(); ++i) {
    const StepRecord& rec = run.records[i];
    Checker check(report, i, rec.name);
    if (rec.budget) {
      check("budget re-derived from recorded sizes", [&] {
        const auto want = recompute_budget(rec);
        if (!want) return Outcome{false, "no formula for this step"};
        return Outcome{*want == *rec.budget, eq_text(*rec.budget, *want)};
      });
    }
    check("sizes recorded", [&] {
      const bool ok = rec.in_n == run.stages[i].size_n() && rec.out_n == run.stages[i + 1].size_n() &&
                      rec.in_m == run.stages[i].size_m() && rec.out_m == run.stages[i + 1].size_m();
      return Outcome{ok, "n " + str(rec.in_n) + " -> " + str(rec.out_n) + ", m " + str(rec.in_m) + " -> " + str(rec.out_m)};
    });
    verify_step(check, spec, spec.steps[i], rec, run.stages[i], run.stages[i + 1]);
  }
  return report;
}

// ---------------------------------------------------------------------------
// solve

namespace {

struct Problem {
  std::string tag;
  InstanceKind kind;
  std::function<SolveOutput(const Instance&)> run;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

const std::vector<Problem>& problems() {
  using K = InstanceKind;
  static const std::vector<Problem> list = {
      {"ola", K::graph,
       [](const Instance& in) {
         const auto r = ola_exact(in.graph);
         return SolveOutput{str(r.value), write_ordering(r.witness)};
       }},
      {"maxcut", K::graph,
       [](const Instance& in) {
         const auto r = best_cut(in.graph);
         return SolveOutput{str(r.value), write_partition(r.witness)};
       }},
      {"bisection", K::graph,
       [](const Instance& in) {
         const auto r = min_bisection_exact(in.graph);
         return SolveOutput{str(r.value), write_partition(r.witness)};
       }},
      {"max-sat", K::cnf,
       [](const Instance& in) {
         const auto r = max_sat_exact(in.cnf);
         return SolveOutput{str(r.value), write_assignment(r.witness)};
       }},
      {"max-nae", K::cnf,
       [](const Instance& in) {
         const auto r = max_nae_exact(in.cnf);
         return SolveOutput{str(r.value), write_assignment(r.witness)};
       }},
      {"chain-completion", K::bipartite,
       [](const Instance& in) {
         const auto r = min_chain_completion_exact(in.bipartite);
         return SolveOutput{str(r.value), write_edge_list(r.witness)};
       }},
      {"fill-in", K::graph,
       [](const Instance& in) {
         const auto r = min_fill_in_exact(in.graph);
         return SolveOutput{str(r.value), write_edge_list(r.witness)};
       }},
      {"threshold-completion", K::graph,
       [](const Instance& in) {
         const auto r = min_completion_exact(in.graph, GraphClass::threshold);
         return SolveOutput{str(r.value), write_edge_list(r.witness)};
       }},
      {"trivially-perfect-completion", K::graph,
       [](const Instance& in) {
         const auto r = min_completion_exact(in.graph, GraphClass::trivially_perfect);
         return SolveOutput{str(r.value), write_edge_list(r.witness)};
       }},
      {"fas", K::digraph,
       [](const Instance& in) {
         const auto r = min_fas_exact(in.digraph);
         return SolveOutput{str(r.value), write_ordering(r.witness)};
       }},
      {"fvs", K::digraph,
       [](const Instance& in) {
         const auto r = min_fvs_exact(in.digraph);
         return SolveOutput{str(r.value), write_int_array(r.witness)};
       }},
      {"cheeger", K::graph,
       [](const Instance& in) {
         const auto h = cheeger_exact(in.graph);
         return SolveOutput{h ? to_string(*h) : "inf", "null\n"};
       }},
      {"chordal", K::graph, [](const Instance& in) { return SolveOutput{yes_no(is_chordal(in.graph)), "null\n"}; }},
      {"interval", K::graph, [](const Instance& in) { return SolveOutput{yes_no(is_interval(in.graph)), "null\n"}; }},
      {"proper-interval", K::graph,
       [](const Instance& in) { return SolveOutput{yes_no(is_proper_interval(in.graph)), "null\n"}; }},
      {"threshold", K::graph, [](const Instance& in) { return SolveOutput{yes_no(is_threshold(in.graph)), "null\n"}; }},
      {"trivially-perfect", K::graph,
       [](const Instance& in) { return SolveOutput{yes_no(is_trivially_perfect(in.graph)), "null\n"}; }},
      {"chain", K::bipartite, [](const Instance& in) { return SolveOutput{yes_no(is_chain(in.bipartite)), "null\n"}; }},
  };
  return list;
}

}  // namespace

std::vector<std::string> solve_problems() {
  std::vector<std::string> tags;
  for (const Problem& p : problems()) tags.push_back(p.tag);
  return tags;
}

SolveOutput solve_problem(std::string_view problem, const std::string& path) {
  for (const Problem& p : problems())
    if (p.tag == problem) return p.run(load_instance(path, p.kind));
  throw DomainError("unknown problem '" + std::string(problem) + "'");
}

}  // namespace gapred
