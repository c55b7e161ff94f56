#include "context.hpp"
#include "urysohn/eppa.hpp"

namespace forge {

namespace {

struct EppaArgs {
  std::string input;
  std::string strategy = "greedy";
  int max_size = 8;
  urysohn::Dist bound = 0;
  std::uint64_t max_candidates = 500'000;
  int levels = 2;
};

std::string witness_summary(const urysohn::EppaWitness& w) {
  return "witness size=" + std::to_string(w.witness.size()) + " provenance=" + urysohn::to_string(w.provenance);
}

int finish_outcome(const RunContext& ctx, urysohn::SearchOutcome outcome, const std::string& input) {
  const double elapsed = outcome.stats.elapsed_s;
  outcome.stats.elapsed_s = 0.0;
  if (!outcome.witness) {
    Json body = {{"input", input}, {"stats", urysohn::stats_to_json(outcome.stats)}};
    return ctx.finish(std::move(body),
                      "no witness omega_tried=" + std::to_string(outcome.stats.omega_tried) +
                          " attempts=" + std::to_string(outcome.stats.attempts),
                      kBudgetExhausted, elapsed);
  }
  urysohn::EppaWitness& w = *outcome.witness;
  w.stats.elapsed_s = 0.0;
  const auto report = urysohn::verify_witness(w);
  if (!report.ok()) {
    print_report(report);
    throw urysohn::ConsistencyError("search returned a witness that fails verification");
  }
  Json body = urysohn::witness_to_json(w);
  body["input"] = input;
  return ctx.finish(std::move(body), witness_summary(w), kOk, elapsed);
}

int run_search(const RunContext& ctx, const EppaArgs& args) {
  const auto space = urysohn::space_from_json(urysohn::load_json(args.input));
  urysohn::QuotientBudget budget = ctx.budget();
  budget.strategy =
      args.strategy == "randomized" ? urysohn::QuotientStrategy::randomized : urysohn::QuotientStrategy::greedy;
  return finish_outcome(ctx, urysohn::search_witness_quotient(space, budget), args.input);
}

int run_oracle(const RunContext& ctx, const EppaArgs& args) {
  const auto space = urysohn::space_from_json(urysohn::load_json(args.input));
  urysohn::BruteForceOptions options;
  options.max_size = args.max_size;
  options.value_set = space.value_set();
  options.distance_bound = args.bound > 0 ? args.bound : space.diameter();
  options.max_candidates = args.max_candidates;
  return finish_outcome(ctx, urysohn::brute_force_witness(space, options), args.input);
}

int run_tower(const RunContext& ctx, const EppaArgs& args) {
  const auto space = urysohn::space_from_json(urysohn::load_json(args.input));
  urysohn::Tower tower = urysohn::build_tower(space, args.levels, ctx.budget());
  for (auto& step : tower.steps) step.stats.elapsed_s = 0.0;
  std::string summary = "tower levels=" + std::to_string(tower.levels.size()) + " sizes=";
  for (std::size_t i = 0; i < tower.levels.size(); ++i) {
    summary += (i ? "," : "") + std::to_string(tower.levels[i].size());
  }
  Json body = urysohn::tower_to_json(tower);
  body["input"] = args.input;
  if (!tower.failure.empty()) return ctx.finish(std::move(body), summary + " failure", kBudgetExhausted);
  const auto report = urysohn::verify_tower(tower);
  if (!report.ok()) {
    print_report(report);
    throw urysohn::ConsistencyError("tower fails verification");
  }
  return ctx.finish(std::move(body), summary);
}

}  // namespace

int verify_artifact(const RunContext& ctx, const std::string& path);

void add_eppa_commands(CLI::App& app, RunContext& ctx) {
  auto args = std::make_shared<EppaArgs>();
  auto* eppa = app.add_subcommand("eppa", "EPPA witnesses");
  eppa->require_subcommand(1);

  auto* search = eppa->add_subcommand("search", "Search a witness through free group quotients");
  search->add_option("space", args->input, "Metric-space JSON")->required();
  search->add_option("--strategy", args->strategy, "greedy or randomized")->check(CLI::IsMember({"greedy", "randomized"}));
  bind(search, ctx, "eppa search", [&ctx, args] { return run_search(ctx, *args); });

  auto* verify = eppa->add_subcommand("verify", "Re-verify a witness or tower certificate");
  verify->add_option("certificate", args->input, "Certificate JSON")->required();
  bind(verify, ctx, "eppa verify", [&ctx, args] { return verify_artifact(ctx, args->input); });

  auto* oracle = eppa->add_subcommand("oracle", "Brute-force witness search by one-point extensions");
  oracle->add_option("space", args->input, "Metric-space JSON")->required();
  oracle->add_option("--max-size", args->max_size, "Largest witness size");
  oracle->add_option("--bound", args->bound, "Largest new distance (default: the diameter)");
  oracle->add_option("--max-candidates", args->max_candidates, "Candidate budget");
  bind(oracle, ctx, "eppa oracle", [&ctx, args] { return run_oracle(ctx, *args); });

  auto* tower = eppa->add_subcommand("tower", "Iterate witnesses and record compatible isometry groups");
  tower->add_option("space", args->input, "Metric-space JSON")->required();
  tower->add_option("--levels", args->levels, "Number of witness steps")->check(CLI::PositiveNumber);
  bind(tower, ctx, "eppa tower", [&ctx, args] { return run_tower(ctx, *args); });
}

}  // namespace forge
