#include <iostream>

#include "context.hpp"
#include "urysohn/katetov.hpp"
#include "urysohn/sphere_witness.hpp"
#include "urysohn/trees.hpp"

namespace forge {

namespace {

struct SpaceArgs {
  std::string input;
  urysohn::Dist bound = 0;
  int steps = 1;
  std::string strategy = "uniform";
  int m = 6;
  int k = 2;
  int n = 4;
  bool realize = false;
};

int run_validate(const RunContext& ctx, const SpaceArgs& args) {
  const Json j = urysohn::load_json(args.input);
  try {
    const urysohn::FiniteMetricSpace space = urysohn::space_from_json(j);
    return ctx.finish({{"input", args.input}, {"ok", true}, {"violations", Json::array()}},
                      "valid name=" + space.name() + " points=" + std::to_string(space.size()));
  } catch (const urysohn::InvalidSpace& e) {
    print_report(e.report());
    return ctx.finish({{"input", args.input}, {"ok", false}, {"violations", report_to_json(e.report())}},
                      "invalid violations=" + std::to_string(e.report().size()), kInvalidInput);
  }
}

int run_enumerate(const RunContext& ctx, const SpaceArgs& args) {
  const auto space = urysohn::space_from_json(urysohn::load_json(args.input));
  const auto functions = urysohn::enumerate_katetov(space, space.value_set(), args.bound);
  return ctx.finish({{"input", args.input}, {"bound", args.bound}, {"count", functions.size()}, {"functions", functions}},
                    "count=" + std::to_string(functions.size()));
}

int run_grow(const RunContext& ctx, const SpaceArgs& args) {
  const auto seed = urysohn::space_from_json(urysohn::load_json(args.input));
  urysohn::GrowthOptions options;
  options.bound = args.bound;
  options.seed = ctx.seed;
  options.strategy = args.strategy == "coverage" ? urysohn::GrowthStrategy::coverage : urysohn::GrowthStrategy::uniform;
  const auto result = urysohn::grow_fragment(seed, seed.value_set(), args.steps, options);
  Json body = urysohn::space_to_json(result.space);
  body["steps_taken"] = result.steps_taken;
  body["notice"] = result.notice;
  return ctx.finish(std::move(body), "points=" + std::to_string(result.space.size()) +
                                         " steps=" + std::to_string(result.steps_taken));
}

int run_sphere(const RunContext& ctx, const SpaceArgs& args) {
  const auto w = urysohn::build_sphere_witness(args.m, args.k, args.n, ctx.workers);
  const auto report = urysohn::validate_sphere_witness(w);
  Json body = urysohn::sphere_witness_to_json(w);
  body["valid"] = report.ok();
  std::string summary = "m=" + std::to_string(w.m) + " k=" + std::to_string(w.k) + " N=" + std::to_string(w.n) +
                        " functions=" + std::to_string(w.family.size()) + " valid=" + (report.ok() ? "1" : "0");
  if (args.realize) {
    const auto r = urysohn::realize_t_epsilon(w);
    Json points = Json::object();
    for (const auto& [bits, idx] : r.points) points[bits] = r.space.label(idx);
    body["realization"] = {{"space", urysohn::space_to_json(r.space)}, {"points", points}};
    summary += " realized=" + std::to_string(r.space.size());
  }
  if (!report.ok()) {
    print_report(report);
    return ctx.finish(std::move(body), summary, kConsistency);
  }
  return ctx.finish(std::move(body), summary);
}

}  // namespace

int verify_artifact(const RunContext& ctx, const std::string& path);

void add_space_commands(CLI::App& app, RunContext& ctx) {
  auto args = std::make_shared<SpaceArgs>();

  auto* validate = app.add_subcommand("validate", "Validate a metric-space file");
  validate->add_option("space", args->input, "Metric-space JSON")->required();
  bind(validate, ctx, "validate", [&ctx, args] { return run_validate(ctx, *args); });

  auto* enumerate = app.add_subcommand("enumerate-katetov", "List Katetov functions with values up to a bound");
  enumerate->add_option("space", args->input, "Metric-space JSON")->required();
  enumerate->add_option("--bound", args->bound, "Largest value (scaled units)")->required();
  bind(enumerate, ctx, "enumerate-katetov", [&ctx, args] { return run_enumerate(ctx, *args); });

  auto* grow = app.add_subcommand("grow", "Grow a fragment by one-point Katetov extensions");
  grow->add_option("space", args->input, "Seed metric-space JSON")->required();
  grow->add_option("--steps", args->steps, "Number of points to add")->check(CLI::NonNegativeNumber);
  grow->add_option("--bound", args->bound, "Largest value of the added distances")->required();
  grow->add_option("--strategy", args->strategy, "uniform or coverage")->check(CLI::IsMember({"uniform", "coverage"}));
  bind(grow, ctx, "grow", [&ctx, args] { return run_grow(ctx, *args); });

  auto* sphere = app.add_subcommand("sphere-witness", "Build and validate the sphere-intersection witness family");
  sphere->add_option("--m", args->m, "Distance m");
  sphere->add_option("--k", args->k, "Offset k, 1 <= k <= m-2");
  sphere->add_option("--n", args->n, "Number N of bits");
  sphere->add_flag("--realize", args->realize, "Also realize the points x_eps");
  bind(sphere, ctx, "sphere-witness", [&ctx, args] { return run_sphere(ctx, *args); });

  auto* verify = app.add_subcommand("verify", "Re-verify any certificate written by this tool");
  verify->add_option("artifact", args->input, "Artifact JSON")->required();
  bind(verify, ctx, "verify", [&ctx, args] { return verify_artifact(ctx, args->input); });
}

}  // namespace forge
