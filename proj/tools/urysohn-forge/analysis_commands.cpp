#include <cstdio>

#include "context.hpp"
#include "urysohn/averaging.hpp"
#include "urysohn/convexity.hpp"
#include "urysohn/isometry.hpp"
#include "urysohn/probe.hpp"

namespace forge {

namespace {

struct AnalysisArgs {
  std::string input;
  std::string phi;
  double p = 2.0;
  int dim = 2;
  std::vector<double> values;
  int grid = 0;
  int m = 6;
  int k = 2;
  int n = 3;
  std::string embedding;
  std::string witness;
};

std::string format(const char* pattern, double a, double b) {
  char buffer[96];
  std::snprintf(buffer, sizeof buffer, pattern, a, b);
  return buffer;
}

std::vector<double> grid_values(const AnalysisArgs& args, double top) {
  std::vector<double> values = args.values;
  for (int i = 1; i <= args.grid; ++i) values.push_back(top * i / args.grid);
  if (values.empty()) throw urysohn::InvalidInput("give at least one value or --grid");
  return values;
}

Json exact_vector(const urysohn::ExactVector& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(urysohn::rational_to_json(r));
  return out;
}

int run_average(const RunContext& ctx, const AnalysisArgs& args) {
  const auto space = urysohn::space_from_json(urysohn::load_json(args.input));
  std::vector<urysohn::ExactVector> phi;
  urysohn::PermutationGroup group = urysohn::compute_isometry_group(space);
  std::string phi_id = "kuratowski";
  if (!args.phi.empty()) {
    const Json j = urysohn::load_json(args.phi);
    const auto map = urysohn::embedding_from_json(j.contains("phi") ? j.at("phi") : j);
    for (const auto& label : space.labels()) {
      const auto it = map.find(label);
      if (it == map.end()) throw urysohn::InvalidInput("phi is missing '" + label + "'");
      phi.push_back(it->second);
    }
    if (j.contains("group")) {
      std::vector<urysohn::Permutation> gens;
      for (const auto& g : j.at("group")) gens.emplace_back(g.get<std::vector<int>>());
      group = urysohn::PermutationGroup(space.size(), std::move(gens));
    }
    phi_id = args.phi;
  } else {
    const auto k = urysohn::kuratowski_coordinates(space, space.size());
    for (const auto& label : space.labels()) phi.push_back(k.at(label));
  }
  const auto avg = urysohn::average_map(space, group, phi);
  const auto report = urysohn::check_averaging(avg);
  const auto transform = urysohn::check_metric_transform(avg);
  Json psi = Json::object();
  for (int x = 0; x < space.size(); ++x) {
    Json blocks = Json::array();
    for (const auto& b : avg.blocks[x]) blocks.push_back(exact_vector(b));
    psi[space.label(x)] = blocks;
  }
  Json table = Json::object();
  for (const auto& [r, v] : transform.squared_table) table[std::to_string(r)] = urysohn::rational_to_json(v);
  Json violation;
  if (transform.violation) {
    const auto& [a, b] = *transform.violation;
    violation = {{space.label(a.first), space.label(a.second)}, {space.label(b.first), space.label(b.second)}};
  }
  Json body = {{"input", args.input},
               {"phi", phi_id},
               {"group_order", avg.elements.size()},
               {"checks", report_to_json(report)},
               {"psi_blocks", psi},
               {"psi_scale", "1/sqrt(" + std::to_string(avg.elements.size()) + ")"},
               {"transform", {{"exists", transform.exists}, {"squared_table", table}, {"violation", violation}}}};
  if (!report.ok()) {
    print_report(report);
    throw urysohn::ConsistencyError("averaging identities fail");
  }
  return ctx.finish(std::move(body), "group_order=" + std::to_string(avg.elements.size()) +
                                         " identities=1 transform=" + (transform.exists ? "1" : "0"));
}

int run_delta(const RunContext& ctx, const AnalysisArgs& args) {
  const auto table = urysohn::modulus_convexity(args.p, args.dim, grid_values(args, 2.0), ctx.seed);
  Json rows = Json::array();
  std::string summary = format("p=%g dim=%.0f", args.p, args.dim);
  for (const auto& r : table) {
    rows.push_back({{"eps", r.eps}, {"delta", r.delta}, {"x", r.x}, {"y", r.y}});
    if (args.p == 2.0) rows.back()["closed_form"] = r.closed_form;
    summary += format(" eps=%g delta=%.6f", r.eps, r.delta);
  }
  return ctx.finish({{"p", args.p}, {"dim", args.dim}, {"table", rows}}, summary);
}

int run_rho(const RunContext& ctx, const AnalysisArgs& args) {
  const auto table = urysohn::modulus_smoothness(args.p, args.dim, grid_values(args, 1.0), ctx.seed);
  Json rows = Json::array();
  std::string summary = format("p=%g dim=%.0f", args.p, args.dim);
  for (const auto& r : table) {
    rows.push_back({{"tau", r.tau}, {"rho", r.rho}, {"ratio", r.ratio}, {"x", r.x}, {"h", r.h}});
    if (args.p == 2.0) rows.back()["closed_form"] = r.closed_form;
    summary += format(" tau=%g rho=%.6f", r.tau, r.rho);
  }
  return ctx.finish({{"p", args.p}, {"dim", args.dim}, {"table", rows}}, summary);
}

int run_tree(const RunContext& ctx, const AnalysisArgs& args) {
  const urysohn::SphereWitness w = args.witness.empty()
                                       ? urysohn::build_sphere_witness(args.m, args.k, args.n, ctx.workers)
                                       : urysohn::sphere_witness_from_json(urysohn::load_json(args.witness));
  const auto report = urysohn::validate_sphere_witness(w);
  if (!report.ok()) {
    print_report(report);
    throw urysohn::InvalidInput("sphere witness fails validation");
  }
  const auto realization = urysohn::realize_t_epsilon(w);
  urysohn::Embedding embedding;
  std::string embedding_id = "kuratowski";
  if (args.embedding.empty()) {
    embedding = urysohn::kuratowski_coordinates(realization.space, w.fragment.size());
  } else {
    embedding = urysohn::embedding_from_json(urysohn::load_json(args.embedding));
    embedding_id = args.embedding;
  }
  const auto certificate = urysohn::convexity_probe(w, realization, embedding, embedding_id, ctx.workers);
  if (certificate.tree) {
    const auto tree_report = urysohn::validate_tree(*certificate.tree);
    if (!tree_report.ok()) {
      print_report(tree_report);
      throw urysohn::ConsistencyError("emitted tree fails validation");
    }
  }
  return ctx.finish(urysohn::certificate_to_json(certificate), urysohn::probe_summary(certificate));
}

}  // namespace

void add_analysis_commands(CLI::App& app, RunContext& ctx) {
  auto args = std::make_shared<AnalysisArgs>();

  auto* average = app.add_subcommand("average", "Average an embedding over the isometry group");
  average->add_option("space", args->input, "Metric-space JSON")->required();
  average->add_option("--phi", args->phi, "JSON {\"phi\": {label: vector}, \"group\": [permutation]}");
  bind(average, ctx, "average", [&ctx, args] { return run_average(ctx, *args); });

  auto* probe = app.add_subcommand("probe", "Convexity numerics and tree probes");
  probe->require_subcommand(1);

  auto* delta = probe->add_subcommand("delta", "Modulus of convexity of l^p_dim");
  delta->add_option("--p", args->p, "Exponent p >= 1");
  delta->add_option("--dim", args->dim, "Dimension >= 2");
  delta->add_option("--eps", args->values, "Values of eps in (0, 2]");
  delta->add_option("--grid", args->grid, "Also use eps = 2i/grid for i = 1..grid");
  bind(delta, ctx, "probe delta", [&ctx, args] { return run_delta(ctx, *args); });

  auto* rho = probe->add_subcommand("rho", "Modulus of smoothness of l^p_dim");
  rho->add_option("--p", args->p, "Exponent p >= 1");
  rho->add_option("--dim", args->dim, "Dimension >= 2");
  rho->add_option("--tau", args->values, "Values of tau > 0");
  rho->add_option("--grid", args->grid, "Also use tau = i/grid for i = 1..grid");
  bind(rho, ctx, "probe rho", [&ctx, args] { return run_rho(ctx, *args); });

  auto* tree = probe->add_subcommand("tree", "Prefix-hull separation and tree certificate for the sphere witness");
  tree->add_option("--m", args->m, "Distance m");
  tree->add_option("--k", args->k, "Offset k");
  tree->add_option("--n", args->n, "Number N of bits");
  tree->add_option("--witness", args->witness, "Sphere-witness JSON instead of --m/--k/--n");
  tree->add_option("--embedding", args->embedding, "Embedding JSON {label: vector}; default: distance coordinates");
  bind(tree, ctx, "probe tree", [&ctx, args] { return run_tree(ctx, *args); });
}

}  // namespace forge
