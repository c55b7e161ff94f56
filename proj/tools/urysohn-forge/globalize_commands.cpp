#include "context.hpp"
#include "urysohn/bad_configuration.hpp"
#include "urysohn/coset_graph.hpp"
#include "urysohn/left_system.hpp"

namespace forge {

namespace {

struct GlobalizeArgs {
  std::string input;
  std::vector<std::string> quotients;
};

urysohn::QuotientAction load_action(const std::string& path) {
  return urysohn::quotient_from_json(urysohn::load_json(path));
}

Json path_matrix(const urysohn::LabeledCosetGraph& graph) {
  Json rows = Json::array();
  for (const auto& row : graph.path) {
    Json r = Json::array();
    for (urysohn::Dist d : row) r.push_back(d == urysohn::kUnreachable ? Json() : Json(d));
    rows.push_back(r);
  }
  return rows;
}

int run_check(const RunContext& ctx, const GlobalizeArgs& args) {
  const auto action = load_action(args.input);
  const auto report = urysohn::check_quotient(action);
  const auto words =
      urysohn::check_quotient_words(action, urysohn::emit_subgroup_data(action.alphabet(), action.a0()));
  if (report.ok() != words.ok()) throw urysohn::ConsistencyError("point and word criteria disagree");
  print_report(report);
  return ctx.finish({{"input", args.input}, {"accepted", report.ok()}, {"violations", report_to_json(report)}},
                    std::string("accepted=") + (report.ok() ? "1" : "0") +
                        " violations=" + std::to_string(report.size()));
}

int run_graph(const RunContext& ctx, const GlobalizeArgs& args) {
  const auto action = load_action(args.input);
  const auto graph = urysohn::build_coset_graph(action);
  const auto pseudo = urysohn::check_path_pseudometric(graph, action);
  const auto quotient = urysohn::metric_quotient(graph);
  Json edges = Json::array();
  for (const auto& e : graph.edges) {
    edges.push_back({{"from", e.from},
                     {"to", e.to},
                     {"label", e.label},
                     {"translator", urysohn::word_to_json(e.translator)},
                     {"c", action.space().label(e.c)},
                     {"d", action.space().label(e.d)}});
  }
  Json body = {{"input", args.input},
               {"nodes", graph.nodes},
               {"edges", edges},
               {"path", path_matrix(graph)},
               {"connected", graph.connected},
               {"pseudometric", report_to_json(pseudo)},
               {"classes", quotient.classes},
               {"class_of_node", quotient.class_of_node}};
  if (!pseudo.ok()) {
    print_report(pseudo);
    throw urysohn::ConsistencyError("path distance is not a pseudometric");
  }
  return ctx.finish(std::move(body), "nodes=" + std::to_string(graph.nodes.size()) +
                                         " edges=" + std::to_string(graph.edges.size()) +
                                         " classes=" + std::to_string(quotient.classes) +
                                         " connected=" + (graph.connected ? "1" : "0"));
}

int run_badconf(const RunContext& ctx, const GlobalizeArgs& args) {
  const auto action = load_action(args.input);
  const auto graph = urysohn::build_coset_graph(action);
  const auto config = urysohn::detect_bad_configuration(action, graph);
  Json body = {{"input", args.input}, {"bad_configuration", config.has_value()}};
  if (!config) return ctx.finish(std::move(body), "bad_configuration=0");
  const auto report = urysohn::verify_bad_configuration(action, *config);
  if (!report.ok()) {
    print_report(report);
    throw urysohn::ConsistencyError("reconstructed bad configuration fails verification");
  }
  Json steps = Json::array();
  std::vector<std::pair<int, int>> letters;
  for (const auto& s : config->steps) {
    steps.push_back({{"p", s.p}, {"q", s.q}, {"x", urysohn::word_to_json(s.x)}});
    letters.emplace_back(s.p, s.q);
  }
  body["chain"] = {{"p", config->p},
                   {"q", config->q},
                   {"steps", steps},
                   {"total_cost", config->total_cost},
                   {"required", config->required}};
  body["left_system"] = urysohn::left_system_to_json(urysohn::bad_configuration_system(config->p, config->q, letters));
  return ctx.finish(std::move(body), "bad_configuration=1 steps=" + std::to_string(config->steps.size()) +
                                         " cost=" + std::to_string(config->total_cost) +
                                         " required=" + std::to_string(config->required));
}

int run_leftsys(const RunContext& ctx, const GlobalizeArgs& args) {
  const Json j = urysohn::load_json(args.input);
  const auto system = urysohn::left_system_from_json(j.contains("left_system") ? j.at("left_system") : j);
  if (args.quotients.empty()) throw urysohn::InvalidInput("at least one --quotient is required");
  std::vector<urysohn::QuotientAction> quotients;
  for (const auto& q : args.quotients) quotients.push_back(load_action(q));
  const auto solution = urysohn::solve_left_system(system, quotients);
  Json body = {{"input", args.input}, {"quotients", args.quotients}, {"solvable", solution.has_value()}};
  if (!solution) return ctx.finish(std::move(body), "solvable=0");
  if (!urysohn::satisfies(system, quotients, *solution)) throw urysohn::ConsistencyError("solution fails the system");
  Json values = Json::array();
  std::string words;
  for (const auto& w : *solution) {
    values.push_back(urysohn::word_to_json(w));
    words += (words.empty() ? "" : ",") + urysohn::word_to_string(w);
  }
  body["values"] = values;
  return ctx.finish(std::move(body), "solvable=1 values=" + words);
}

}  // namespace

void add_globalize_commands(CLI::App& app, RunContext& ctx) {
  auto args = std::make_shared<GlobalizeArgs>();
  auto* globalize = app.add_subcommand("globalize", "Globalization diagnostics for finite quotient actions");
  globalize->require_subcommand(1);

  auto* check = globalize->add_subcommand("check", "Check X0 stabilization and X1 avoidance");
  check->add_option("quotient", args->input, "QuotientAction JSON")->required();
  bind(check, ctx, "globalize check", [&ctx, args] { return run_check(ctx, *args); });

  auto* graph = globalize->add_subcommand("graph", "Labeled coset graph and path distances");
  graph->add_option("quotient", args->input, "QuotientAction JSON")->required();
  bind(graph, ctx, "globalize graph", [&ctx, args] { return run_graph(ctx, *args); });

  auto* badconf = globalize->add_subcommand("badconf", "Detect and verify a bad configuration");
  badconf->add_option("quotient", args->input, "QuotientAction JSON")->required();
  bind(badconf, ctx, "globalize badconf", [&ctx, args] { return run_badconf(ctx, *args); });

  auto* leftsys = globalize->add_subcommand("leftsys", "Solve a left-system modulo quotient stabilizers");
  leftsys->add_option("system", args->input, "Left-system JSON (or a badconf artifact)")->required();
  leftsys->add_option("--quotient", args->quotients, "QuotientAction JSON, one per subgroup index")->required();
  bind(leftsys, ctx, "globalize leftsys", [&ctx, args] { return run_leftsys(ctx, *args); });
}

}  // namespace forge
