#include <iostream>
#include <random>

#include "context.hpp"
#include "urysohn/metric_space.hpp"
#include "urysohn/parallel.hpp"

int main(int argc, char** argv) {
  forge::RunContext ctx;
  CLI::App app{"Finite fragments of Urysohn spaces: Katetov extensions, EPPA witnesses, globalization and convexity probes",
               "urysohn-forge"};
  app.set_version_flag("--version", "0.1.0");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", ctx.seed_flag, "Random seed; generated and printed when absent");
  app.add_option("--max-omega", ctx.max_omega, "Largest carrier size for quotient search")->check(CLI::PositiveNumber);
  app.add_option("--max-attempts", ctx.max_attempts, "Search node budget");
  app.add_option("--time-limit", ctx.time_limit_s, "Wall-clock limit in seconds")->check(CLI::NonNegativeNumber);
  app.add_option("--workers", ctx.workers, "Worker threads (default URYSOHN_FORGE_WORKERS or hardware)");
  app.add_option("--out", ctx.out, "Write the JSON artifact to this path");

  forge::add_space_commands(app, ctx);
  forge::add_eppa_commands(app, ctx);
  forge::add_globalize_commands(app, ctx);
  forge::add_analysis_commands(app, ctx);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return forge::kUsage;
  }
  if (ctx.seed_flag) {
    ctx.seed = *ctx.seed_flag;
  } else {
    ctx.seed = std::random_device{}();
    std::cerr << "seed=" << ctx.seed << '\n';
  }
  if (ctx.workers > 0) urysohn::set_default_workers(ctx.workers);
  if (!ctx.action) {
    std::cerr << app.help();
    return forge::kUsage;
  }
  try {
    return ctx.action();
  } catch (const urysohn::InvalidSpace& e) {
    std::cerr << "invalid space: " << e.what() << '\n';
    forge::print_report(e.report());
    return forge::kInvalidInput;
  } catch (const urysohn::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return forge::kInvalidInput;
  } catch (const urysohn::ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << '\n';
    return forge::kConsistency;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return forge::kConsistency;
  }
}
