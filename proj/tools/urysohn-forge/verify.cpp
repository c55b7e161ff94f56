#include "context.hpp"
#include "urysohn/eppa.hpp"
#include "urysohn/sphere_witness.hpp"
#include "urysohn/trees.hpp"

namespace forge {

namespace {

int conclude(const RunContext& ctx, const std::string& path, const std::string& kind,
             const urysohn::ValidationReport& report) {
  print_report(report);
  return ctx.finish({{"input", path}, {"kind", kind}, {"ok", report.ok()}, {"violations", report_to_json(report)}},
                    "verified kind=" + kind + " ok=" + (report.ok() ? "1" : "0"), report.ok() ? kOk : kInvalidInput);
}

}  // namespace

int verify_artifact(const RunContext& ctx, const std::string& path) {
  const Json j = urysohn::load_json(path);
  if (j.contains("levels") && j.contains("steps")) {
    return conclude(ctx, path, "tower", urysohn::verify_tower(urysohn::tower_from_json(j)));
  }
  if (j.contains("base") && j.contains("witness") && j.contains("extensions")) {
    return conclude(ctx, path, "eppa-witness", urysohn::verify_witness(urysohn::witness_from_json(j)));
  }
  if (j.contains("witness") && j.contains("dist")) {
    const auto w = urysohn::sphere_witness_from_json(j);
    auto report = urysohn::validate_sphere_witness(w);
    const auto rebuilt = urysohn::build_sphere_witness(w.m, w.k, w.n, 1);
    if (!(rebuilt.fragment == w.fragment) || rebuilt.family != w.family || rebuilt.epsilons != w.epsilons) {
      report.add("reconstruction", {}, "stored witness differs from the canonical construction");
    }
    return conclude(ctx, path, "sphere-witness", report);
  }
  if (j.contains("gamma_hat") && j.contains("source")) {
    const auto c = urysohn::certificate_from_json(j);
    urysohn::ValidationReport report;
    if (c.tree) {
      report.merge(urysohn::validate_tree(*c.tree));
      if (c.tree->eps.convert_to<double>() > c.gamma_hat) report.add("eps", {}, "claimed eps exceeds gamma_hat");
      if (c.tree->depth != c.depth) report.add("depth", {}, "tree depth differs from the certificate");
    } else if (!c.degenerate && c.gamma_hat <= 0.0) {
      report.add("gamma", {}, "a non-degenerate certificate needs gamma_hat > 0");
    }
    return conclude(ctx, path, "tree-certificate", report);
  }
  if (j.contains("dist")) {
    urysohn::space_from_json(j);
    return conclude(ctx, path, "metric-space", {});
  }
  throw urysohn::InvalidInput("unrecognized artifact " + path);
}

}  // namespace forge
