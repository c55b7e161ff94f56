#include "context.hpp"

#include <ctime>
#include <iostream>

namespace forge {

urysohn::QuotientBudget RunContext::budget() const {
  urysohn::QuotientBudget b;
  b.max_omega = max_omega;
  b.max_attempts = max_attempts;
  b.seed = seed;
  b.time_limit_s = time_limit_s;
  return b;
}

int RunContext::finish(Json body, const std::string& summary, int code, double elapsed_s) const {
  if (elapsed_s < 0.0) elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  const std::time_t now = std::time(nullptr);
  char utc[32];
  std::strftime(utc, sizeof utc, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  Json artifact = {{"command", command}, {"seed", seed}};
  for (auto& [key, value] : body.items()) artifact[key] = value;
  artifact["exit_code"] = code;
  artifact["summary"] = summary;
  artifact["timestamp"] = {{"utc", utc}, {"elapsed_s", elapsed_s}};
  if (!out.empty()) urysohn::write_json(out, artifact);
  std::cout << summary << std::endl;
  return code;
}

void bind(CLI::App* sub, RunContext& ctx, std::string name, std::function<int()> action) {
  sub->callback([&ctx, name = std::move(name), action = std::move(action)] {
    ctx.command = name;
    ctx.action = action;
  });
}

Json report_to_json(const urysohn::ValidationReport& report) {
  Json out = Json::array();
  for (const auto& v : report.violations()) out.push_back({{"kind", v.kind}, {"witness", v.witness}, {"detail", v.detail}});
  return out;
}

void print_report(const urysohn::ValidationReport& report) {
  for (const auto& v : report.violations()) {
    std::cerr << v.kind;
    for (int w : v.witness) std::cerr << ' ' << w;
    if (!v.detail.empty()) std::cerr << ' ' << v.detail;
    std::cerr << '\n';
  }
}

}  // namespace forge
