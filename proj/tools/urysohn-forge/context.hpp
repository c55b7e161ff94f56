#pragma once

#include <CLI11.hpp>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "urysohn/io.hpp"

namespace forge {

using urysohn::Json;

enum ExitCode : int { kOk = 0, kInvalidInput = 2, kBudgetExhausted = 3, kConsistency = 4, kUsage = 64 };

/// Global flags and the selected action.
struct RunContext {
  std::optional<std::uint64_t> seed_flag;
  std::uint64_t seed = 0;
  int max_omega = 16;
  std::uint64_t max_attempts = 2'000'000;
  double time_limit_s = 60.0;
  int workers = 0;
  std::string out;
  std::string command;
  std::function<int()> action;
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

  urysohn::QuotientBudget budget() const;
  /// Adds "command", "seed" and "timestamp" (the only run-dependent field) to `body`,
  /// writes it to --out when given and prints the summary line.
  int finish(Json body, const std::string& summary, int code = kOk, double elapsed_s = -1.0) const;
};

void add_space_commands(CLI::App& app, RunContext& ctx);
void add_eppa_commands(CLI::App& app, RunContext& ctx);
void add_globalize_commands(CLI::App& app, RunContext& ctx);
void add_analysis_commands(CLI::App& app, RunContext& ctx);

/// Registers `action` for the subcommand and records its name.
void bind(CLI::App* sub, RunContext& ctx, std::string name, std::function<int()> action);

Json report_to_json(const urysohn::ValidationReport& report);
/// "kind w1 w2 ... detail" lines on standard error.
void print_report(const urysohn::ValidationReport& report);

}  // namespace forge
