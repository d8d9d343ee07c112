// phasecost: run verification suites and emit reports.
//
//   phasecost list
//   phasecost run --suite queues/coherence --seed 42 --iters 1000 --mode full --format json
//
// Exit status: 0 when every suite passes, 1 on failures or I/O errors,
// 2 on usage errors (including unknown suite names).

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "phasecost/suites.hpp"

namespace {

using phasecost::Report;
using phasecost::suites::ReportFormat;
using phasecost::suites::SuiteConfig;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

/// Suites run on a bounded pool. Each result lands in its own slot, and every
/// suite seeds its generator from (seed, suite name), so the output does not
/// depend on scheduling.
std::vector<Report> run_all(const std::vector<SuiteConfig> &configs, unsigned jobs) {
  std::vector<Report> out(configs.size());
  std::vector<std::exception_ptr> errors(configs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < configs.size(); i = next++) {
      try {
        out[i] = phasecost::suites::run_suite(configs[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(configs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n; ++t)
    pool.emplace_back(worker);
  for (auto &t : pool)
    t.join();
  for (auto &e : errors)
    if (e)
      std::rethrow_exception(e);
  return out;
}

std::string render(const std::vector<Report> &reports, ReportFormat format) {
  if (reports.size() == 1)
    return phasecost::suites::emit_report(reports.front(), format);
  if (format == ReportFormat::Json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto &r : reports)
      arr.push_back(phasecost::to_json(r));
    return arr.dump(2) + "\n";
  }
  std::string doc;
  for (const auto &r : reports)
    doc += phasecost::emit_markdown(r) + "\n";
  return doc;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Run cost-aware abstraction verification suites"};
  app.require_subcommand(1);

  auto *list = app.add_subcommand("list", "List registered suites");

  auto *run = app.add_subcommand("run", "Run one or more suites");
  std::vector<std::string> suites;
  std::uint64_t seed = 0;
  std::uint64_t iters = 1000;
  std::string mode_name = "full";
  std::string report_path;
  std::string format_name = "json";
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  run->add_option("--suite", suites, "Suite name, repeatable; 'all' runs every suite")->required();
  run->add_option("--seed", seed, "Random seed")->capture_default_str();
  run->add_option("--iters", iters, "Iterations per suite")->capture_default_str()->check(CLI::PositiveNumber);
  run->add_option("--mode", mode_name, "Evaluation mode")
      ->capture_default_str()
      ->check(CLI::IsMember({"full", "abstract", "concrete", "behavioral"}));
  run->add_option("--report", report_path, "Output path (default: standard output)");
  run->add_option("--format", format_name, "Report format")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "md", "markdown"}));
  run->add_option("-j,--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  if (list->parsed()) {
    for (const auto &entry : phasecost::suites::registry())
      std::cout << entry.name << "\t" << entry.summary << "\n";
    return kExitPass;
  }

  std::vector<SuiteConfig> configs;
  const auto mode = *phasecost::parse_mode(mode_name);
  const auto format = format_name == "json" ? ReportFormat::Json : ReportFormat::Markdown;
  auto add = [&](std::string_view name) {
    configs.push_back(SuiteConfig{std::string(name), seed, iters, mode, report_path, format});
  };
  for (const auto &name : suites) {
    if (name == "all") {
      for (const auto &entry : phasecost::suites::registry())
        add(entry.name);
    } else if (phasecost::suites::find_suite(name)) {
      add(name);
    } else {
      std::cerr << "phasecost: unknown suite '" << name << "' (see 'phasecost list')\n";
      return kExitUsage;
    }
  }

  std::vector<Report> reports;
  try {
    reports = run_all(configs, jobs);
  } catch (const std::exception &e) {
    std::cerr << "phasecost: internal error: " << e.what() << "\n";
    return kExitFail;
  }

  const std::string doc = render(reports, format);
  if (report_path.empty()) {
    std::cout << doc << std::flush;
  } else {
    std::ofstream os(report_path, std::ios::binary | std::ios::trunc);
    if (!os || !(os << doc) || !os.flush()) {
      std::cerr << "phasecost: cannot write report to " << report_path << "\n";
      return kExitFail;
    }
  }

  bool ok = true;
  for (const auto &r : reports) {
    ok = ok && r.passed();
    std::cerr << r.suite << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.cases << " cases, "
              << r.failures.size() << " failures)\n";
  }
  return ok ? kExitPass : kExitFail;
}
