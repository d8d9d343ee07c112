// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "phasecost/suites.hpp"

using namespace phasecost;
using namespace phasecost::suites;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool ok = true;
  std::string detail;
};

Report run(const std::string &suite, std::uint64_t iters, std::uint64_t seed = kSeed) {
  SuiteConfig c;
  c.suite = suite;
  c.seed = seed;
  c.iterations = iters;
  return run_suite(c);
}

std::string first_failure(const Report &r) {
  if (r.failures.empty())
    return "";
  const auto &f = r.failures.front();
  return fmt::format("; first failure: {} on {} (expected {}, got {})", f.law, f.input.substr(0, 120),
                     f.expected.substr(0, 80), f.actual.substr(0, 80));
}

Outcome from_reports(const std::vector<Report> &reports) {
  Outcome o;
  std::vector<std::string> parts;
  for (const auto &r : reports) {
    o.ok = o.ok && r.passed() && r.cases > 0;
    parts.push_back(fmt::format("{}: {} cases, {} failures{}", r.suite, r.cases, r.failures.size(), first_failure(r)));
  }
  o.detail = fmt::format("{}", fmt::join(parts, "; "));
  return o;
}

template <typename F> std::pair<Outcome, double> timed(F &&f) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o = f();
  const auto t1 = std::chrono::steady_clock::now();
  return {o, std::chrono::duration<double>(t1 - t0).count()};
}

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome()> check;
  double time_limit = 0; // seconds; 0 means no limit
};

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "cost-effect laws on 10^4 samples in under 1 s", [] { return from_reports({run("cost/laws", 10000)}); }, 1.0},
      {2, "glue/fracture round trips on 10^4 queue and tree values",
       [] { return from_reports({run("phase/glue", 10000)}); }},
      {3, "queue coherence squares: exhaustive traces <= 6 plus 1000 random traces <= 200",
       [] {
         Report r = run("queues/coherence", 1000);
         Outcome o = from_reports({r});
         for (const auto &row : r.cost_table)
           if (row.impl_cost > row.spec_cost) {
             o.ok = false;
             o.detail += fmt::format("; cost row {} exceeds spec", row.size);
           }
         return o;
       }},
      {4, "noninterference of demo, qreverse and traces across both queues (1000 samples)",
       [] { return from_reports({run("queues/noninterference", 1000)}); }},
      {5, "sealing laws on 10^4 seals; every seal has impl cost <= spec cost",
       [] { return from_reports({run("sealing/laws", 10000)}); }},
      {6, "red-black invariants after 10^4 append sequences; abstract monoid laws on 10^3 triples",
       [] { return from_reports({run("rbtree/invariants", 10000)}); }},
      {7, "mapreduce agrees with the fold oracle for three targets on 10^3 trees",
       [] { return from_reports({run("rbtree/universal", 1000)}); }},
      {8, "isort <= n^2 and msort <= n*ceil(lg n): all permutations n <= 8, random n <= 512, under 30 s",
       [] { return from_reports({run("sorting/isort", 1000), run("sorting/msort", 1000)}); }, 30.0},
      {9, "reduce cost <= 2 * size on random trees up to 1024 leaves",
       [] { return from_reports({run("rbtree/reduce", 1000)}); }},
      {10, "identical configurations give byte-identical JSON for every suite",
       [] {
         Outcome o;
         std::size_t same = 0;
         for (const auto &entry : registry()) {
           const std::string name(entry.name);
           const std::string a = emit_json(run(name, 200, 7));
           const std::string b = emit_json(run(name, 200, 7));
           if (a == b)
             ++same;
           else {
             o.ok = false;
             o.detail += name + " differs; ";
           }
         }
         o.detail += fmt::format("{}/{} suites identical", same, registry().size());
         return o;
       }},
  };

  int failed = 0;
  for (const auto &c : criteria) {
    auto [o, secs] = timed(c.check);
    if (c.time_limit > 0 && secs >= c.time_limit) {
      o.ok = false;
      o.detail += fmt::format("; took {:.3f} s, limit {:.0f} s", secs, c.time_limit);
    }
    failed += o.ok ? 0 : 1;
    std::printf("%s [%2d] %s (%.3f s) -- %s\n", o.ok ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
