#pragma once

// Machine-readable verdicts of verification suites.

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "phasecost/cost.hpp"
#include "phasecost/phase.hpp"
#include "phasecost/show.hpp"

namespace phasecost {

struct Failure {
  std::string input;
  std::string expected;
  std::string actual;
  std::string law;

  friend bool operator==(const Failure &, const Failure &) = default;
};

struct CostRow {
  std::uint64_t size = 0;
  std::uint64_t impl_cost = 0;
  std::uint64_t spec_cost = 0;

  friend bool operator==(const CostRow &, const CostRow &) = default;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::uint64_t iterations = 0;
  EvaluationMode mode = EvaluationMode::Full;
  std::uint64_t cases = 0;
  std::vector<Failure> failures;
  std::vector<CostRow> cost_table;

  [[nodiscard]] bool passed() const noexcept { return failures.empty(); }

  /// Count one checked case; record a failure if it did not hold.
  bool expect(bool ok, std::string law, std::string input, std::string expected, std::string actual) {
    ++cases;
    if (!ok)
      failures.push_back({std::move(input), std::move(expected), std::move(actual), std::move(law)});
    return ok;
  }

  /// As expect, but only renders the record when the case fails. describe()
  /// returns {input, expected, actual}.
  template <typename Describe> bool expect_lazy(bool ok, std::string law, Describe &&describe) {
    ++cases;
    if (!ok) {
      auto [input, expected, actual] = describe();
      failures.push_back({std::move(input), std::move(expected), std::move(actual), std::move(law)});
    }
    return ok;
  }

  template <typename In, typename Exp, typename Act>
  bool expect_eq(std::string law, const In &input, const Exp &expected, const Act &actual) {
    return expect(expected == actual, std::move(law), show(input), show(expected), show(actual));
  }

  /// Fold another report's cases, failures and cost rows into this one.
  void absorb(const Report &other) {
    cases += other.cases;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    cost_table.insert(cost_table.end(), other.cost_table.begin(), other.cost_table.end());
  }
};

/// Keeps one row per input size: the largest implementation cost seen for
/// that size (ties broken toward the smaller specification cost).
class CostTable {
public:
  void record(std::uint64_t size, Cost impl, Cost spec) {
    auto [it, inserted] = rows_.try_emplace(size, CostRow{size, impl.units(), spec.units()});
    if (inserted)
      return;
    CostRow &row = it->second;
    if (impl.units() > row.impl_cost ||
        (impl.units() == row.impl_cost && spec.units() < row.spec_cost)) {
      row.impl_cost = impl.units();
      row.spec_cost = spec.units();
    }
  }

  [[nodiscard]] std::vector<CostRow> rows() const {
    std::vector<CostRow> out;
    out.reserve(rows_.size());
    for (const auto &[size, row] : rows_)
      out.push_back(row);
    return out;
  }

  [[nodiscard]] bool empty() const noexcept { return rows_.empty(); }

private:
  std::map<std::uint64_t, CostRow> rows_;
};

inline nlohmann::ordered_json to_json(const Report &r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["iterations"] = r.iterations;
  j["mode"] = std::string(to_string(r.mode));
  j["cases"] = r.cases;
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto &f : r.failures)
    j["failures"].push_back(
        {{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}, {"law", f.law}});
  j["cost_table"] = nlohmann::ordered_json::array();
  for (const auto &row : r.cost_table)
    j["cost_table"].push_back(
        {{"size", row.size}, {"impl_cost", row.impl_cost}, {"spec_cost", row.spec_cost}});
  return j;
}

inline Report report_from_json(const nlohmann::json &j) {
  Report r;
  r.suite = j.at("suite").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.iterations = j.at("iterations").get<std::uint64_t>();
  r.mode = parse_mode(j.at("mode").get<std::string>()).value_or(EvaluationMode::Full);
  r.cases = j.at("cases").get<std::uint64_t>();
  for (const auto &f : j.at("failures"))
    r.failures.push_back({f.at("input").get<std::string>(), f.at("expected").get<std::string>(),
                          f.at("actual").get<std::string>(), f.at("law").get<std::string>()});
  for (const auto &row : j.at("cost_table"))
    r.cost_table.push_back({row.at("size").get<std::uint64_t>(), row.at("impl_cost").get<std::uint64_t>(),
                            row.at("spec_cost").get<std::uint64_t>()});
  return r;
}

[[nodiscard]] inline std::string emit_json(const Report &r) { return to_json(r).dump(2) + "\n"; }

namespace detail {
inline std::string md_cell(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|')
      out += "\\|";
    else if (c == '\n')
      out += ' ';
    else
      out += c;
  }
  return out;
}
} // namespace detail

[[nodiscard]] inline std::string emit_markdown(const Report &r) {
  std::ostringstream os;
  os << "# " << r.suite << "\n\n";
  os << "- seed: " << r.seed << "\n";
  os << "- iterations: " << r.iterations << "\n";
  os << "- mode: " << to_string(r.mode) << "\n";
  os << "- cases: " << r.cases << "\n";
  os << "- verdict: " << (r.passed() ? "pass" : "fail") << "\n\n";
  os << "## Failures\n\n";
  if (r.failures.empty()) {
    os << "none\n\n";
  } else {
    os << "| law | input | expected | actual |\n|---|---|---|---|\n";
    for (const auto &f : r.failures)
      os << "| " << detail::md_cell(f.law) << " | " << detail::md_cell(f.input) << " | "
         << detail::md_cell(f.expected) << " | " << detail::md_cell(f.actual) << " |\n";
    os << "\n";
  }
  os << "## Cost table\n\n";
  os << "| size | impl_cost | spec_cost |\n|---:|---:|---:|\n";
  for (const auto &row : r.cost_table)
    os << "| " << row.size << " | " << row.impl_cost << " | " << row.spec_cost << " |\n";
  return os.str();
}

} // namespace phasecost
