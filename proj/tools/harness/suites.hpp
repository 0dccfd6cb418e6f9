#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "loccol/budget.hpp"
#include "loccol/set_systems.hpp"

namespace loccol::harness {

struct Check {
  std::string description;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerificationSuite {
  std::string id;
  std::vector<Check> checks;
  /// Findings that are reported but not asserted.
  std::vector<std::string> notes;
  std::chrono::milliseconds elapsed{0};

  bool passed() const;
};

struct HarnessOptions {
  /// Applied to every individual solver call of a suite.
  Budget budget;
  std::uint64_t seed = 1;
  int workers = 1;
};

const std::vector<std::string>& suite_ids();

/// Throws UnknownSuite.
VerificationSuite run_suite(const std::string& id, const HarnessOptions& opts = {});

struct SwideRow {
  int s = 0;
  long long order = 0;
  bool property1_ok = false;
  bool property2_ok = false;
  std::size_t failures = 0;
  /// Directed local value of the natural coloring, when oriented.
  std::optional<int> value;
};

struct SwideThreshold {
  int t = 0;
  std::vector<SwideRow> rows;
  /// Smallest s in the scanned range for which both properties held.
  std::optional<int> threshold;
};

/// Scans s = 2, 3, ... up to s_max, stopping before W(s,t) exceeds
/// max_order vertices.
SwideThreshold swide_threshold(int t, int s_max, long long max_order, const Budget& budget);

}  // namespace loccol::harness
