#pragma once

// Exhaustive brute-force vs closed-form checks, one cell per (check, family).

#include <set>
#include <string>
#include <vector>

#include "dycklat/series.hpp"

namespace dycklat {

struct CheckOptions {
  int n_max = 8;
  std::vector<FamilyParam> families;
  int order = kDefaultOrder;
  /// Counts upper covers with a descent bound one too small, so the harness
  /// has something to catch.
  bool inject_cover_fault = false;
};

struct CheckCell {
  std::string check;
  FamilyParam family = FamilyParam::infinity();
  bool passed = true;
  std::uint64_t comparisons = 0;
  /// First failure at the smallest n, empty when passed.
  std::string counterexample;
};

struct CheckReport {
  std::vector<CheckCell> cells;
  std::set<std::string> exercised;
  /// Library operations no cell invoked.
  std::vector<std::string> missing;

  /// True when every cell passed; coverage gaps are reported, not failed.
  bool ok() const;
  /// Pass/fail matrix, counterexamples, then the coverage line.
  std::string render() const;
};

/// Every library operation the harness is expected to reach.
const std::vector<std::string>& checked_operations();

/// Throws SizeGuard when n_max would exceed the pair-loop guard.
CheckReport run_checks(const CheckOptions& options);

}  // namespace dycklat
