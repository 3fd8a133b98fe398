#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ezeta/gamma_subgroups.hpp"
#include "ezeta/weierstrass.hpp"

namespace ezeta {

/// Outcome of one acceptance check.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double measured = 0.0;   // worst defect seen (or mismatch count)
  double threshold = 0.0;  // pinned tolerance
  double seconds = 0.0;
  double time_limit = 0.0;
  std::string detail;
};

struct VerifyOptions {
  EvalConfig cfg{};
  std::uint64_t seed = 42;
  /// Overrides the per-criterion sample count when nonzero. The period
  /// integral check keeps its own count.
  std::size_t samples = 0;
  /// Group for the equivariance and weight checks of stock functions.
  CongruenceGroup group{};
};

inline constexpr int kCriterionCount = 12;

/// Runs criterion id in 1..12. Throws std::out_of_range otherwise.
CriterionResult run_criterion(int id, const VerifyOptions& opt = {});

/// Criteria grouped by suite name: all, legendre, table, equivariance,
/// weights, triangle, periods. Throws std::invalid_argument on an unknown name.
std::vector<int> suite_criteria(std::string_view suite);
std::vector<CriterionResult> run_suite(std::string_view suite, const VerifyOptions& opt = {});

/// Points of the standard fundamental domain, reduced from sample_taus.
std::vector<ModularPoint> fundamental_taus(std::size_t count, std::uint64_t seed);

}  // namespace ezeta
