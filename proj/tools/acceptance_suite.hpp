#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace prop::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  /// 0 when the criterion has no runtime limit.
  double limit_seconds = 0.0;
};

inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Runs the eleven acceptance criteria in order. A criterion with a runtime
/// limit fails if its checks pass but the limit is exceeded.
std::vector<CriterionResult> run_all(std::uint64_t seed = kDefaultSeed);

/// "[PASS]  3  Magnus multiplicativity and inverse  (0.12 s)  detail".
std::string format_line(const CriterionResult& r);

}  // namespace prop::acceptance
