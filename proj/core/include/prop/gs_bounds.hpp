#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "prop/word.hpp"

namespace prop {

/// Printed with every report. The inequalities are necessary conditions tied
/// to finiteness; the report states values and flags only.
inline constexpr std::string_view kKochInterpretationNote =
    "The inequality 1 <= E_n is a consistency condition associated with finiteness of G; "
    "this report lists values only and draws no conclusion about finiteness.";

/// r_0 = 1 and r_n = number of relators whose Magnus valuation is exactly n.
/// Throws TruncationError if some relator's valuation exceeds N.
std::vector<std::int64_t> relator_degree_sequence(const Presentation& pres, std::uint32_t N);

struct GSReport {
  std::int64_t d = 0;
  std::vector<std::int64_t> r;
  std::vector<std::int64_t> b;
  std::vector<std::int64_t> c;
  /// E_n = -d c_{n-1} + sum_{v=0..n} c_v r_{n-v}; index 0 is unused (0).
  std::vector<std::int64_t> E;
  /// E_n >= 1; index 0 unused.
  std::vector<bool> E_at_least_one;
  /// Total relator count sum_{n>=1} r_n.
  std::int64_t relator_count = 0;
  bool quadratic_bound = false;
  /// (m, koch_power_bound(d, relator_count, m)).
  std::vector<std::pair<std::uint32_t, bool>> power_bounds;
};

/// Throws InputError if d < 1, r_0 != 1, b_0 != 1, or either sequence is
/// shorter than n_max + 1.
GSReport koch_report(std::int64_t d, const std::vector<std::int64_t>& r_seq,
                     const std::vector<std::int64_t>& b_seq, std::uint32_t n_max,
                     const std::vector<std::uint32_t>& power_ms = {2, 3, 4});

/// 4r > d^2.
bool gs_quadratic(std::int64_t d, std::int64_t r);

/// r m^m > d^m (m-1)^(m-1), in exact arbitrary-precision integers.
/// Throws InputError for m < 2 or d < 1.
bool koch_power_bound(std::int64_t d, std::int64_t r, std::uint32_t m);

nlohmann::json to_json(const GSReport& report);

}  // namespace prop
