#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "prop/fpmatrix.hpp"
#include "prop/magnus.hpp"
#include "prop/word.hpp"

namespace prop {

enum class ObstructionVerdict { NoEpiCertified, CandidateExists };

/// "NO_EPI_CERTIFIED" / "CANDIDATE_EXISTS".
std::string to_string(ObstructionVerdict v);

/// Result of searching for n x m matrices B of rank m that annihilate the
/// leading form: sum a_{i1..ik} b_{i1 j1} ... b_{ik jk} = 0 for every tuple
/// (j1..jk). CANDIDATE_EXISTS only means the necessary condition can be met;
/// it does not prove that an epimorphism exists.
struct ObstructionReport {
  std::uint32_t target_rank = 0;
  std::uint32_t degree = 0;
  /// Column spaces examined; always the Gaussian binomial [n choose m]_p.
  std::uint64_t spaces_examined = 0;
  ObstructionVerdict verdict = ObstructionVerdict::NoEpiCertified;
  /// Reduced column echelon representatives (n x m) passing the condition.
  std::vector<FpMatrix> witnesses;
};

struct ObstructionOptions {
  unsigned threads = 1;
  /// Allow k·log2(m) > 24, i.e. more than 2^24 index tuples per candidate.
  bool override_guardrail = false;
};

/// Number of m-dimensional subspaces of F_p^n. Throws InputError on overflow.
std::uint64_t gaussian_binomial(std::uint32_t n, std::uint32_t m, std::uint32_t p);

/// Calls visit(B) for each reduced column echelon n x m matrix of rank m,
/// i.e. once per m-dimensional subspace of F_p^n, in a fixed order.
template <typename Visit>
void for_each_column_space(std::uint32_t n, std::uint32_t m, std::uint32_t p, Visit&& visit);

/// Whether eta(B y) vanishes identically.
bool annihilates(const LeadingForm& eta, const FpMatrix& B);

/// Exhaustive search over column spaces. Throws InputError unless
/// 1 <= m <= n; GuardrailError for k·log2(m) > 24 without override.
ObstructionReport search_obstruction(const LeadingForm& eta, std::uint32_t m,
                                     const ObstructionOptions& options = {});

/// Images of the generators of G in the free group on y_1..y_m.
struct HomCandidate {
  std::vector<GroupWord> images;
};

enum class EpiVerdict { EpiConfirmed, NotHom, NotSurjective };
std::string to_string(EpiVerdict v);

/// NOT_HOM if some relator maps to a nontrivial word; NOT_SURJECTIVE if the
/// images do not span F_p^m modulo the Frattini subgroup; EPI_CONFIRMED
/// otherwise. Throws InputError if the candidate does not fit the shapes.
EpiVerdict verify_epimorphism(const Presentation& pres, const HomCandidate& candidate,
                              std::uint32_t m);

/// Parses "y1, y1^-1, y2, 1" into one image per generator over target
/// generators named y1..ym.
HomCandidate parse_candidate(std::string_view text, std::uint32_t m);

struct RankEntry {
  std::uint32_t m = 0;
  ObstructionReport obstruction;
  /// Verdicts of all supplied candidates for this m, in input order.
  std::vector<EpiVerdict> candidate_verdicts;
  bool confirmed() const;
};

struct InternalRankReport {
  std::uint32_t num_generators = 0;
  std::uint32_t leading_degree = 0;
  std::vector<RankEntry> entries;
  /// Largest m with an obstruction certificate, if any.
  std::optional<std::uint32_t> largest_certified_impossible;
  /// Largest m with a verified epimorphism, if any.
  std::optional<std::uint32_t> largest_confirmed;
  /// Ir_p <= ir_upper_bound (from the smallest certified m, else n).
  std::uint32_t ir_upper_bound = 0;
  /// Ir_p >= ir_lower_bound (0 when nothing is confirmed).
  std::uint32_t ir_lower_bound = 0;
};

/// Runs the obstruction for m = 1..m_max on the single relator, and checks
/// each candidate against the m it is declared for.
struct RankCandidate {
  std::uint32_t m = 0;
  HomCandidate candidate;
};

/// Throws InputError for anything but exactly one relator or m_max > n, and
/// TruncationError when the relator's valuation exceeds N.
InternalRankReport internal_rank_report(const Presentation& pres, std::uint32_t N,
                                        std::uint32_t m_max,
                                        const std::vector<RankCandidate>& candidates = {},
                                        const ObstructionOptions& options = {});

/// {"m":..,"k":..,"spaces":..,"verdict":..,"witnesses":[[[..],..],..]}.
nlohmann::json to_json(const ObstructionReport& report);
nlohmann::json to_json(const InternalRankReport& report);

// ---------------------------------------------------------------------------

template <typename Visit>
void for_each_column_space(std::uint32_t n, std::uint32_t m, std::uint32_t p, Visit&& visit) {
  if (m > n) return;
  std::vector<std::uint32_t> pivots(m);
  for (std::uint32_t i = 0; i < m; ++i) pivots[i] = i;
  while (true) {
    // Free positions: (row r, column c) with c after pivot r and not a pivot.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> free;
    for (std::uint32_t r = 0; r < m; ++r)
      for (std::uint32_t c = pivots[r] + 1; c < n; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(r, c);
    std::vector<std::uint32_t> values(free.size(), 0);
    while (true) {
      FpMatrix B(p, n, m);
      for (std::uint32_t r = 0; r < m; ++r) B(pivots[r], r) = 1;
      for (std::size_t f = 0; f < free.size(); ++f)
        B(free[f].second, free[f].first) = static_cast<Coef>(values[f]);
      visit(static_cast<const FpMatrix&>(B));
      std::size_t f = 0;
      while (f < values.size() && ++values[f] == p) values[f++] = 0;
      if (f == values.size()) break;
    }
    // Next pivot combination in lexicographic order.
    std::int64_t i = static_cast<std::int64_t>(m) - 1;
    while (i >= 0 && pivots[i] == n - m + static_cast<std::uint32_t>(i)) --i;
    if (i < 0) break;
    ++pivots[i];
    for (std::uint32_t k = static_cast<std::uint32_t>(i) + 1; k < m; ++k)
      pivots[k] = pivots[k - 1] + 1;
  }
}

}  // namespace prop
