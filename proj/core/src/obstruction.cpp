#include "prop/obstruction.hpp"

#include <cmath>
#include <thread>

#include <nlohmann/json.hpp>

#include "prop/error.hpp"

namespace prop {

std::string to_string(ObstructionVerdict v) {
  return v == ObstructionVerdict::NoEpiCertified ? "NO_EPI_CERTIFIED" : "CANDIDATE_EXISTS";
}

std::string to_string(EpiVerdict v) {
  switch (v) {
    case EpiVerdict::EpiConfirmed:
      return "EPI_CONFIRMED";
    case EpiVerdict::NotHom:
      return "NOT_HOM";
    case EpiVerdict::NotSurjective:
      return "NOT_SURJECTIVE";
  }
  return "?";
}

std::uint64_t gaussian_binomial(std::uint32_t n, std::uint32_t m, std::uint32_t p) {
  if (m > n) return 0;
  // [n choose m]_q via the q-Pascal rule [n,m] = [n-1,m-1] + q^m [n-1,m].
  std::vector<std::uint64_t> row(m + 1, 0);
  row[0] = 1;
  for (std::uint32_t i = 1; i <= n; ++i) {
    for (std::uint32_t j = std::min(i, m); j >= 1; --j) {
      std::uint64_t qj = 1;
      for (std::uint32_t t = 0; t < j; ++t)
        if (__builtin_mul_overflow(qj, std::uint64_t{p}, &qj))
          throw InputError("Gaussian binomial overflows 64 bits");
      std::uint64_t term = 0;
      if (__builtin_mul_overflow(qj, row[j], &term) ||
          __builtin_add_overflow(row[j - 1], term, &row[j]))
        throw InputError("Gaussian binomial overflows 64 bits");
    }
  }
  return row[m];
}

bool annihilates(const LeadingForm& eta, const FpMatrix& B) {
  const std::uint32_t k = eta.degree();
  const std::size_t m = B.cols();
  if (B.rows() != eta.num_generators() || B.prime() != eta.prime())
    throw InputError("matrix shape does not match the leading form");
  const PrimeField& f = B.field();
  std::vector<std::size_t> tuple(k, 0);
  while (true) {
    Coef sum = 0;
    for (const auto& [mono, a] : eta.coefficients()) {
      Coef term = a;
      for (std::uint32_t t = 0; t < k && term != 0; ++t) term = f.mul(term, B(mono[t], tuple[t]));
      sum = f.add(sum, term);
    }
    if (sum != 0) return false;
    std::uint32_t t = 0;
    while (t < k && ++tuple[t] == m) tuple[t++] = 0;
    if (t == k) return true;
  }
}

ObstructionReport search_obstruction(const LeadingForm& eta, std::uint32_t m,
                                     const ObstructionOptions& options) {
  const std::uint32_t n = eta.num_generators();
  const std::uint32_t p = eta.prime();
  if (m < 1 || m > n)
    throw InputError("target rank m must satisfy 1 <= m <= n (n = " + std::to_string(n) + ")");
  if (eta.degree() == 0) throw InputError("leading form of degree 0");
  if (static_cast<double>(eta.degree()) * std::log2(static_cast<double>(m)) > 24.0 &&
      !options.override_guardrail)
    throw GuardrailError("m^k = " + std::to_string(m) + "^" + std::to_string(eta.degree()) +
                         " index tuples exceeds 2^24; use the override flag to proceed");

  ObstructionReport report;
  report.target_rank = m;
  report.degree = eta.degree();

  const unsigned threads = std::max(1U, options.threads);
  // Each worker takes the candidates whose ordinal is congruent to its id,
  // recording ordinals so the merge is independent of scheduling.
  std::vector<std::vector<std::pair<std::uint64_t, FpMatrix>>> found(threads);
  std::vector<std::uint64_t> counts(threads, 0);
  auto work = [&](unsigned id) {
    std::uint64_t ordinal = 0;
    for_each_column_space(n, m, p, [&](const FpMatrix& B) {
      if (ordinal++ % threads != id) return;
      ++counts[id];
      if (annihilates(eta, B)) found[id].emplace_back(ordinal - 1, B);
    });
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(work, id);
  }

  std::vector<std::pair<std::uint64_t, FpMatrix>> merged;
  for (unsigned id = 0; id < threads; ++id) {
    report.spaces_examined += counts[id];
    for (auto& w : found[id]) merged.push_back(std::move(w));
  }
  std::sort(merged.begin(), merged.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& w : merged) report.witnesses.push_back(std::move(w.second));
  report.verdict = report.witnesses.empty() ? ObstructionVerdict::NoEpiCertified
                                            : ObstructionVerdict::CandidateExists;
  return report;
}

EpiVerdict verify_epimorphism(const Presentation& pres, const HomCandidate& candidate,
                              std::uint32_t m) {
  const std::uint32_t n = pres.num_generators();
  if (candidate.images.size() != n)
    throw InputError("candidate must give one image per generator (" + std::to_string(n) +
                     " expected, " + std::to_string(candidate.images.size()) + " given)");
  for (const GroupWord& w : candidate.images)
    if (w.generator_bound() > m) throw InputError("candidate image uses an unknown target generator");

  for (const GroupWord& r : pres.relators())
    if (!substitute(r, candidate.images).is_identity()) return EpiVerdict::NotHom;

  // Images generate F(m) iff they span F(m)/Frattini = F_p^m.
  FpMatrix sums(pres.prime(), m, n);
  for (std::uint32_t i = 0; i < n; ++i) {
    auto e = candidate.images[i].exponent_sums(m);
    for (std::uint32_t j = 0; j < m; ++j) sums(j, i) = sums.field().reduce(e[j]);
  }
  return rank(sums) < m ? EpiVerdict::NotSurjective : EpiVerdict::EpiConfirmed;
}

HomCandidate parse_candidate(std::string_view text, std::uint32_t m) {
  std::vector<std::string> names;
  for (std::uint32_t j = 0; j < m; ++j) names.push_back("y" + std::to_string(j + 1));
  HomCandidate c;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    c.images.push_back(parse_word(text.substr(start, comma - start), names));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return c;
}

bool RankEntry::confirmed() const {
  return std::find(candidate_verdicts.begin(), candidate_verdicts.end(),
                   EpiVerdict::EpiConfirmed) != candidate_verdicts.end();
}

InternalRankReport internal_rank_report(const Presentation& pres, std::uint32_t N,
                                        std::uint32_t m_max,
                                        const std::vector<RankCandidate>& candidates,
                                        const ObstructionOptions& options) {
  if (pres.num_relators() != 1)
    throw InputError("internal rank report needs exactly one relator, got " +
                     std::to_string(pres.num_relators()));
  const std::uint32_t n = pres.num_generators();
  if (m_max < 1 || m_max > n) throw InputError("m_max must satisfy 1 <= m_max <= n");
  for (const RankCandidate& rc : candidates)
    if (rc.m < 1 || rc.m > m_max) throw InputError("candidate declared for m outside 1..m_max");

  LeadingForm eta = leading_form(pres.relators().front(), pres.prime(), N, n);
  InternalRankReport report;
  report.num_generators = n;
  report.leading_degree = eta.degree();
  report.ir_upper_bound = n;

  for (std::uint32_t m = 1; m <= m_max; ++m) {
    RankEntry entry;
    entry.m = m;
    entry.obstruction = search_obstruction(eta, m, options);
    for (const RankCandidate& rc : candidates)
      if (rc.m == m) entry.candidate_verdicts.push_back(verify_epimorphism(pres, rc.candidate, m));
    if (entry.obstruction.verdict == ObstructionVerdict::NoEpiCertified) {
      report.largest_certified_impossible = m;
      report.ir_upper_bound = std::min(report.ir_upper_bound, m - 1);
    }
    if (entry.confirmed()) {
      report.largest_confirmed = m;
      report.ir_lower_bound = std::max(report.ir_lower_bound, m);
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

nlohmann::json to_json(const ObstructionReport& report) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const FpMatrix& B : report.witnesses) witnesses.push_back(B.to_rows());
  return {{"m", report.target_rank},
          {"k", report.degree},
          {"spaces", report.spaces_examined},
          {"verdict", to_string(report.verdict)},
          {"witnesses", witnesses},
          {"note", "CANDIDATE_EXISTS means the necessary condition is satisfiable; it does "
                   "not prove that an epimorphism exists"}};
}

nlohmann::json to_json(const InternalRankReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const RankEntry& e : report.entries) {
    nlohmann::json verdicts = nlohmann::json::array();
    for (EpiVerdict v : e.candidate_verdicts) verdicts.push_back(to_string(v));
    entries.push_back({{"m", e.m},
                       {"verdict", to_string(e.obstruction.verdict)},
                       {"spaces", e.obstruction.spaces_examined},
                       {"witnesses", e.obstruction.witnesses.size()},
                       {"candidates", verdicts}});
  }
  nlohmann::json j = {{"n", report.num_generators},
                      {"k", report.leading_degree},
                      {"entries", entries},
                      {"ir_upper_bound", report.ir_upper_bound},
                      {"ir_lower_bound", report.ir_lower_bound}};
  j["largest_certified_impossible"] =
      report.largest_certified_impossible ? nlohmann::json(*report.largest_certified_impossible)
                                          : nlohmann::json(nullptr);
  j["largest_confirmed"] = report.largest_confirmed ? nlohmann::json(*report.largest_confirmed)
                                                    : nlohmann::json(nullptr);
  return j;
}

}  // namespace prop
