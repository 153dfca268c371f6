#include "prop/gs_bounds.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "prop/error.hpp"
#include "prop/magnus.hpp"

namespace prop {

namespace {

using BigInt = boost::multiprecision::cpp_int;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw InputError("Koch report overflows 64 bits");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw InputError("Koch report overflows 64 bits");
  return out;
}

}  // namespace

std::vector<std::int64_t> relator_degree_sequence(const Presentation& pres, std::uint32_t N) {
  std::vector<std::int64_t> r(N + 1, 0);
  r[0] = 1;
  for (std::size_t i = 0; i < pres.num_relators(); ++i) {
    Valuation v = valuation(pres.relators()[i], pres.prime(), N, pres.num_generators());
    if (!v.is_exact())
      throw TruncationError("relator " + std::to_string(i) + " has valuation above N = " +
                            std::to_string(N));
    ++r[v.degree()];
  }
  return r;
}

bool gs_quadratic(std::int64_t d, std::int64_t r) {
  return BigInt(4) * r > BigInt(d) * d;
}

bool koch_power_bound(std::int64_t d, std::int64_t r, std::uint32_t m) {
  if (m < 2) throw InputError("power bound needs m >= 2");
  if (d < 1) throw InputError("power bound needs d >= 1");
  BigInt lhs = BigInt(r) * boost::multiprecision::pow(BigInt(m), m);
  BigInt rhs = boost::multiprecision::pow(BigInt(d), m) * boost::multiprecision::pow(BigInt(m - 1), m - 1);
  return lhs > rhs;
}

GSReport koch_report(std::int64_t d, const std::vector<std::int64_t>& r_seq,
                     const std::vector<std::int64_t>& b_seq, std::uint32_t n_max,
                     const std::vector<std::uint32_t>& power_ms) {
  if (d < 1) throw InputError("Koch report needs at least one generator");
  if (r_seq.size() < n_max + 1 || b_seq.size() < n_max + 1)
    throw InputError("sequence length mismatch: need entries 0.." + std::to_string(n_max));
  if (r_seq[0] != 1 || b_seq[0] != 1) throw InputError("conventions require r_0 = b_0 = 1");

  GSReport rep;
  rep.d = d;
  rep.r.assign(r_seq.begin(), r_seq.begin() + n_max + 1);
  rep.b.assign(b_seq.begin(), b_seq.begin() + n_max + 1);
  rep.c.resize(n_max + 1);
  std::int64_t running = 0;
  for (std::uint32_t n = 0; n <= n_max; ++n) {
    running = checked_add(running, rep.b[n]);
    rep.c[n] = running;
  }
  rep.E.assign(n_max + 1, 0);
  rep.E_at_least_one.assign(n_max + 1, false);
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    std::int64_t e = -checked_mul(d, rep.c[n - 1]);
    for (std::uint32_t v = 0; v <= n; ++v) e = checked_add(e, checked_mul(rep.c[v], rep.r[n - v]));
    rep.E[n] = e;
    rep.E_at_least_one[n] = e >= 1;
  }
  for (std::size_t n = 1; n < r_seq.size(); ++n)
    rep.relator_count = checked_add(rep.relator_count, r_seq[n]);
  rep.quadratic_bound = gs_quadratic(d, rep.relator_count);
  for (std::uint32_t m : power_ms) rep.power_bounds.emplace_back(m, koch_power_bound(d, rep.relator_count, m));
  return rep;
}

nlohmann::json to_json(const GSReport& report) {
  nlohmann::json E = nlohmann::json::array();
  nlohmann::json flags = nlohmann::json::array();
  for (std::size_t n = 1; n < report.E.size(); ++n) {
    E.push_back(report.E[n]);
    flags.push_back(static_cast<bool>(report.E_at_least_one[n]));
  }
  nlohmann::json power = nlohmann::json::array();
  for (const auto& [m, ok] : report.power_bounds) power.push_back({{"m", m}, {"holds", ok}});
  return {{"d", report.d},
          {"r", report.r},
          {"b", report.b},
          {"c", report.c},
          {"E", E},
          {"E_at_least_one", flags},
          {"relators", report.relator_count},
          {"quadratic", report.quadratic_bound},
          {"power_bounds", power},
          {"note", kKochInterpretationNote}};
}

}  // namespace prop
