#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "acceptance_suite.hpp"
#include "prop/error.hpp"
#include "prop/fox.hpp"
#include "prop/gs_bounds.hpp"
#include "prop/magnus.hpp"
#include "prop/obstruction.hpp"
#include "prop/quotient.hpp"
#include "prop/simplicial.hpp"

using nlohmann::json;

namespace {

enum ExitCode { kOk = 0, kFailure = 1, kInputError = 2, kGuardrail = 3 };

struct Options {
  std::string pres_path;
  std::string group_path;
  std::uint32_t N = 4;
  std::uint32_t L = 2;
  std::uint32_t m = 1;
  std::uint32_t m_max = 1;
  std::uint32_t n = 1;
  std::uint32_t p = 2;
  std::uint32_t q_max = 4;
  std::uint32_t cyclic = 0;
  std::optional<std::size_t> relator;
  std::string wrt;
  std::vector<std::string> candidates;
  std::vector<std::uint64_t> h;
  bool json = false;
  unsigned threads = 1;
  std::uint64_t seed = prop::acceptance::kDefaultSeed;
  bool override_guardrail = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw prop::InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

prop::Presentation load_presentation(const Options& o) {
  if (o.pres_path.empty()) throw prop::InputError("--pres is required");
  return prop::parse_presentation(read_file(o.pres_path));
}

std::vector<std::size_t> selected_relators(const Options& o, const prop::Presentation& pres) {
  if (o.relator) {
    if (*o.relator >= pres.num_relators())
      throw prop::InputError("relator index " + std::to_string(*o.relator) + " out of range");
    return {*o.relator};
  }
  std::vector<std::size_t> all(pres.num_relators());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return all;
}

prop::ObstructionOptions obstruction_options(const Options& o) {
  return {std::max(1U, o.threads), o.override_guardrail};
}

template <typename T>
std::string join(const std::vector<T>& v, const char* sep = " ") {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i];
  return out.str();
}

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.json)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

int cmd_expand(const Options& o) {
  const auto pres = load_presentation(o);
  const std::uint32_t d = pres.num_generators();
  json rels = json::array();
  std::ostringstream text;
  for (std::size_t i : selected_relators(o, pres)) {
    const auto& r = pres.relators()[i];
    const auto series = prop::magnus_expand(r, pres.prime(), o.N, d);
    const auto v = prop::valuation_of_expansion(series);
    json entry = {{"index", i},
                  {"relator", prop::to_string(r, pres.generator_names())},
                  {"valuation", prop::to_string(v)},
                  {"series", prop::to_json(series)}};
    text << "relator " << i << ": " << prop::to_string(r, pres.generator_names()) << '\n'
         << "  M(r) = " << prop::to_string(series) << '\n'
         << "  valuation: " << prop::to_string(v) << '\n';
    if (v.is_exact()) {
      const auto eta = prop::leading_form(r, pres.prime(), o.N, d);
      entry["leading_form"] = prop::to_json(eta);
      text << "  leading form: " << prop::to_string(eta) << '\n';
    } else {
      entry["leading_form"] = nullptr;
    }
    rels.push_back(entry);
  }
  emit(o, {{"p", pres.prime()}, {"N", o.N}, {"d", d}, {"relators", rels}}, text.str());
  return kOk;
}

int cmd_fox(const Options& o) {
  const auto pres = load_presentation(o);
  const auto& names = pres.generator_names();
  std::vector<std::uint32_t> wrt;
  if (o.wrt.empty()) {
    for (std::uint32_t j = 0; j < pres.num_generators(); ++j) wrt.push_back(j);
  } else {
    wrt.push_back(pres.generator_index(o.wrt));
  }
  json rels = json::array();
  std::ostringstream text;
  for (std::size_t i : selected_relators(o, pres)) {
    const auto& r = pres.relators()[i];
    json ders = json::array();
    for (std::uint32_t j : wrt) {
      const auto e = prop::fox_derivative(r, j, pres.prime(), pres.num_generators());
      ders.push_back({{"wrt", names[j]}, {"value", prop::to_json(e, names)}});
      text << "d r" << i << " / d " << names[j] << " = " << prop::to_string(e, names) << '\n';
    }
    rels.push_back({{"index", i},
                    {"relator", prop::to_string(r, names)},
                    {"derivatives", ders}});
  }
  emit(o, {{"p", pres.prime()}, {"relators", rels}}, text.str());
  return kOk;
}

int cmd_grade(const Options& o) {
  const auto pres = load_presentation(o);
  const auto qa = prop::build_quotient(pres, o.N, o.override_guardrail);
  json j = prop::to_json(qa);
  j["warnings"] = qa.warnings();
  std::ostringstream text;
  text << "n  b_n  c_n\n";
  for (std::uint32_t n = 0; n <= o.N; ++n) text << n << "  " << qa.b()[n] << "  " << qa.c()[n] << '\n';
  for (const auto& w : qa.warnings()) text << "warning: " << w << '\n';
  emit(o, j, text.str());
  return kOk;
}

prop::GroupWord single_relator(const Options& o, const prop::Presentation& pres) {
  if (o.relator) return pres.relators().at(selected_relators(o, pres).front());
  if (pres.num_relators() != 1)
    throw prop::InputError("presentation has " + std::to_string(pres.num_relators()) +
                           " relators; choose one with --relator");
  return pres.relators().front();
}

int cmd_obstruct(const Options& o) {
  const auto pres = load_presentation(o);
  const auto eta =
      prop::leading_form(single_relator(o, pres), pres.prime(), o.N, pres.num_generators());
  const auto rep = prop::search_obstruction(eta, o.m, obstruction_options(o));
  std::ostringstream text;
  text << "leading form (degree " << rep.degree << "): " << prop::to_string(eta) << '\n'
       << "m = " << rep.target_rank << ", column spaces examined: " << rep.spaces_examined << '\n'
       << "verdict: " << prop::to_string(rep.verdict) << '\n';
  for (const auto& B : rep.witnesses) {
    text << "witness:";
    for (const auto& row : B.to_rows()) text << " [" << join(row) << "]";
    text << '\n';
  }
  if (rep.verdict == prop::ObstructionVerdict::CandidateExists)
    text << "note: the condition is necessary only; this does not prove an epimorphism exists\n";
  emit(o, prop::to_json(rep), text.str());
  return kOk;
}

/// "--candidate 2:y1,y1^-1,y2,y2^-1".
prop::RankCandidate parse_rank_candidate(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos || colon == 0)
    throw prop::InputError("candidate must look like 'm:w1,w2,...'");
  std::uint32_t m = 0;
  try {
    m = static_cast<std::uint32_t>(std::stoul(spec.substr(0, colon)));
  } catch (const std::exception&) {
    throw prop::InputError("candidate rank '" + spec.substr(0, colon) + "' is not a number");
  }
  return {m, prop::parse_candidate(std::string_view(spec).substr(colon + 1), m)};
}

int cmd_rank(const Options& o) {
  const auto pres = load_presentation(o);
  std::vector<prop::RankCandidate> cands;
  for (const auto& c : o.candidates) cands.push_back(parse_rank_candidate(c));
  const auto rep = prop::internal_rank_report(pres, o.N, o.m_max, cands, obstruction_options(o));
  std::ostringstream text;
  text << "n = " << rep.num_generators << ", leading degree " << rep.leading_degree << '\n'
       << "m  verdict  spaces  candidates\n";
  for (const auto& e : rep.entries) {
    std::vector<std::string> verdicts;
    for (auto v : e.candidate_verdicts) verdicts.push_back(prop::to_string(v));
    text << e.m << "  " << prop::to_string(e.obstruction.verdict) << "  "
         << e.obstruction.spaces_examined << "  " << (verdicts.empty() ? "-" : join(verdicts, ","))
         << '\n';
  }
  text << "internal rank bounds: " << rep.ir_lower_bound << " <= Ir <= " << rep.ir_upper_bound
       << '\n';
  emit(o, prop::to_json(rep), text.str());
  return kOk;
}

int cmd_gs(const Options& o) {
  const auto pres = load_presentation(o);
  const auto qa = prop::build_quotient(pres, o.N, o.override_guardrail);
  const std::vector<std::int64_t> b(qa.b().begin(), qa.b().end());
  const auto rep = prop::koch_report(pres.num_generators(), prop::relator_degree_sequence(pres, o.N),
                                     b, o.N);
  std::ostringstream text;
  text << "d = " << rep.d << ", relators = " << rep.relator_count << '\n' << "n  r_n  b_n  c_n  E_n\n";
  for (std::uint32_t n = 0; n <= o.N; ++n) {
    text << n << "  " << rep.r[n] << "  " << rep.b[n] << "  " << rep.c[n] << "  ";
    if (n == 0)
      text << "-";
    else
      text << rep.E[n] << (rep.E_at_least_one[n] ? "" : "  (below 1)");
    text << '\n';
  }
  text << "4r > d^2: " << (rep.quadratic_bound ? "yes" : "no") << '\n';
  for (const auto& [m, holds] : rep.power_bounds)
    text << "power bound m=" << m << ": " << (holds ? "yes" : "no") << '\n';
  text << "note: " << prop::kKochInterpretationNote << '\n';
  emit(o, prop::to_json(rep), text.str());
  return kOk;
}

prop::FiniteGroupTable load_group(const Options& o) {
  if (o.cyclic > 0) return prop::FiniteGroupTable::cyclic(o.cyclic);
  if (o.group_path.empty()) throw prop::InputError("--group or --cyclic is required");
  json j;
  try {
    j = json::parse(read_file(o.group_path));
  } catch (const json::parse_error& e) {
    throw prop::InputError(std::string("group file is not valid JSON: ") + e.what());
  }
  return prop::FiniteGroupTable::from_json(j);
}

int cmd_e1(const Options& o) {
  std::vector<std::uint64_t> h = o.h;
  if (h.empty()) {
    const auto dims = prop::wbar_homology(load_group(o), o.p, o.m + 1, o.override_guardrail);
    h.assign(dims.begin() + 1, dims.end());
  }
  const std::uint64_t dim = prop::e1_dimensions(h, o.n, o.m);
  std::ostringstream text;
  text << "h = (" << join(h, ", ") << ")\n"
       << "dim E1_{" << o.n << "," << o.m << "} = " << dim << '\n';
  emit(o, {{"n", o.n}, {"m", o.m}, {"h", h}, {"dim", dim}}, text.str());
  return kOk;
}

int cmd_skeleton(const Options& o) {
  const auto pres = load_presentation(o);
  const auto sk = prop::build_one_skeleton(pres, o.L);
  const auto rep = prop::check_simplicial_identities(sk);
  json j = prop::to_json(sk);
  json violations = json::array();
  for (const auto& v : rep.violations)
    violations.push_back({{"identity", v.identity}, {"level", v.level}, {"generator", v.generator},
                          {"i", v.i}, {"j", v.j}});
  j["identities"] = {{"checks", rep.checks}, {"ok", rep.ok()}, {"violations", violations}};

  std::ostringstream text;
  for (std::uint32_t n = 0; n <= sk.top_level; ++n) {
    const auto labels = sk.generator_labels(n);
    text << "level " << n << ": " << join(labels) << '\n';
    if (n == 0) continue;
    const auto below = sk.generator_labels(n - 1);
    for (std::uint32_t g = sk.num_base; g < labels.size(); ++g) {
      text << "  " << labels[g] << ":";
      for (std::uint32_t i = 0; i <= n; ++i)
        text << " d" << i << "=" << prop::to_string(sk.faces[n][i][g], below);
      text << '\n';
    }
  }
  text << "simplicial identities: " << rep.checks << " checks, " << rep.violations.size()
       << " violations\n";
  emit(o, j, text.str());
  return rep.ok() ? kOk : kFailure;
}

int cmd_wbar(const Options& o) {
  const auto g = load_group(o);
  const auto dims = prop::wbar_homology(g, o.p, o.q_max, o.override_guardrail);
  std::ostringstream text;
  text << "|G| = " << g.order() << ", p = " << o.p << '\n' << "q  dim H_q\n";
  for (std::size_t q = 0; q < dims.size(); ++q) text << q << "  " << dims[q] << '\n';
  emit(o, {{"order", g.order()}, {"p", o.p}, {"dims", dims}}, text.str());
  return kOk;
}

int cmd_selftest(const Options& o) {
  const auto results = prop::acceptance::run_all(o.seed);
  bool all = true;
  json arr = json::array();
  std::ostringstream text;
  for (const auto& r : results) {
    all = all && r.passed;
    arr.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    text << prop::acceptance::format_line(r) << '\n';
  }
  text << (all ? "all criteria passed" : "some criteria failed") << '\n';
  emit(o, {{"seed", o.seed}, {"criteria", arr}, {"passed", all}}, text.str());
  return all ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact computations for finitely presented pro-p groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "prop 0.1.0");

  auto add_json = [&](CLI::App* c) { c->add_flag("--json", o.json, "Emit JSON"); };
  auto add_pres = [&](CLI::App* c) {
    c->add_option("--pres", o.pres_path, "Presentation file")->required();
  };
  auto add_N = [&](CLI::App* c) {
    c->add_option("-N", o.N, "Truncation degree")->check(CLI::Range(1U, 1000U));
  };
  auto add_override = [&](CLI::App* c) {
    c->add_flag("--override-guardrail", o.override_guardrail, "Proceed past size guardrails");
  };
  auto add_relator = [&](CLI::App* c) {
    c->add_option("--relator", o.relator, "Relator index (0-based)");
  };
  auto add_group = [&](CLI::App* c) {
    c->add_option("--group", o.group_path, "Group table JSON file");
    c->add_option("--cyclic", o.cyclic, "Use the cyclic group of this order")
        ->check(CLI::Range(1U, 1000000U));
    c->add_option("-p", o.p, "Coefficient prime")->check(CLI::Range(2U, 65521U));
  };
  auto add_threads = [&](CLI::App* c) {
    c->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1U, 256U));
  };

  auto* expand = app.add_subcommand("expand", "Magnus expansion, valuation and leading form");
  add_pres(expand), add_N(expand), add_relator(expand), add_json(expand);

  auto* fox = app.add_subcommand("fox", "Fox derivatives of relators");
  add_pres(fox), add_relator(fox), add_json(fox);
  fox->add_option("--wrt", o.wrt, "Generator name (default: all)");

  auto* grade = app.add_subcommand("grade", "Dimension sequence b_n of the restricted group algebra");
  add_pres(grade), add_N(grade), add_override(grade), add_json(grade);

  auto* obstruct = app.add_subcommand("obstruct", "Obstruction search for G onto F(m)");
  add_pres(obstruct), add_N(obstruct), add_relator(obstruct), add_override(obstruct);
  add_threads(obstruct), add_json(obstruct);
  obstruct->add_option("-m", o.m, "Target rank")->required();

  auto* rank = app.add_subcommand("rank", "Internal rank report");
  add_pres(rank), add_N(rank), add_override(rank), add_threads(rank), add_json(rank);
  rank->add_option("--m-max", o.m_max, "Largest target rank")->required();
  rank->add_option("--candidate", o.candidates, "Candidate epimorphism 'm:w1,...,wn'");

  auto* gs = app.add_subcommand("gs", "Golod-Shafarevich and Koch report");
  add_pres(gs), add_N(gs), add_override(gs), add_json(gs);

  auto* e1 = app.add_subcommand("e1", "Dimension of the E1_{n,m} term");
  add_group(e1), add_override(e1), add_json(e1);
  e1->add_option("-n", o.n, "Number of tensor factors")->required();
  e1->add_option("-m", o.m, "Total internal degree")->required();
  e1->add_option("--homology", o.h, "dim H_q for q = 1, 2, ... (comma separated)")->delimiter(',');

  auto* skeleton = app.add_subcommand("skeleton", "One-skeleton of the simplicial resolution");
  add_pres(skeleton), add_json(skeleton);
  skeleton->add_option("-L", o.L, "Top level")->check(CLI::Range(1U, 12U));

  auto* wbar = app.add_subcommand("wbar", "Group homology from the bar complex");
  add_group(wbar), add_override(wbar), add_json(wbar);
  wbar->add_option("--q-max", o.q_max, "Highest homological degree");

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->add_option("--seed", o.seed, "Random seed");
  add_json(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }

  if (const char* env = std::getenv("PROP_GUARDRAIL_OVERRIDE"); env && std::string(env) == "1")
    o.override_guardrail = true;

  try {
    if (*expand) return cmd_expand(o);
    if (*fox) return cmd_fox(o);
    if (*grade) return cmd_grade(o);
    if (*obstruct) return cmd_obstruct(o);
    if (*rank) return cmd_rank(o);
    if (*gs) return cmd_gs(o);
    if (*e1) return cmd_e1(o);
    if (*skeleton) return cmd_skeleton(o);
    if (*wbar) return cmd_wbar(o);
    if (*selftest) return cmd_selftest(o);
  } catch (const prop::GuardrailError& e) {
    std::cerr << "guardrail: " << e.what() << '\n';
    return kGuardrail;
  } catch (const prop::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const prop::TruncationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}
