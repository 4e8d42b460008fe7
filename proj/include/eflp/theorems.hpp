#pragma once

// Cross-checks between the approximator-based semantics and the reference
// semantics in oracles.hpp, on single programs and on seeded corpora.

#include "eflp/fixpoint.hpp"
#include "eflp/generate.hpp"
#include "eflp/io/json.hpp"
#include "eflp/oracles.hpp"
#include "eflp/translate.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eflp {

enum class Check { wf_sakama, stable_reduct, saad, cornejo, normal };

inline const std::vector<std::pair<std::string, Check>>& check_names() {
  static const std::vector<std::pair<std::string, Check>> names = {
      {"wf-sakama", Check::wf_sakama}, {"stable-reduct", Check::stable_reduct}, {"saad", Check::saad},
      {"cornejo", Check::cornejo},     {"normal", Check::normal},
  };
  return names;
}

inline Check parse_check(const std::string& name) {
  for (const auto& [n, c] : check_names())
    if (n == name) return c;
  throw ConfigError("unknown check '" + name + "'");
}

inline std::string check_name(Check c) {
  for (const auto& [n, k] : check_names())
    if (k == c) return n;
  return "?";
}

/// Outcome on one program: whether both sides agree, and what each side said.
struct CaseOutcome {
  bool agree = true;
  io::json detail;
};

/// Well-founded fixpoint, viewed as literal sets, against the Sakama operators.
inline CaseOutcome check_wf_sakama(const Program& p) {
  CompiledProgram cp(p, true);
  auto wf = well_founded(cp).value;
  auto via_pairs = zeta2(wf);
  auto via_oracle = sakama_wf(p);
  return {via_pairs == via_oracle,
          {{"well_founded", io::to_json(wf)}, {"as_literal_sets", io::to_json(via_pairs)},
           {"sakama", io::to_json(via_oracle)}}};
}

/// Two-valued stable fixpoints against reduct stable models, and their
/// consistent part against Gelfond-Lifschitz answer sets.
inline CaseOutcome check_stable_reduct(const Program& p) {
  CompiledProgram cp(p, true);
  auto fixpoints = enumerate_stable_models(cp, {TruthValue::zero(), TruthValue::one()});
  auto reduct_models = si_stable_models(p);
  std::vector<ParaInterp> consistent;
  for (const auto& m : fixpoints)
    if (is_consistent(m, p.config)) consistent.push_back(m);
  auto answer_sets = gl_answer_sets(p);
  return {fixpoints == reduct_models && consistent == answer_sets,
          {{"stable_fixpoints", io::to_json(fixpoints)},
           {"reduct_models", io::to_json(reduct_models)},
           {"consistent_fixpoints", io::to_json(consistent)},
           {"answer_sets", io::to_json(answer_sets)}}};
}

/// Annotated stable models, lifted, against stable fixpoints of the translation.
inline CaseOutcome check_saad(const SaadProgram& q, const SaadTranslationOptions& options = {}) {
  Program translated = translate_saad(q, options);
  CompiledProgram cp(translated, true);
  auto models = saad_stable_models(q);
  std::vector<ParaInterp> lifted;
  for (const auto& m : models) lifted.push_back(lift_saad(m.interp, cp.universe()));
  std::sort(lifted.begin(), lifted.end());
  bool injective = std::adjacent_find(lifted.begin(), lifted.end()) == lifted.end();
  SearchOptions search;
  search.restrict_to_grid = false;
  auto fixpoints = enumerate_stable_models(cp, search);
  return {injective && lifted == fixpoints,
          {{"translation", to_text(translated)},
           {"saad_models", io::to_json(models)},
           {"lifted", io::to_json(lifted)},
           {"stable_fixpoints", io::to_json(fixpoints)}}};
}

/// Constraint-program stable models against the consistent stable fixpoints
/// of the translation.
inline CaseOutcome check_cornejo(const CornejoProgram& q) {
  Program translated = translate_cornejo(q);
  CompiledProgram cp(translated, true);
  auto grid = q.config.lattice().carrier();
  auto models = cornejo_stable_models(q, grid);
  std::vector<ParaInterp> lifted;
  for (const auto& k : models) lifted.push_back(lift_cornejo_fixpoint(k, q, cp.universe()));
  std::sort(lifted.begin(), lifted.end());
  std::vector<ParaInterp> consistent;
  for (const auto& m : enumerate_stable_models(cp, grid))
    if (is_consistent(m, translated.config)) consistent.push_back(m);
  return {lifted == consistent,
          {{"translation", to_text(translated)},
           {"stable_models", io::to_json(models)},
           {"lifted", io::to_json(lifted)},
           {"consistent_stable_fixpoints", io::to_json(consistent)}}};
}

/// First component of the approximator on lifted pairs against the
/// classical approximator, for `pairs` random pairs (K, L).
inline CaseOutcome check_normal(const Program& p, gen::Rng& rng, std::size_t pairs = 5) {
  CompiledProgram cp(p, true);
  auto values = gen::sample_values(p.config.lattice());
  for (std::size_t i = 0; i < pairs; ++i) {
    auto k = gen::random_nonpara(rng, cp.universe(), values);
    auto l = gen::random_nonpara(rng, cp.universe(), values);
    auto via_pairs = approximator_first(cp, lift_normal(k), lift_normal(l));
    auto classical = normal_approximator(p, k, l);
    if (!(via_pairs == lift_normal(classical)))
      return {false,
              {{"k", io::to_json(k)}, {"l", io::to_json(l)}, {"approximator", io::to_json(via_pairs)},
               {"classical", io::to_json(classical)}}};
  }
  return {true, io::json::object()};
}

struct CorpusReport {
  std::string check;
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::size_t agreements = 0;
  std::size_t divergences = 0;
  std::optional<io::json> first_divergence;

  io::json to_json() const {
    return {{"check", check},
            {"seed", seed},
            {"cases", cases},
            {"agreements", agreements},
            {"divergences", divergences},
            {"first_divergence", first_divergence ? *first_divergence : io::json(nullptr)}};
  }
};

/// Runs a check on `count` programs drawn from the generator that fits it.
inline CorpusReport run_corpus(Check check, std::size_t count, std::uint64_t seed) {
  CorpusReport report;
  report.check = check_name(check);
  report.seed = seed;
  gen::Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    CaseOutcome outcome;
    std::string text;
    switch (check) {
      case Check::wf_sakama: {
        auto p = gen::crisp_program(rng);
        text = to_text(p);
        outcome = check_wf_sakama(p);
        break;
      }
      case Check::stable_reduct: {
        auto p = gen::crisp_program(rng);
        text = to_text(p);
        outcome = check_stable_reduct(p);
        break;
      }
      case Check::saad: {
        auto q = gen::saad_program(rng);
        text = to_text(q);
        outcome = check_saad(q);
        break;
      }
      case Check::cornejo: {
        auto q = gen::cornejo_program(rng, i % 2 == 0 ? 3 : 5);
        text = to_text(q);
        outcome = check_cornejo(q);
        break;
      }
      case Check::normal: {
        gen::FuzzyOptions o;
        o.strong_negation = false;
        auto p = gen::fuzzy_program(rng, LatticeConfig(Lattice::chain(3)), o);
        text = to_text(p);
        outcome = check_normal(p, rng);
        break;
      }
    }
    ++report.cases;
    if (outcome.agree) {
      ++report.agreements;
    } else {
      ++report.divergences;
      if (!report.first_divergence)
        report.first_divergence = io::json{{"case", i}, {"program", text}, {"detail", outcome.detail}};
    }
  }
  return report;
}

}  // namespace eflp
