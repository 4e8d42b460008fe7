#pragma once

// Seeded random programs and interpretations for property and equivalence
// checks. Every generator is a pure function of the engine state.

#include "eflp/program.hpp"
#include "eflp/interpretation.hpp"
#include "eflp/oracles.hpp"

#include <random>
#include <string>
#include <vector>

namespace eflp::gen {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

template <class T>
const T& pick(Rng& rng, const std::vector<T>& items) {
  return items[uniform(rng, 0, items.size() - 1)];
}

inline std::vector<std::string> atom_names(std::size_t n) {
  static const char* names[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(i < 8 ? names[i] : "x" + std::to_string(i));
  return out;
}

inline Literal random_literal(Rng& rng, const std::vector<std::string>& atoms, bool allow_strong = true) {
  return Literal{pick(rng, atoms), allow_strong && coin(rng)};
}

struct CrispOptions {
  std::size_t max_atoms = 5;
  std::size_t max_rules = 8;
  std::size_t max_body = 3;
};

/// Boolean program whose bodies are conjunctions of literals and weakly
/// negated literals.
inline Program crisp_program(Rng& rng, const CrispOptions& o = {}) {
  Program p;
  p.config = LatticeConfig(Lattice::boolean());
  auto atoms = atom_names(uniform(rng, 1, o.max_atoms));
  p.declared_atoms.insert(atoms.begin(), atoms.end());
  std::size_t rules = uniform(rng, 0, o.max_rules);
  for (std::size_t r = 0; r < rules; ++r) {
    std::vector<Formula> body;
    std::size_t n = uniform(rng, 0, o.max_body);
    for (std::size_t i = 0; i < n; ++i) {
      Formula lit = Formula::literal(random_literal(rng, atoms));
      body.push_back(coin(rng) ? Formula::weak_neg(std::move(lit)) : std::move(lit));
    }
    p.rules.push_back({random_literal(rng, atoms), Formula::fold("godel", std::move(body)), std::nullopt});
  }
  return p;
}

/// Degrees a generator may use on a lattice: the carrier when finite,
/// otherwise a fixed set of small fractions.
inline std::vector<TruthValue> sample_values(const Lattice& lattice) {
  if (lattice.is_finite()) return lattice.carrier();
  return {TruthValue::zero(),          TruthValue::fraction(1, 4), TruthValue::fraction(1, 3),
          TruthValue::fraction(1, 2), TruthValue::fraction(2, 3), TruthValue::fraction(3, 4),
          TruthValue::one()};
}

struct FuzzyOptions {
  std::size_t max_atoms = 4;
  std::size_t max_rules = 6;
  std::size_t max_depth = 2;
  bool strong_negation = true;
  bool weak_negation = true;
  /// Binary connective ids to draw from.
  std::vector<std::string> connectives{"godel", "godel_or", "lukasiewicz", "lukasiewicz_or"};
};

inline Formula random_formula(Rng& rng, const std::vector<std::string>& atoms, const std::vector<TruthValue>& values,
                              const FuzzyOptions& o, std::size_t depth) {
  std::size_t choice = uniform(rng, 0, depth == 0 ? 2 : 4);
  switch (choice) {
    case 0:
      return Formula::constant(pick(rng, values));
    case 1:
      return Formula::literal(random_literal(rng, atoms, o.strong_negation));
    case 2:
      if (o.weak_negation) return Formula::weak_neg(Formula::literal(random_literal(rng, atoms, o.strong_negation)));
      return Formula::literal(random_literal(rng, atoms, o.strong_negation));
    default:
      return Formula::apply(pick(rng, o.connectives), {random_formula(rng, atoms, values, o, depth - 1),
                                                        random_formula(rng, atoms, values, o, depth - 1)});
  }
}

/// Program over `config`'s lattice with random nested bodies.
inline Program fuzzy_program(Rng& rng, const LatticeConfig& config, const FuzzyOptions& o = {}) {
  Program p;
  p.config = config;
  auto atoms = atom_names(uniform(rng, 1, o.max_atoms));
  p.declared_atoms.insert(atoms.begin(), atoms.end());
  auto values = sample_values(config.lattice());
  std::size_t rules = uniform(rng, 0, o.max_rules);
  for (std::size_t r = 0; r < rules; ++r)
    p.rules.push_back({random_literal(rng, atoms, o.strong_negation), random_formula(rng, atoms, values, o, o.max_depth),
                       std::nullopt});
  return p;
}

inline ParaInterp random_interp(Rng& rng, const UniversePtr& u, const std::vector<TruthValue>& values) {
  ParaInterp out(u);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = {pick(rng, values), pick(rng, values)};
  return out;
}

inline NonParaInterp random_nonpara(Rng& rng, const UniversePtr& u, const std::vector<TruthValue>& values) {
  NonParaInterp out(u);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = pick(rng, values);
  return out;
}

/// An interpretation at least as large as `base` in the truth order.
inline ParaInterp random_above(Rng& rng, const ParaInterp& base, const std::vector<TruthValue>& values) {
  ParaInterp out = base;
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::vector<TruthValue> t_up, f_up;
    for (const auto& v : values) {
      if (v >= base[i].t) t_up.push_back(v);
      if (v >= base[i].f) f_up.push_back(v);
    }
    out[i] = {pick(rng, t_up), pick(rng, f_up)};
  }
  return out;
}

struct SaadOptions {
  std::size_t max_atoms = 4;
  std::size_t max_rules = 6;
  std::size_t max_body = 3;
  std::vector<TruthValue> bounds{TruthValue::zero(), TruthValue::fraction(1, 2), TruthValue::one()};
};

inline SaadProgram saad_program(Rng& rng, const SaadOptions& o = {}) {
  SaadProgram q;
  auto atoms = atom_names(uniform(rng, 1, o.max_atoms));
  q.declared_atoms.insert(atoms.begin(), atoms.end());
  std::size_t rules = uniform(rng, 0, o.max_rules);
  for (std::size_t r = 0; r < rules; ++r) {
    SaadRule rule;
    rule.head = {random_literal(rng, atoms), pick(rng, o.bounds)};
    std::size_t n = uniform(rng, 0, o.max_body);
    for (std::size_t i = 0; i < n; ++i) {
      AnnotatedLiteral a{random_literal(rng, atoms), pick(rng, o.bounds)};
      (coin(rng) ? rule.negative : rule.positive).push_back(std::move(a));
    }
    q.rules.push_back(std::move(rule));
  }
  return q;
}

struct CornejoOptions {
  std::size_t max_atoms = 4;
  std::size_t max_rules = 5;
  std::size_t max_constraints = 2;
  std::size_t max_body = 2;
};

/// Constraint program over chain(n) with Gödel or Lukasiewicz bodies.
inline CornejoProgram cornejo_program(Rng& rng, std::size_t chain, const CornejoOptions& o = {}) {
  CornejoProgram q;
  q.config = LatticeConfig(Lattice::chain(chain));
  if (coin(rng)) q.config.set_conjunction_family("lukasiewicz");
  auto atoms = atom_names(uniform(rng, 1, o.max_atoms));
  q.declared_atoms.insert(atoms.begin(), atoms.end());
  auto values = q.config.lattice().carrier();
  auto body = [&] {
    std::vector<Formula> items;
    std::size_t n = uniform(rng, 1, o.max_body);
    for (std::size_t i = 0; i < n; ++i) {
      switch (uniform(rng, 0, 3)) {
        case 0:
          items.push_back(Formula::constant(pick(rng, values)));
          break;
        case 1:
          items.push_back(Formula::weak_neg(Formula::atom(pick(rng, atoms))));
          break;
        default:
          items.push_back(Formula::atom(pick(rng, atoms)));
      }
    }
    return Formula::fold(q.config.conjunction(), std::move(items));
  };
  std::size_t rules = uniform(rng, 0, o.max_rules);
  for (std::size_t r = 0; r < rules; ++r) q.rules.push_back({Literal::pos(pick(rng, atoms)), body(), std::nullopt});
  std::size_t constraints = uniform(rng, 0, o.max_constraints);
  for (std::size_t c = 0; c < constraints; ++c) q.constraints.push_back({pick(rng, values), body()});
  return q;
}

}  // namespace eflp::gen
