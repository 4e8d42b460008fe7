#pragma once

#include "eflp/oracles.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace eflp {

/// Fresh atom recording that a literal is defined: @d_p for p, @dn_p for -p.
inline std::string domain_atom(const Literal& l) { return (l.negated ? "@dn_" : "@d_") + l.atom; }

/// Literal whose domain atom is `atom`, if it is one.
inline std::optional<Literal> domain_literal(const std::string& atom) {
  if (atom.starts_with("@dn_") && atom.size() > 4) return Literal::neg(atom.substr(4));
  if (atom.starts_with("@d_") && atom.size() > 3) return Literal::pos(atom.substr(3));
  return std::nullopt;
}

inline std::string constraint_atom(std::size_t index) { return "@c_" + std::to_string(index); }

struct SaadTranslationOptions {
  /// Add @d_l <- geq[c](l) whenever both l:0 and l:c with c > 0 occur.
  bool domain_rules = true;
  /// For each rule with head bound 0, also add @d_l0 <- geq[1](body).
  /// Without it a literal defined only at degree 0 never marks itself as
  /// defined. The threshold keeps domain atoms two-valued.
  bool zero_head_rules = true;
};

namespace detail {

inline Formula saad_bound(const AnnotatedLiteral& a) {
  if (a.bound.is_zero()) return Formula::atom(domain_atom(a.lit));
  return Formula::apply(threshold_id(a.bound), {Formula::literal(a.lit)});
}

}  // namespace detail

/// Each rule l0:c0 <- l_i:c_i, not l_j:c_j becomes
/// l0 <- c0 & geq[c_i](l_i) & not geq[c_j](l_j), with geq[0](l) read as @d_l.
inline Program translate_saad(const SaadProgram& q, const SaadTranslationOptions& options = {}) {
  for (const auto& a : q.atoms())
    if (is_reserved_atom(a)) throw ConfigError("atom '" + a + "' uses the reserved '@' prefix");
  Program out;
  out.config = LatticeConfig(Lattice::rational());
  for (const auto& a : q.atoms()) out.declared_atoms.insert(a);
  const std::string conj = out.config.conjunction();

  std::set<Literal> zero_bound;
  std::map<Literal, std::set<TruthValue>> positive_bounds;
  auto note = [&](const AnnotatedLiteral& a) {
    if (a.bound.is_zero())
      zero_bound.insert(a.lit);
    else
      positive_bounds[a.lit].insert(a.bound);
  };

  for (const auto& r : q.rules) {
    note(r.head);
    std::vector<Formula> body;
    for (const auto& a : r.positive) {
      note(a);
      body.push_back(detail::saad_bound(a));
    }
    for (const auto& a : r.negative) {
      note(a);
      body.push_back(Formula::weak_neg(detail::saad_bound(a)));
    }
    std::vector<Formula> with_bound{Formula::constant(r.head.bound)};
    with_bound.insert(with_bound.end(), body.begin(), body.end());
    out.rules.push_back({r.head.lit, Formula::fold(conj, std::move(with_bound)), std::nullopt});
    if (options.zero_head_rules && r.head.bound.is_zero()) {
      Formula marker = Formula::fold(conj, body);
      if (!body.empty()) marker = Formula::apply(threshold_id(TruthValue::one()), {std::move(marker)});
      out.rules.push_back({Literal::pos(domain_atom(r.head.lit)), std::move(marker), std::nullopt});
    }
  }

  if (options.domain_rules) {
    for (const auto& l : zero_bound) {
      auto it = positive_bounds.find(l);
      if (it == positive_bounds.end()) continue;
      for (const auto& c : it->second)
        out.rules.push_back(
            {Literal::pos(domain_atom(l)), Formula::apply(threshold_id(c), {Formula::literal(l)}), std::nullopt});
    }
  }
  return out;
}

/// Atoms plus a domain atom for each of their literals.
inline UniversePtr saad_lift_universe(const std::vector<std::string>& atoms) {
  std::vector<std::string> all = atoms;
  for (const auto& a : atoms) {
    all.push_back(domain_atom(Literal::pos(a)));
    all.push_back(domain_atom(Literal::neg(a)));
  }
  return make_universe(std::move(all));
}

/// Truth of p from G(p), falsity from G(-p), 0 where undefined; a domain
/// atom is (1,0) when its literal is defined and (0,0) otherwise. Only the
/// atoms of `universe` are assigned.
inline ParaInterp lift_saad(const SaadInterp& g, const UniversePtr& universe) {
  ParaInterp out(universe);
  for (std::size_t i = 0; i < universe->size(); ++i) {
    const auto& atom = universe->atom(i);
    if (auto lit = domain_literal(atom)) {
      if (g.defined(*lit)) out[i] = {TruthValue::one(), TruthValue::zero()};
      continue;
    }
    if (auto it = g.values.find(Literal::pos(atom)); it != g.values.end()) out[i].t = it->second;
    if (auto it = g.values.find(Literal::neg(atom)); it != g.values.end()) out[i].f = it->second;
  }
  return out;
}

/// Rules copied; constraint number i (from 1), c <- B, becomes
/// @c_i <- B and -@c_i <- (1 - c).
inline Program translate_cornejo(const CornejoProgram& q) {
  for (const auto& a : q.atoms())
    if (is_reserved_atom(a)) throw ConfigError("atom '" + a + "' uses the reserved '@' prefix");
  Program out;
  out.config = q.config;
  out.config.set_strong_negator(NegatorKind::standard);
  for (const auto& a : q.atoms()) out.declared_atoms.insert(a);
  out.rules = q.rules;
  for (std::size_t i = 0; i < q.constraints.size(); ++i) {
    const auto& c = q.constraints[i];
    std::string atom = constraint_atom(i + 1);
    out.rules.push_back({Literal::pos(atom), c.body, std::nullopt});
    out.rules.push_back({Literal::neg(atom), Formula::constant(truth::standard_neg(c.bound)), std::nullopt});
  }
  return out;
}

/// Atoms occurring in the translated program get (K(p), neg K(p)), the
/// others (K(p), 0). K must cover the constraint atoms as well.
inline ParaInterp lift_cornejo(const NonParaInterp& k, const Program& translated) {
  std::set<std::string> occurring;
  for (const auto& r : translated.rules) {
    occurring.insert(r.head.atom);
    r.body.collect_atoms(occurring);
  }
  ParaInterp out(k.universe());
  for (std::size_t i = 0; i < k.size(); ++i) {
    out[i].t = k[i];
    if (occurring.contains(k.universe()->atom(i))) out[i].f = translated.config.strong_neg(k[i]);
  }
  return out;
}

/// The interpretation a stable K corresponds to among the stable fixpoints
/// of the translation: (K(p), 0) for ordinary atoms and, for constraint i,
/// @c_i = (value of its body under K, 1 - c).
inline ParaInterp lift_cornejo_fixpoint(const NonParaInterp& k, const CornejoProgram& q, const UniversePtr& universe) {
  ParaInterp out(universe);
  for (std::size_t i = 0; i < k.size(); ++i) out.at(k.universe()->atom(i)).t = k[i];
  for (std::size_t i = 0; i < q.constraints.size(); ++i) {
    const auto& c = q.constraints[i];
    out.at(constraint_atom(i + 1)) = {eval_classical(k, c.body, q.config), truth::standard_neg(c.bound)};
  }
  return out;
}

}  // namespace eflp
