#pragma once

// Reference semantics used to cross-check the approximator. Nothing here
// calls into semantics.hpp or fixpoint.hpp.

#include "eflp/interpretation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace eflp {

class OracleError : public Error {
 public:
  using Error::Error;
};

// ---- crisp programs ---------------------------------------------------------

/// Body of a crisp rule as a conjunction of literals and weakly negated literals.
struct ConjunctiveBody {
  LiteralSet positive;
  LiteralSet negative;
};

struct ConjunctiveRule {
  Literal head;
  ConjunctiveBody body;
};

namespace detail {

inline void flatten_conjunction(const Formula& f, const LatticeConfig& config, ConjunctiveBody& out) {
  switch (f.kind) {
    case Formula::Kind::constant:
      if (f.value.is_one()) return;
      break;
    case Formula::Kind::literal:
      out.positive.insert(f.lit);
      return;
    case Formula::Kind::weak_neg:
      if (f.children.front().kind == Formula::Kind::literal) {
        out.negative.insert(f.children.front().lit);
        return;
      }
      break;
    case Formula::Kind::connective: {
      auto c = config.connective(f.connective);
      if (c && c->is_conjunction()) {
        for (const auto& ch : f.children) flatten_conjunction(ch, config, out);
        return;
      }
      break;
    }
  }
  throw OracleError("rule body is not a conjunction of literals: " + to_text(f));
}

}  // namespace detail

/// Crisp program view. Requires the boolean lattice and conjunctive bodies.
inline std::vector<ConjunctiveRule> conjunctive_rules(const Program& program) {
  if (program.config.lattice().kind() != LatticeKind::boolean)
    throw OracleError("crisp oracles need the boolean lattice");
  std::vector<ConjunctiveRule> out;
  for (const auto& rule : program.rules) {
    if (rule.weight && !rule.weight->theta.is_one()) throw OracleError("crisp oracles do not accept weighted rules");
    ConjunctiveRule r{rule.head, {}};
    detail::flatten_conjunction(rule.body, program.config, r.body);
    out.push_back(std::move(r));
  }
  return out;
}

namespace detail {

inline bool subset(const LiteralSet& a, const LiteralSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool disjoint(const LiteralSet& a, const LiteralSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j)
      ++i;
    else if (*j < *i)
      ++j;
    else
      return false;
  }
  return true;
}

inline LiteralSet set_union(const LiteralSet& a, const LiteralSet& b) {
  LiteralSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

inline LiteralSet sakama_T(const std::vector<ConjunctiveRule>& rules, const LiteralSet& sigma, const LiteralSet& delta,
                           const LiteralSet& alpha) {
  const LiteralSet known = set_union(sigma, alpha);
  LiteralSet out;
  for (const auto& r : rules)
    if (subset(r.body.positive, known) && subset(r.body.negative, delta)) out.insert(r.head);
  return out;
}

inline LiteralSet sakama_F(const std::vector<ConjunctiveRule>& rules, const LiteralSet& lits, const LiteralSet& sigma,
                           const LiteralSet& delta, const LiteralSet& alpha) {
  const LiteralSet refuted = set_union(alpha, delta);
  LiteralSet out;
  for (const auto& l : lits) {
    bool all_blocked = true;
    for (const auto& r : rules) {
      if (!(r.head == l)) continue;
      bool blocked = !disjoint(r.body.positive, refuted) || !disjoint(r.body.negative, sigma);
      if (!blocked) {
        all_blocked = false;
        break;
      }
    }
    if (all_blocked) out.insert(l);
  }
  return out;
}

inline LiteralSet universe_literals(const Program& program) {
  return all_literals(Universe(program.atoms()));
}

}  // namespace detail

/// Literals derivable by one rule whose positive body is within sigma+alpha
/// and whose weakly negated body is within delta.
inline LiteralSet sakama_T(const Program& program, const LiteralSet& sigma, const LiteralSet& delta,
                           const LiteralSet& alpha) {
  return detail::sakama_T(conjunctive_rules(program), sigma, delta, alpha);
}

/// Literals all of whose rules are blocked: the positive body meets
/// alpha+delta or the weakly negated body meets sigma.
inline LiteralSet sakama_F(const Program& program, const LiteralSet& sigma, const LiteralSet& delta,
                           const LiteralSet& alpha) {
  return detail::sakama_F(conjunctive_rules(program), detail::universe_literals(program), sigma, delta, alpha);
}

/// Least fixpoint of (sigma, delta) -> (sigma + lfp T, delta + gfp F).
inline SakamaPair sakama_wf(const Program& program) {
  const auto rules = conjunctive_rules(program);
  const auto lits = detail::universe_literals(program);
  SakamaPair cur;
  for (;;) {
    LiteralSet up;
    for (;;) {
      auto next = detail::sakama_T(rules, cur.proven, cur.defaults, up);
      if (next == up) break;
      up = std::move(next);
    }
    LiteralSet down = lits;
    for (;;) {
      auto next = detail::sakama_F(rules, lits, cur.proven, cur.defaults, down);
      if (next == down) break;
      down = std::move(next);
    }
    SakamaPair next{detail::set_union(cur.proven, up), detail::set_union(cur.defaults, down)};
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

/// Keeps l <- B+ for each rule whose weakly negated literals all evaluate
/// to 1 under the interpretation.
inline Program si_reduct(const Program& program, const ParaInterp& interp) {
  const auto rules = conjunctive_rules(program);
  Program out;
  out.config = program.config;
  out.declared_atoms = program.declared_atoms;
  for (const auto& a : program.atoms()) out.declared_atoms.insert(a);
  for (const auto& r : rules) {
    bool keep = true;
    for (const auto& l : r.body.negative)
      if (!program.config.weak_neg(interp.value(l)).is_one()) keep = false;
    if (!keep) continue;
    std::vector<Formula> conj;
    for (const auto& l : r.body.positive) conj.push_back(Formula::literal(l));
    out.rules.push_back(Rule{r.head, Formula::fold(program.config.conjunction(), std::move(conj)), std::nullopt});
  }
  return out;
}

namespace detail {

/// Least literal set closed under rules whose positive body it contains;
/// weakly negated parts are checked against `guess`.
inline LiteralSet closure(const std::vector<ConjunctiveRule>& rules, const LiteralSet* guess) {
  LiteralSet s;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : rules) {
      if (s.contains(r.head)) continue;
      if (guess && !disjoint(r.body.negative, *guess)) continue;
      if (subset(r.body.positive, s)) {
        s.insert(r.head);
        changed = true;
      }
    }
  }
  return s;
}

inline std::vector<LiteralSet> all_subsets(const std::vector<Literal>& lits) {
  std::vector<LiteralSet> out;
  if (lits.size() >= 8 * sizeof(std::size_t)) throw OracleError("too many literals to enumerate");
  for (std::size_t mask = 0; mask < (std::size_t{1} << lits.size()); ++mask) {
    LiteralSet s;
    for (std::size_t i = 0; i < lits.size(); ++i)
      if (mask & (std::size_t{1} << i)) s.insert(lits[i]);
    out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<ParaInterp> to_interps(std::vector<LiteralSet> sets, const UniversePtr& u) {
  std::vector<ParaInterp> out;
  for (const auto& s : sets) out.push_back(zeta_inv(s, u));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Literal sets S with S = least model of the reduct w.r.t. S, paraconsistent
/// ones included; returned as two-valued interpretations.
inline std::vector<ParaInterp> si_stable_models(const Program& program) {
  const auto rules = conjunctive_rules(program);
  auto u = make_universe(program.atoms());
  std::vector<LiteralSet> found;
  for (const auto& s : detail::all_subsets(u->literals())) {
    if (detail::closure(rules, &s) == s) found.push_back(s);
  }
  return detail::to_interps(std::move(found), u);
}

/// Consistent literal sets S equal to Cn of the classic reduct, where Cn
/// collapses to all literals once it contains a complementary pair.
inline std::vector<ParaInterp> gl_answer_sets(const Program& program) {
  const auto rules = conjunctive_rules(program);
  auto u = make_universe(program.atoms());
  const auto lits = all_literals(*u);
  std::vector<LiteralSet> found;
  std::vector<Literal> atoms_pos;
  for (const auto& a : u->atoms()) atoms_pos.push_back(Literal::pos(a));
  // Each atom is unknown, true, or false in a consistent set.
  std::size_t count = 1;
  for (std::size_t i = 0; i < u->size(); ++i) count *= 3;
  for (std::size_t code = 0; code < count; ++code) {
    LiteralSet s;
    std::size_t c = code;
    for (const auto& a : u->atoms()) {
      if (c % 3 == 1) s.insert(Literal::pos(a));
      if (c % 3 == 2) s.insert(Literal::neg(a));
      c /= 3;
    }
    std::vector<ConjunctiveRule> reduct;
    for (const auto& r : rules)
      if (detail::disjoint(r.body.negative, s)) reduct.push_back({r.head, {r.body.positive, {}}});
    LiteralSet cn = detail::closure(reduct, nullptr);
    for (const auto& l : cn)
      if (cn.contains(l.complement())) {
        cn = lits;
        break;
      }
    if (cn == s) found.push_back(s);
  }
  return detail::to_interps(std::move(found), u);
}

// ---- annotated programs -----------------------------------------------------

/// Partial map from literals to degrees; the key set is the domain.
struct SaadInterp {
  std::map<Literal, TruthValue> values;

  bool defined(const Literal& l) const { return values.contains(l); }
  friend bool operator==(const SaadInterp&, const SaadInterp&) = default;
  friend bool operator<(const SaadInterp& a, const SaadInterp& b) { return a.values < b.values; }
};

namespace detail {

inline bool satisfies_positive(const SaadInterp& g, const AnnotatedLiteral& a) {
  auto it = g.values.find(a.lit);
  return it != g.values.end() && it->second >= a.bound;
}

inline bool satisfies_negative(const SaadInterp& g, const AnnotatedLiteral& a) {
  auto it = g.values.find(a.lit);
  return it == g.values.end() || it->second < a.bound;
}

}  // namespace detail

/// For each literal, the largest head bound among rules whose body G
/// satisfies; undefined when no rule applies.
inline SaadInterp saad_operator(const SaadProgram& program, const SaadInterp& g) {
  SaadInterp out;
  for (const auto& r : program.rules) {
    bool fires = std::all_of(r.positive.begin(), r.positive.end(),
                             [&](const auto& a) { return detail::satisfies_positive(g, a); }) &&
                 std::all_of(r.negative.begin(), r.negative.end(),
                             [&](const auto& a) { return detail::satisfies_negative(g, a); });
    if (!fires) continue;
    auto [it, inserted] = out.values.emplace(r.head.lit, r.head.bound);
    if (!inserted && r.head.bound > it->second) it->second = r.head.bound;
  }
  return out;
}

/// Rules whose negative literals G satisfies, with those literals removed.
inline SaadProgram saad_reduct(const SaadProgram& program, const SaadInterp& g) {
  SaadProgram out;
  out.declared_atoms = program.declared_atoms;
  for (const auto& r : program.rules) {
    if (!std::all_of(r.negative.begin(), r.negative.end(),
                     [&](const auto& a) { return detail::satisfies_negative(g, a); }))
      continue;
    out.rules.push_back({r.head, r.positive, {}});
  }
  return out;
}

/// Complementary literals both defined with G(-l) != 1 - G(l).
inline bool saad_inconsistent(const SaadInterp& g) {
  for (const auto& [lit, v] : g.values) {
    if (lit.negated) continue;
    auto it = g.values.find(lit.complement());
    if (it != g.values.end() && it->second != TruthValue::unchecked(TruthValue::Rational(1) - v.rational()))
      return true;
  }
  return false;
}

struct SaadModel {
  SaadInterp interp;
  bool inconsistent = false;

  friend bool operator==(const SaadModel&, const SaadModel&) = default;
  friend bool operator<(const SaadModel& a, const SaadModel& b) { return a.interp < b.interp; }
};

struct SaadOptions {
  /// Report inconsistent models as every literal mapped to 1.
  bool replace_inconsistent = false;
};

/// G with G = least fixpoint of the operator of the reduct w.r.t. G.
/// Candidates range over the head literals, each undefined or one of its
/// own head bounds, since the operator never produces anything else.
inline std::vector<SaadModel> saad_stable_models(const SaadProgram& program, const SaadOptions& options = {}) {
  std::map<Literal, std::set<TruthValue>> heads;
  for (const auto& r : program.rules) heads[r.head.lit].insert(r.head.bound);
  std::vector<std::pair<Literal, std::vector<TruthValue>>> choices;
  std::size_t count = 1;
  for (const auto& [lit, bounds] : heads) {
    choices.push_back({lit, {bounds.begin(), bounds.end()}});
    if (count > (std::size_t{1} << 40) / (bounds.size() + 1)) throw OracleError("annotated program too large");
    count *= bounds.size() + 1;
  }
  std::vector<SaadModel> out;
  for (std::size_t code = 0; code < count; ++code) {
    SaadInterp g;
    std::size_t c = code;
    for (const auto& [lit, values] : choices) {
      std::size_t pick = c % (values.size() + 1);
      c /= values.size() + 1;
      if (pick > 0) g.values.emplace(lit, values[pick - 1]);
    }
    SaadProgram reduct = saad_reduct(program, g);
    SaadInterp least;
    for (;;) {
      auto next = saad_operator(reduct, least);
      if (next == least) break;
      least = std::move(next);
    }
    if (least == g) out.push_back({g, saad_inconsistent(g)});
  }
  if (options.replace_inconsistent) {
    for (auto& m : out) {
      if (!m.inconsistent) continue;
      m.interp.values.clear();
      for (const auto& a : program.atoms()) {
        m.interp.values[Literal::pos(a)] = TruthValue::one();
        m.interp.values[Literal::neg(a)] = TruthValue::one();
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- constraint programs ----------------------------------------------------

/// Replaces every weakly negated atom by the constant weak_neg(K(p)).
inline Formula cornejo_body_reduct(const Formula& body, const NonParaInterp& k, const LatticeConfig& config) {
  switch (body.kind) {
    case Formula::Kind::constant:
      return body;
    case Formula::Kind::literal:
      if (body.lit.negated) throw OracleError("strong negation in a constraint program");
      return body;
    case Formula::Kind::weak_neg: {
      const auto& ch = body.children.front();
      if (ch.kind != Formula::Kind::literal) throw OracleError("weak negation over a non-literal");
      if (ch.lit.negated) throw OracleError("strong negation in a constraint program");
      return Formula::constant(config.weak_neg(k.at(ch.lit.atom)));
    }
    case Formula::Kind::connective: {
      Formula out = body;
      for (auto& c : out.children) c = cornejo_body_reduct(c, k, config);
      return out;
    }
  }
  throw OracleError("corrupt formula");
}

namespace detail {

inline TruthValue eval_classical(const NonParaInterp& k, const Formula& f, const LatticeConfig& config) {
  switch (f.kind) {
    case Formula::Kind::constant:
      return f.value;
    case Formula::Kind::literal:
      return k.at(f.lit.atom);
    case Formula::Kind::weak_neg:
      return config.weak_neg(eval_classical(k, f.children.front(), config));
    case Formula::Kind::connective: {
      std::vector<TruthValue> args;
      for (const auto& c : f.children) args.push_back(eval_classical(k, c, config));
      return config.apply_connective(f.connective, args);
    }
  }
  throw OracleError("corrupt formula");
}

}  // namespace detail

inline TruthValue eval_classical(const NonParaInterp& k, const Formula& f, const LatticeConfig& config) {
  return detail::eval_classical(k, f, config);
}

/// K with K = least model of the body reduct w.r.t. K (constraints left
/// out) and eval(K, B) <= c for each constraint c <- B.
inline std::vector<NonParaInterp> cornejo_stable_models(const CornejoProgram& program, std::vector<TruthValue> grid,
                                                        std::size_t max_candidates = 10'000'000) {
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  if (grid.empty()) throw OracleError("empty grid");
  auto u = make_universe(program.atoms());
  std::size_t count = 1;
  for (std::size_t i = 0; i < u->size(); ++i) {
    if (count > max_candidates / grid.size()) throw OracleError("constraint program search space too large");
    count *= grid.size();
  }
  const auto& config = program.config;
  std::vector<NonParaInterp> out;
  for (std::size_t code = 0; code < count; ++code) {
    NonParaInterp k(u);
    std::size_t c = code;
    for (std::size_t a = 0; a < u->size(); ++a) {
      k[a] = grid[c % grid.size()];
      c /= grid.size();
    }
    std::vector<std::pair<std::size_t, Formula>> reduct;
    for (const auto& r : program.rules) {
      Formula body = cornejo_body_reduct(r.body, k, config);
      if (r.weight) {
        auto impl = config.implicator(r.weight->implicator);
        if (!impl) throw OracleError("unknown implicator '" + r.weight->implicator + "'");
        body = Formula::apply(impl->adjoint_conjunction, {Formula::constant(r.weight->theta), std::move(body)});
      }
      reduct.emplace_back(u->index(r.head.atom), std::move(body));
    }
    NonParaInterp least(u);
    for (std::size_t step = 0;; ++step) {
      if (step > 100000) throw OracleError("least model iteration does not stabilize");
      NonParaInterp next(u);
      for (const auto& [head, body] : reduct) {
        auto v = detail::eval_classical(least, body, config);
        if (v > next[head]) next[head] = v;
      }
      if (next == least) break;
      least = std::move(next);
    }
    if (!(least == k)) continue;
    bool ok = true;
    for (const auto& con : program.constraints)
      if (!(detail::eval_classical(k, con.body, config) <= con.bound)) ok = false;
    if (ok) out.push_back(std::move(k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<NonParaInterp> cornejo_stable_models(const CornejoProgram& program) {
  return cornejo_stable_models(program, program.config.lattice().carrier());
}

}  // namespace eflp
