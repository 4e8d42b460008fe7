#pragma once

#include "eflp/interpretation.hpp"

#include <array>
#include <string>
#include <vector>

namespace eflp {

/// A weight-free, validated program with atoms and connectives resolved to
/// indices and rules grouped by head.
class CompiledProgram {
 public:
  struct Node {
    Formula::Kind kind = Formula::Kind::constant;
    TruthValue value;
    std::size_t atom = 0;
    bool negated = false;
    std::size_t connective = 0;
    std::vector<Node> children;
  };

  /// Slot (atom, falsity?) read by some weakly negated subformula.
  struct LiteralSlot {
    std::size_t atom;
    bool negated;
    friend auto operator<=>(const LiteralSlot&, const LiteralSlot&) = default;
  };

  explicit CompiledProgram(const Program& program, bool allow_reserved = false)
      : CompiledProgram(program, make_universe(program.atoms()), allow_reserved) {}

  /// Compiles over a given universe, which must contain every program atom.
  CompiledProgram(const Program& program, UniversePtr universe, bool allow_reserved = false)
      : source_(desugar_weights(program)), config_(program.config), universe_(std::move(universe)) {
    auto diagnostics = validate(source_, config_, allow_reserved);
    if (!diagnostics.empty()) {
      std::string msg = "invalid program:";
      for (const auto& d : diagnostics) msg += "\n  " + d;
      throw ConfigError(msg);
    }
    pos_rules_.resize(universe_->size());
    neg_rules_.resize(universe_->size());
    for (const auto& rule : source_.rules) {
      std::size_t head = universe_->index(rule.head.atom);
      (rule.head.negated ? neg_rules_ : pos_rules_)[head].push_back(bodies_.size());
      bodies_.push_back(compile(rule.body, false));
    }
  }

  const Program& source() const { return source_; }
  const LatticeConfig& config() const { return config_; }
  const UniversePtr& universe() const { return universe_; }
  const std::vector<Node>& bodies() const { return bodies_; }
  const std::vector<std::size_t>& rules_for(std::size_t atom, bool negated) const {
    return negated ? neg_rules_[atom] : pos_rules_[atom];
  }

  bool nested_weak_neg() const { return nested_weak_neg_; }
  const std::set<LiteralSlot>& weak_neg_slots() const { return weak_neg_slots_; }
  const std::set<TruthValue>& constants() const { return constants_; }

  /// Pair evaluation of a compiled body.
  TruthValue eval(const Node& n, const ParaInterp& lower, const ParaInterp& upper) const {
    switch (n.kind) {
      case Formula::Kind::constant:
        return n.value;
      case Formula::Kind::literal:
        return n.negated ? lower[n.atom].f : lower[n.atom].t;
      case Formula::Kind::weak_neg:
        return config_.weak_neg(eval(n.children.front(), upper, lower));
      case Formula::Kind::connective: {
        const Connective& c = connectives_[n.connective];
        if (n.children.size() <= 2) {
          std::array<TruthValue, 2> args;
          for (std::size_t i = 0; i < n.children.size(); ++i) args[i] = eval(n.children[i], lower, upper);
          return c.apply(std::span<const TruthValue>(args.data(), n.children.size()));
        }
        std::vector<TruthValue> args;
        args.reserve(n.children.size());
        for (const auto& ch : n.children) args.push_back(eval(ch, lower, upper));
        return c.apply(args);
      }
    }
    throw ConfigError("corrupt compiled formula");
  }

  void require_universe(const ParaInterp& interp) const {
    if (!(interp.universe() == universe_ || *interp.universe() == *universe_))
      throw ConfigError("interpretation is not over the program's universe");
  }

 private:
  Node compile(const Formula& f, bool under_neg) {
    Node n;
    n.kind = f.kind;
    switch (f.kind) {
      case Formula::Kind::constant:
        n.value = f.value;
        constants_.insert(f.value);
        break;
      case Formula::Kind::literal:
        n.atom = universe_->index(f.lit.atom);
        n.negated = f.lit.negated;
        if (under_neg) weak_neg_slots_.insert({n.atom, n.negated});
        break;
      case Formula::Kind::weak_neg:
        if (under_neg) nested_weak_neg_ = true;
        break;
      case Formula::Kind::connective: {
        auto c = config_.connective(f.connective);
        if (!c) throw ConfigError("unknown connective '" + f.connective + "'");
        auto it = connective_index_.find(c->id);
        if (it == connective_index_.end()) {
          it = connective_index_.emplace(c->id, connectives_.size()).first;
          connectives_.push_back(*c);
        }
        n.connective = it->second;
        if (c->op == Connective::Op::threshold) constants_.insert(c->param);
        break;
      }
    }
    for (const auto& ch : f.children) n.children.push_back(compile(ch, under_neg || f.kind == Formula::Kind::weak_neg));
    return n;
  }

  Program source_;
  LatticeConfig config_;
  UniversePtr universe_;
  std::vector<Node> bodies_;
  std::vector<std::vector<std::size_t>> pos_rules_;
  std::vector<std::vector<std::size_t>> neg_rules_;
  std::vector<Connective> connectives_;
  std::map<std::string, std::size_t> connective_index_;
  std::set<LiteralSlot> weak_neg_slots_;
  std::set<TruthValue> constants_;
  bool nested_weak_neg_ = false;
};

/// First component of the approximator: per atom, the join of the rule
/// bodies for p and for -p, evaluated against the pair (lower, upper).
inline ParaInterp approximator_first(const CompiledProgram& program, const ParaInterp& lower,
                                     const ParaInterp& upper) {
  program.require_universe(lower);
  program.require_universe(upper);
  ParaInterp out(program.universe());
  const auto& bodies = program.bodies();
  for (std::size_t a = 0; a < out.size(); ++a) {
    for (std::size_t r : program.rules_for(a, false)) {
      auto v = program.eval(bodies[r], lower, upper);
      if (v > out[a].t) out[a].t = std::move(v);
    }
    for (std::size_t r : program.rules_for(a, true)) {
      auto v = program.eval(bodies[r], lower, upper);
      if (v > out[a].f) out[a].f = std::move(v);
    }
  }
  return out;
}

/// Immediate consequence operator.
inline ParaInterp phi(const CompiledProgram& program, const ParaInterp& interp) {
  return approximator_first(program, interp, interp);
}

inline ParaInterp phi(const Program& program, const ParaInterp& interp) {
  return phi(CompiledProgram(program, interp.universe(), true), interp);
}

/// The symmetric approximator: (first(L,U), first(U,L)).
inline InterpPair approximator(const CompiledProgram& program, const InterpPair& pair) {
  return {approximator_first(program, pair.lower, pair.upper), approximator_first(program, pair.upper, pair.lower)};
}

inline InterpPair approximator(const Program& program, const InterpPair& pair) {
  return approximator(CompiledProgram(program, pair.lower.universe(), true), pair);
}

/// Each rule body is at most the value of its head.
inline bool is_model(const CompiledProgram& program, const ParaInterp& interp) {
  program.require_universe(interp);
  const auto& bodies = program.bodies();
  for (std::size_t a = 0; a < interp.size(); ++a) {
    for (std::size_t r : program.rules_for(a, false))
      if (!(program.eval(bodies[r], interp, interp) <= interp[a].t)) return false;
    for (std::size_t r : program.rules_for(a, true))
      if (!(program.eval(bodies[r], interp, interp) <= interp[a].f)) return false;
  }
  return true;
}

inline bool is_model(const Program& program, const ParaInterp& interp) {
  return is_model(CompiledProgram(program, interp.universe(), true), interp);
}

inline bool satisfies_rule(const Rule& rule, const ParaInterp& interp, const LatticeConfig& config) {
  return eval(interp, rule.body, config) <= interp.value(rule.head);
}

/// theta <= (value of head <- value of body), read with the rule's implicator.
inline bool satisfies_weighted_rule(const Rule& rule, const ParaInterp& interp, const LatticeConfig& config) {
  if (!rule.weight) return satisfies_rule(rule, interp, config);
  auto impl = config.implicator(rule.weight->implicator);
  if (!impl) throw ConfigError("unknown implicator '" + rule.weight->implicator + "'");
  return rule.weight->theta <= impl->fn(interp.value(rule.head), eval(interp, rule.body, config));
}

// ---- approximator for programs without strong negation ----------------------

namespace detail {

inline TruthValue eval_normal(const NonParaInterp& k, const NonParaInterp& l, const Formula& f,
                              const LatticeConfig& config) {
  switch (f.kind) {
    case Formula::Kind::constant:
      return f.value;
    case Formula::Kind::literal:
      if (f.lit.negated) throw ConfigError("strong negation in a normal program");
      return k.at(f.lit.atom);
    case Formula::Kind::weak_neg:
      return config.weak_neg(eval_normal(l, k, f.children.front(), config));
    case Formula::Kind::connective: {
      std::vector<TruthValue> args;
      for (const auto& c : f.children) args.push_back(eval_normal(k, l, c, config));
      return config.apply_connective(f.connective, args);
    }
  }
  throw ConfigError("corrupt formula");
}

}  // namespace detail

/// Approximator of a program without strong negation over classical
/// interpretations: p gets the join of its rule bodies, with atoms read
/// from K and weakly negated atoms from L.
inline NonParaInterp normal_approximator(const Program& program, const NonParaInterp& k, const NonParaInterp& l) {
  Program p = desugar_weights(program);
  if (p.has_strong_neg()) throw ConfigError("normal approximator needs a program without strong negation");
  NonParaInterp out(k.universe());
  for (const auto& rule : p.rules) {
    auto v = detail::eval_normal(k, l, rule.body, p.config);
    auto& slot = out.at(rule.head.atom);
    if (v > slot) slot = v;
  }
  return out;
}

/// (K, all falsity degrees 0).
inline ParaInterp lift_normal(const NonParaInterp& k) {
  ParaInterp out(k.universe());
  for (std::size_t i = 0; i < k.size(); ++i) out[i] = {k[i], TruthValue::zero()};
  return out;
}

}  // namespace eflp
