#pragma once

#include "eflp/lattice.hpp"

#include <compare>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace eflp {

/// An atom or its strong negation.
struct Literal {
  std::string atom;
  bool negated = false;

  static Literal pos(std::string a) { return Literal{std::move(a), false}; }
  static Literal neg(std::string a) { return Literal{std::move(a), true}; }

  Literal complement() const { return Literal{atom, !negated}; }
  std::string to_string() const { return negated ? "-" + atom : atom; }

  friend auto operator<=>(const Literal&, const Literal&) = default;
  friend bool operator==(const Literal&, const Literal&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Literal& l) { return os << l.to_string(); }

inline bool is_reserved_atom(const std::string& atom) { return !atom.empty() && atom.front() == '@'; }

/// Rule body tree. `weak_neg` may wrap any subformula internally; the
/// surface grammar only produces it over literals and threshold calls.
struct Formula {
  enum class Kind { constant, literal, weak_neg, connective };

  Kind kind = Kind::constant;
  TruthValue value;
  Literal lit;
  std::string connective;
  std::vector<Formula> children;

  static Formula constant(TruthValue v) {
    Formula f;
    f.kind = Kind::constant;
    f.value = std::move(v);
    return f;
  }
  static Formula literal(Literal l) {
    Formula f;
    f.kind = Kind::literal;
    f.lit = std::move(l);
    return f;
  }
  static Formula atom(std::string a) { return literal(Literal::pos(std::move(a))); }
  static Formula weak_neg(Formula child) {
    Formula f;
    f.kind = Kind::weak_neg;
    f.children.push_back(std::move(child));
    return f;
  }
  static Formula apply(std::string id, std::vector<Formula> args) {
    Formula f;
    f.kind = Kind::connective;
    f.connective = std::move(id);
    f.children = std::move(args);
    return f;
  }
  /// Left-nested binary application; a single operand is returned as is and
  /// an empty list yields the constant 1.
  static Formula fold(const std::string& id, std::vector<Formula> operands) {
    if (operands.empty()) return constant(TruthValue::one());
    Formula acc = std::move(operands.front());
    for (std::size_t i = 1; i < operands.size(); ++i) acc = apply(id, {std::move(acc), std::move(operands[i])});
    return acc;
  }

  bool has_weak_neg() const {
    if (kind == Kind::weak_neg) return true;
    for (const auto& c : children)
      if (c.has_weak_neg()) return true;
    return false;
  }

  bool has_strong_neg() const {
    if (kind == Kind::literal) return lit.negated;
    for (const auto& c : children)
      if (c.has_strong_neg()) return true;
    return false;
  }

  /// True when some weak negation encloses another one.
  bool has_nested_weak_neg(bool inside = false) const {
    if (kind == Kind::weak_neg && inside) return true;
    for (const auto& c : children)
      if (c.has_nested_weak_neg(inside || kind == Kind::weak_neg)) return true;
    return false;
  }

  void collect_atoms(std::set<std::string>& out) const {
    if (kind == Kind::literal) out.insert(lit.atom);
    for (const auto& c : children) c.collect_atoms(out);
  }

  void collect_literals(std::set<Literal>& out) const {
    if (kind == Kind::literal) out.insert(lit);
    for (const auto& c : children) c.collect_literals(out);
  }

  friend bool operator==(const Formula&, const Formula&) = default;
};

struct Weight {
  TruthValue theta;
  std::string implicator = "godel";

  friend bool operator==(const Weight&, const Weight&) = default;
};

/// head <- body, optionally weighted (p <-[theta] B).
struct Rule {
  Literal head;
  Formula body = Formula::constant(TruthValue::one());
  std::optional<Weight> weight;

  friend bool operator==(const Rule&, const Rule&) = default;
};

struct Program {
  std::vector<Rule> rules;
  std::set<std::string> declared_atoms;
  LatticeConfig config;

  /// Mentioned atoms plus declared ones, sorted.
  std::vector<std::string> atoms() const {
    std::set<std::string> all = declared_atoms;
    for (const auto& r : rules) {
      all.insert(r.head.atom);
      r.body.collect_atoms(all);
    }
    return {all.begin(), all.end()};
  }

  bool has_weak_neg() const {
    for (const auto& r : rules)
      if (r.body.has_weak_neg()) return true;
    return false;
  }

  bool has_strong_neg() const {
    for (const auto& r : rules)
      if (r.head.negated || r.body.has_strong_neg()) return true;
    return false;
  }

  friend bool operator==(const Program&, const Program&) = default;
};

struct AnnotatedLiteral {
  Literal lit;
  TruthValue bound;

  friend bool operator==(const AnnotatedLiteral&, const AnnotatedLiteral&) = default;
};

/// l0:c0 <- l1:c1, ..., not lj:cj, ...
struct SaadRule {
  AnnotatedLiteral head;
  std::vector<AnnotatedLiteral> positive;
  std::vector<AnnotatedLiteral> negative;

  friend bool operator==(const SaadRule&, const SaadRule&) = default;
};

struct SaadProgram {
  std::vector<SaadRule> rules;
  std::set<std::string> declared_atoms;

  std::vector<std::string> atoms() const {
    std::set<std::string> all = declared_atoms;
    for (const auto& r : rules) {
      all.insert(r.head.lit.atom);
      for (const auto& a : r.positive) all.insert(a.lit.atom);
      for (const auto& a : r.negative) all.insert(a.lit.atom);
    }
    return {all.begin(), all.end()};
  }

  friend bool operator==(const SaadProgram&, const SaadProgram&) = default;
};

/// c <- B: the body may be at most c.
struct CornejoConstraint {
  TruthValue bound;
  Formula body;

  friend bool operator==(const CornejoConstraint&, const CornejoConstraint&) = default;
};

struct CornejoProgram {
  std::vector<Rule> rules;
  std::vector<CornejoConstraint> constraints;
  std::set<std::string> declared_atoms;
  LatticeConfig config;

  std::vector<std::string> atoms() const {
    std::set<std::string> all = declared_atoms;
    for (const auto& r : rules) {
      all.insert(r.head.atom);
      r.body.collect_atoms(all);
    }
    for (const auto& c : constraints) c.body.collect_atoms(all);
    return {all.begin(), all.end()};
  }

  friend bool operator==(const CornejoProgram&, const CornejoProgram&) = default;
};

/// Replaces each weighted rule p <-[theta] B by p <- theta & B, where & is
/// the conjunction residuated with the rule's implicator.
inline Program desugar_weights(const Program& program) {
  Program out = program;
  for (auto& rule : out.rules) {
    if (!rule.weight) continue;
    auto impl = program.config.implicator(rule.weight->implicator);
    if (!impl) throw ConfigError("implicator '" + rule.weight->implicator + "' has no adjoint conjunction");
    rule.body = Formula::apply(impl->adjoint_conjunction,
                               {Formula::constant(rule.weight->theta), std::move(rule.body)});
    rule.weight.reset();
  }
  return out;
}

namespace detail {

inline void validate_formula(const Formula& f, const LatticeConfig& config, bool allow_reserved,
                             std::vector<std::string>& out, const std::string& where) {
  switch (f.kind) {
    case Formula::Kind::constant:
      if (!config.lattice().contains(f.value))
        out.push_back(where + ": constant " + f.value.to_string() + " is not in lattice " + config.lattice().name());
      break;
    case Formula::Kind::literal:
      if (f.lit.atom.empty()) out.push_back(where + ": empty atom name");
      if (!allow_reserved && is_reserved_atom(f.lit.atom))
        out.push_back(where + ": atom '" + f.lit.atom + "' uses the reserved '@' prefix");
      break;
    case Formula::Kind::weak_neg:
      if (f.children.size() != 1) out.push_back(where + ": weak negation needs exactly one operand");
      break;
    case Formula::Kind::connective: {
      std::optional<Connective> c;
      try {
        c = config.connective(f.connective);
      } catch (const ConfigError&) {
      }
      if (!c)
        out.push_back(where + ": unknown connective '" + f.connective + "' for lattice " + config.lattice().name());
      else if (c->arity != f.children.size())
        out.push_back(where + ": connective '" + f.connective + "' expects " + std::to_string(c->arity) +
                      " arguments, got " + std::to_string(f.children.size()));
      break;
    }
  }
  for (const auto& c : f.children) validate_formula(c, config, allow_reserved, out, where);
}

}  // namespace detail

/// Side conditions a program must meet before evaluation. Empty when valid.
inline std::vector<std::string> validate(const Program& program, const LatticeConfig& config,
                                         bool allow_reserved = false) {
  std::vector<std::string> out;
  for (const auto& a : program.declared_atoms)
    if (!allow_reserved && is_reserved_atom(a)) out.push_back("declared atom '" + a + "' uses the reserved '@' prefix");
  for (std::size_t i = 0; i < program.rules.size(); ++i) {
    const auto& rule = program.rules[i];
    std::string where = "rule " + std::to_string(i + 1);
    if (rule.head.atom.empty()) out.push_back(where + ": empty head atom");
    if (!allow_reserved && is_reserved_atom(rule.head.atom))
      out.push_back(where + ": atom '" + rule.head.atom + "' uses the reserved '@' prefix");
    if (rule.weight) {
      if (!config.lattice().contains(rule.weight->theta))
        out.push_back(where + ": weight " + rule.weight->theta.to_string() + " is not in lattice " +
                      config.lattice().name());
      if (!config.implicator(rule.weight->implicator))
        out.push_back(where + ": unknown implicator '" + rule.weight->implicator + "'");
    }
    detail::validate_formula(rule.body, config, allow_reserved, out, where);
  }
  return out;
}

inline std::vector<std::string> validate(const Program& program, bool allow_reserved = false) {
  return validate(program, program.config, allow_reserved);
}

// ---- printing ---------------------------------------------------------------

inline std::string to_text(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::constant:
      return f.value.to_string();
    case Formula::Kind::literal:
      return f.lit.to_string();
    case Formula::Kind::weak_neg: {
      const auto& c = f.children.front();
      bool bare = c.kind == Formula::Kind::literal || c.kind == Formula::Kind::constant ||
                  c.kind == Formula::Kind::connective;
      return "not " + (bare ? to_text(c) : "(" + to_text(c) + ")");
    }
    case Formula::Kind::connective: {
      std::string s = f.connective + "(";
      for (std::size_t i = 0; i < f.children.size(); ++i) {
        if (i) s += ", ";
        s += to_text(f.children[i]);
      }
      return s + ")";
    }
  }
  return "?";
}

inline std::string to_text(const Rule& r) {
  std::string s = r.head.to_string();
  bool fact = !r.weight && r.body.kind == Formula::Kind::constant && r.body.value.is_one();
  if (fact) return s + ".";
  s += " <-";
  if (r.weight) s += "[" + r.weight->theta.to_string() + ", " + r.weight->implicator + "]";
  return s + " " + to_text(r.body) + ".";
}

inline std::string config_directives(const LatticeConfig& config) {
  std::ostringstream os;
  os << "#lattice " << config.lattice().name() << ".\n";
  os << "#conj " << config.conjunction() << ".\n";
  os << "#sneg " << negator_name(config.strong_negator()) << ".\n";
  os << "#wneg " << negator_name(config.weak_negator()) << ".\n";
  return os.str();
}

inline std::string atoms_directive(const std::set<std::string>& atoms) {
  if (atoms.empty()) return "";
  std::string s = "#atoms ";
  bool first = true;
  for (const auto& a : atoms) {
    if (!first) s += ", ";
    s += a;
    first = false;
  }
  return s + ".\n";
}

/// Core-dialect text that parses back to an equal program.
inline std::string to_text(const Program& p) {
  std::string s = config_directives(p.config) + atoms_directive(p.declared_atoms);
  for (const auto& r : p.rules) s += to_text(r) + "\n";
  return s;
}

inline std::string to_text(const AnnotatedLiteral& a) { return a.lit.to_string() + ":" + a.bound.to_string(); }

inline std::string to_text(const SaadRule& r) {
  std::string s = to_text(r.head);
  if (r.positive.empty() && r.negative.empty()) return s + ".";
  s += " <- ";
  bool first = true;
  for (const auto& a : r.positive) {
    if (!first) s += ", ";
    s += to_text(a);
    first = false;
  }
  for (const auto& a : r.negative) {
    if (!first) s += ", ";
    s += "not " + to_text(a);
    first = false;
  }
  return s + ".";
}

inline std::string to_text(const SaadProgram& p) {
  std::string s = atoms_directive(p.declared_atoms);
  for (const auto& r : p.rules) s += to_text(r) + "\n";
  return s;
}

inline std::string to_text(const CornejoProgram& p) {
  std::string s = config_directives(p.config) + atoms_directive(p.declared_atoms);
  for (const auto& r : p.rules) s += to_text(r) + "\n";
  for (const auto& c : p.constraints) s += c.bound.to_string() + " <- " + to_text(c.body) + ".\n";
  return s;
}

}  // namespace eflp
