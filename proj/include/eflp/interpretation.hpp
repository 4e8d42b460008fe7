#pragma once

#include "eflp/program.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace eflp {

/// Fixed, sorted atom set shared by all interpretations over one program.
class Universe {
 public:
  Universe() = default;
  explicit Universe(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
    std::sort(atoms_.begin(), atoms_.end());
    atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
    for (std::size_t i = 0; i < atoms_.size(); ++i) index_.emplace(atoms_[i], i);
  }

  std::size_t size() const { return atoms_.size(); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::string& atom(std::size_t i) const { return atoms_[i]; }

  std::optional<std::size_t> find(const std::string& atom) const {
    auto it = index_.find(atom);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index(const std::string& atom) const {
    auto i = find(atom);
    if (!i) throw ConfigError("atom '" + atom + "' is not in the universe");
    return *i;
  }

  /// Lit(universe), ordered with p before -p.
  std::vector<Literal> literals() const {
    std::vector<Literal> out;
    for (const auto& a : atoms_) {
      out.push_back(Literal::pos(a));
      out.push_back(Literal::neg(a));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const Universe& a, const Universe& b) { return a.atoms_ == b.atoms_; }

 private:
  std::vector<std::string> atoms_;
  std::map<std::string, std::size_t> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

inline UniversePtr make_universe(std::vector<std::string> atoms) {
  return std::make_shared<const Universe>(std::move(atoms));
}

/// Truth degree and falsity degree of one atom.
struct TruthPair {
  TruthValue t;
  TruthValue f;

  friend bool operator==(const TruthPair&, const TruthPair&) = default;
  friend auto operator<=>(const TruthPair&, const TruthPair&) = default;
};

/// Total map from a universe to truth pairs.
class ParaInterp {
 public:
  ParaInterp() : universe_(make_universe({})) {}
  explicit ParaInterp(UniversePtr u) : universe_(std::move(u)), values_(universe_->size()) {}
  ParaInterp(UniversePtr u, std::vector<TruthPair> values) : universe_(std::move(u)), values_(std::move(values)) {
    if (values_.size() != universe_->size()) throw ConfigError("interpretation size does not match its universe");
  }

  static ParaInterp bottom(UniversePtr u) { return ParaInterp(std::move(u)); }
  static ParaInterp top(UniversePtr u) {
    ParaInterp i(std::move(u));
    for (auto& v : i.values_) v = {TruthValue::one(), TruthValue::one()};
    return i;
  }
  /// Every atom mapped to the same pair.
  static ParaInterp constant(UniversePtr u, const TruthPair& p) {
    ParaInterp i(std::move(u));
    for (auto& v : i.values_) v = p;
    return i;
  }

  const UniversePtr& universe() const { return universe_; }
  std::size_t size() const { return values_.size(); }

  const TruthPair& operator[](std::size_t i) const { return values_[i]; }
  TruthPair& operator[](std::size_t i) { return values_[i]; }
  const TruthPair& at(const std::string& atom) const { return values_[universe_->index(atom)]; }
  TruthPair& at(const std::string& atom) { return values_[universe_->index(atom)]; }

  /// Value of a literal: truth degree for p, falsity degree for -p.
  const TruthValue& value(const Literal& l) const {
    const auto& p = at(l.atom);
    return l.negated ? p.f : p.t;
  }

  const std::vector<TruthPair>& values() const { return values_; }

  friend bool operator==(const ParaInterp& a, const ParaInterp& b) {
    return a.values_ == b.values_ && (a.universe_ == b.universe_ || *a.universe_ == *b.universe_);
  }
  /// Canonical order for sorted output.
  friend bool operator<(const ParaInterp& a, const ParaInterp& b) {
    if (a.universe_->atoms() != b.universe_->atoms()) return a.universe_->atoms() < b.universe_->atoms();
    return a.values_ < b.values_;
  }

 private:
  UniversePtr universe_;
  std::vector<TruthPair> values_;
};

/// An element (L, U) of the precision tetralattice. L <=_t U is not required.
struct InterpPair {
  ParaInterp lower;
  ParaInterp upper;

  bool exact() const { return lower == upper; }
  friend bool operator==(const InterpPair&, const InterpPair&) = default;
};

/// Classical fuzzy interpretation: one degree per atom.
class NonParaInterp {
 public:
  NonParaInterp() : universe_(make_universe({})) {}
  explicit NonParaInterp(UniversePtr u) : universe_(std::move(u)), values_(universe_->size()) {}
  NonParaInterp(UniversePtr u, std::vector<TruthValue> values) : universe_(std::move(u)), values_(std::move(values)) {
    if (values_.size() != universe_->size()) throw ConfigError("interpretation size does not match its universe");
  }

  const UniversePtr& universe() const { return universe_; }
  std::size_t size() const { return values_.size(); }
  const TruthValue& operator[](std::size_t i) const { return values_[i]; }
  TruthValue& operator[](std::size_t i) { return values_[i]; }
  const TruthValue& at(const std::string& atom) const { return values_[universe_->index(atom)]; }
  TruthValue& at(const std::string& atom) { return values_[universe_->index(atom)]; }
  const std::vector<TruthValue>& values() const { return values_; }

  friend bool operator==(const NonParaInterp& a, const NonParaInterp& b) {
    return a.values_ == b.values_ && (a.universe_ == b.universe_ || *a.universe_ == *b.universe_);
  }
  friend bool operator<(const NonParaInterp& a, const NonParaInterp& b) {
    if (a.universe_->atoms() != b.universe_->atoms()) return a.universe_->atoms() < b.universe_->atoms();
    return a.values_ < b.values_;
  }

 private:
  UniversePtr universe_;
  std::vector<TruthValue> values_;
};

using LiteralSet = std::set<Literal>;

/// Crisp pair of proven literals and default (assumed false) literals.
struct SakamaPair {
  LiteralSet proven;
  LiteralSet defaults;

  friend bool operator==(const SakamaPair&, const SakamaPair&) = default;
};

// ---- evaluation -------------------------------------------------------------

inline TruthValue eval_pair(const ParaInterp& lower, const ParaInterp& upper, const Formula& phi,
                            const LatticeConfig& config);

/// Value of a formula under one interpretation.
inline TruthValue eval(const ParaInterp& interp, const Formula& phi, const LatticeConfig& config) {
  return eval_pair(interp, interp, phi, config);
}

/// Pair evaluation: literals read the lower bound, weak negation flips to
/// the upper bound. Nested weak negation flips back.
inline TruthValue eval_pair(const ParaInterp& lower, const ParaInterp& upper, const Formula& phi,
                            const LatticeConfig& config) {
  switch (phi.kind) {
    case Formula::Kind::constant:
      return phi.value;
    case Formula::Kind::literal:
      return lower.value(phi.lit);
    case Formula::Kind::weak_neg:
      return config.weak_neg(eval_pair(upper, lower, phi.children.front(), config));
    case Formula::Kind::connective: {
      auto c = config.connective(phi.connective);
      if (!c) throw ConfigError("unknown connective '" + phi.connective + "'");
      std::vector<TruthValue> args;
      args.reserve(phi.children.size());
      for (const auto& ch : phi.children) args.push_back(eval_pair(lower, upper, ch, config));
      return c->apply(args);
    }
  }
  throw ConfigError("corrupt formula");
}

struct ConsistencyReport {
  bool consistent = true;
  std::vector<std::string> violating_atoms;
};

/// Per atom, truth <= strong_neg(falsity).
inline ConsistencyReport consistency(const ParaInterp& interp, const LatticeConfig& config) {
  ConsistencyReport r;
  for (std::size_t i = 0; i < interp.size(); ++i) {
    if (!(interp[i].t <= config.strong_neg(interp[i].f))) {
      r.consistent = false;
      r.violating_atoms.push_back(interp.universe()->atom(i));
    }
  }
  return r;
}

inline bool is_consistent(const ParaInterp& interp, const LatticeConfig& config) {
  return consistency(interp, config).consistent;
}

// ---- orders -----------------------------------------------------------------

namespace detail {
inline void require_same_universe(const ParaInterp& a, const ParaInterp& b) {
  if (!(a.universe() == b.universe() || *a.universe() == *b.universe()))
    throw ConfigError("interpretations over different universes");
}
}  // namespace detail

/// Truth order: componentwise on both degrees.
inline bool leq_t(const ParaInterp& a, const ParaInterp& b) {
  detail::require_same_universe(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i].t <= b[i].t) || !(a[i].f <= b[i].f)) return false;
  return true;
}

/// Precision order on pairs: lower bounds grow, upper bounds shrink.
inline bool leq_p(const InterpPair& a, const InterpPair& b) { return leq_t(a.lower, b.lower) && leq_t(b.upper, a.upper); }

inline bool is_ordered(const InterpPair& p) { return leq_t(p.lower, p.upper); }

inline ParaInterp tglb(const ParaInterp& a, const ParaInterp& b) {
  detail::require_same_universe(a, b);
  ParaInterp out(a.universe());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = {min(a[i].t, b[i].t), min(a[i].f, b[i].f)};
  return out;
}

inline ParaInterp tlub(const ParaInterp& a, const ParaInterp& b) {
  detail::require_same_universe(a, b);
  ParaInterp out(a.universe());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = {max(a[i].t, b[i].t), max(a[i].f, b[i].f)};
  return out;
}

inline InterpPair tglb(const InterpPair& a, const InterpPair& b) {
  return {tglb(a.lower, b.lower), tglb(a.upper, b.upper)};
}
inline InterpPair tlub(const InterpPair& a, const InterpPair& b) {
  return {tlub(a.lower, b.lower), tlub(a.upper, b.upper)};
}
inline InterpPair pglb(const InterpPair& a, const InterpPair& b) {
  return {tglb(a.lower, b.lower), tlub(a.upper, b.upper)};
}
inline InterpPair plub(const InterpPair& a, const InterpPair& b) {
  return {tlub(a.lower, b.lower), tglb(a.upper, b.upper)};
}

// ---- crisp isomorphisms -----------------------------------------------------

namespace detail {
inline void require_boolean(const ParaInterp& interp) {
  for (const auto& p : interp.values())
    if (!(p.t.is_zero() || p.t.is_one()) || !(p.f.is_zero() || p.f.is_one()))
      throw ConfigError("literal-set view needs a two-valued interpretation");
}
inline void require_boolean(const LatticeConfig& config) {
  if (config.lattice().kind() != LatticeKind::boolean)
    throw ConfigError("literal-set view needs the boolean lattice, not " + config.lattice().name());
}
}  // namespace detail

/// Literals made true: p when truth is 1, -p when falsity is 1.
inline LiteralSet zeta(const ParaInterp& interp) {
  detail::require_boolean(interp);
  LiteralSet out;
  for (std::size_t i = 0; i < interp.size(); ++i) {
    if (interp[i].t.is_one()) out.insert(Literal::pos(interp.universe()->atom(i)));
    if (interp[i].f.is_one()) out.insert(Literal::neg(interp.universe()->atom(i)));
  }
  return out;
}

inline LiteralSet zeta(const ParaInterp& interp, const LatticeConfig& config) {
  detail::require_boolean(config);
  return zeta(interp);
}

inline ParaInterp zeta_inv(const LiteralSet& literals, UniversePtr universe) {
  ParaInterp out(universe);
  for (const auto& l : literals) {
    auto& p = out.at(l.atom);
    (l.negated ? p.f : p.t) = TruthValue::one();
  }
  return out;
}

inline LiteralSet all_literals(const Universe& u) {
  auto lits = u.literals();
  return {lits.begin(), lits.end()};
}

inline LiteralSet set_difference(const LiteralSet& a, const LiteralSet& b) {
  LiteralSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

/// (L, U) to (literals true in L, literals not true in U).
inline SakamaPair zeta2(const InterpPair& pair) {
  return {zeta(pair.lower), set_difference(all_literals(*pair.upper.universe()), zeta(pair.upper))};
}

inline SakamaPair zeta2(const InterpPair& pair, const LatticeConfig& config) {
  detail::require_boolean(config);
  return zeta2(pair);
}

}  // namespace eflp
