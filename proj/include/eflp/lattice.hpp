#pragma once

#include "eflp/truth_value.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace eflp {

using Rational = TruthValue::Rational;

enum class LatticeKind { boolean, chain, rational };

/// The carrier of truth values: {0,1}, the chain {0, 1/(n-1), ..., 1}, or
/// the rationals in [0,1]. All three are totally ordered, so join is max
/// and meet is min.
class Lattice {
 public:
  Lattice() = default;

  static Lattice boolean() { return Lattice(LatticeKind::boolean, 2); }
  static Lattice chain(std::size_t n) {
    if (n < 2) throw ConfigError("chain lattice needs at least 2 elements");
    return Lattice(LatticeKind::chain, n);
  }
  static Lattice rational() { return Lattice(LatticeKind::rational, 0); }

  LatticeKind kind() const { return kind_; }
  /// Number of elements for finite lattices, 0 for the rationals.
  std::size_t size() const { return size_; }
  bool is_finite() const { return kind_ != LatticeKind::rational; }

  bool contains(const TruthValue& v) const {
    switch (kind_) {
      case LatticeKind::boolean:
        return v.is_zero() || v.is_one();
      case LatticeKind::chain:
        return (v.denominator() == 1) || (TruthValue::Integer(size_ - 1) % v.denominator() == 0);
      case LatticeKind::rational:
        return true;
    }
    return false;
  }

  /// Elements in ascending order. Throws for the infinite carrier.
  std::vector<TruthValue> carrier() const {
    if (!is_finite()) throw ConfigError("the rational lattice has no finite carrier");
    std::vector<TruthValue> out;
    out.reserve(size_);
    for (std::size_t k = 0; k < size_; ++k)
      out.push_back(TruthValue::fraction(static_cast<std::int64_t>(k), static_cast<std::int64_t>(size_ - 1)));
    return out;
  }

  TruthValue bottom() const { return TruthValue::zero(); }
  TruthValue top() const { return TruthValue::one(); }

  void require(const TruthValue& v) const {
    if (!contains(v)) throw ConfigError("value " + v.to_string() + " is not in lattice " + name());
  }

  /// Least upper bound; the empty join is 0.
  TruthValue join(std::span<const TruthValue> values) const {
    TruthValue acc = bottom();
    for (const auto& v : values) {
      require(v);
      if (v > acc) acc = v;
    }
    return acc;
  }

  /// Greatest lower bound; the empty meet is 1.
  TruthValue meet(std::span<const TruthValue> values) const {
    TruthValue acc = top();
    for (const auto& v : values) {
      require(v);
      if (v < acc) acc = v;
    }
    return acc;
  }

  std::string name() const {
    switch (kind_) {
      case LatticeKind::boolean:
        return "bool";
      case LatticeKind::chain:
        return "chain(" + std::to_string(size_) + ")";
      case LatticeKind::rational:
        return "rational";
    }
    return "?";
  }

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  Lattice(LatticeKind k, std::size_t n) : kind_(k), size_(n) {}

  LatticeKind kind_ = LatticeKind::rational;
  std::size_t size_ = 0;
};

namespace truth {

inline TruthValue godel_and(const TruthValue& x, const TruthValue& y) { return min(x, y); }
inline TruthValue godel_or(const TruthValue& x, const TruthValue& y) { return max(x, y); }

inline TruthValue lukasiewicz_and(const TruthValue& x, const TruthValue& y) {
  Rational r = x.rational() + y.rational() - 1;
  return r <= 0 ? TruthValue::zero() : TruthValue::unchecked(std::move(r));
}
inline TruthValue lukasiewicz_or(const TruthValue& x, const TruthValue& y) {
  Rational r = x.rational() + y.rational();
  return r >= 1 ? TruthValue::one() : TruthValue::unchecked(std::move(r));
}

inline TruthValue product_and(const TruthValue& x, const TruthValue& y) {
  return TruthValue::unchecked(x.rational() * y.rational());
}
inline TruthValue product_or(const TruthValue& x, const TruthValue& y) {
  return TruthValue::unchecked(x.rational() + y.rational() - x.rational() * y.rational());
}

// Residual implicators, written as z <- x: the largest y with x & y <= z.
inline TruthValue godel_impl(const TruthValue& z, const TruthValue& x) {
  return x <= z ? TruthValue::one() : z;
}
inline TruthValue lukasiewicz_impl(const TruthValue& z, const TruthValue& x) {
  Rational r = Rational(1) - x.rational() + z.rational();
  return r >= 1 ? TruthValue::one() : TruthValue::unchecked(std::move(r));
}
inline TruthValue product_impl(const TruthValue& z, const TruthValue& x) {
  if (x <= z) return TruthValue::one();
  return TruthValue::unchecked(z.rational() / x.rational());
}

inline TruthValue standard_neg(const TruthValue& x) { return TruthValue::unchecked(Rational(1) - x.rational()); }
inline TruthValue godel_neg(const TruthValue& x) { return x.is_zero() ? TruthValue::one() : TruthValue::zero(); }

inline TruthValue threshold(const TruthValue& c, const TruthValue& x) {
  return x >= c ? TruthValue::one() : TruthValue::zero();
}

}  // namespace truth

using CustomTruthFn = std::function<TruthValue(std::span<const TruthValue>)>;

/// A body connective with its truth function.
///
/// Built-ins dispatch on `op`; `geq[c]` carries its threshold in `param`.
struct Connective {
  enum class Op { godel_and, godel_or, lukasiewicz_and, lukasiewicz_or, product_and, product_or, threshold, custom };

  std::string id;
  std::size_t arity = 2;
  Op op = Op::godel_and;
  TruthValue param;
  CustomTruthFn custom;
  /// Monotonicity of custom connectives is declared, not proven.
  bool declared_monotone = true;

  TruthValue apply(std::span<const TruthValue> args) const {
    switch (op) {
      case Op::godel_and:
        return truth::godel_and(args[0], args[1]);
      case Op::godel_or:
        return truth::godel_or(args[0], args[1]);
      case Op::lukasiewicz_and:
        return truth::lukasiewicz_and(args[0], args[1]);
      case Op::lukasiewicz_or:
        return truth::lukasiewicz_or(args[0], args[1]);
      case Op::product_and:
        return truth::product_and(args[0], args[1]);
      case Op::product_or:
        return truth::product_or(args[0], args[1]);
      case Op::threshold:
        return truth::threshold(param, args[0]);
      case Op::custom:
        return custom(args);
    }
    throw ConfigError("corrupt connective " + id);
  }

  /// True for the conjunctions that coincide with classical "and" on {0,1}.
  bool is_conjunction() const {
    return op == Op::godel_and || op == Op::lukasiewicz_and || op == Op::product_and;
  }
};

enum class NegatorKind { standard, godel };

inline TruthValue apply_negator(NegatorKind kind, const TruthValue& v) {
  return kind == NegatorKind::standard ? truth::standard_neg(v) : truth::godel_neg(v);
}

inline std::string negator_name(NegatorKind kind) { return kind == NegatorKind::standard ? "standard" : "godel"; }

inline NegatorKind parse_negator(const std::string& name) {
  if (name == "standard") return NegatorKind::standard;
  if (name == "godel") return NegatorKind::godel;
  throw ConfigError("unknown negator '" + name + "'");
}

using ImplicatorFn = TruthValue (*)(const TruthValue& z, const TruthValue& x);
using ConjunctorFn = TruthValue (*)(const TruthValue& x, const TruthValue& y);

/// Implicator z <- x paired with the conjunctor it is residuated with.
struct Implicator {
  std::string id;
  ImplicatorFn fn = nullptr;
  std::string adjoint_conjunction;
};

inline std::string threshold_id(const TruthValue& c) { return "geq[" + c.to_string() + "]"; }

/// Truth-value algebra for one program: lattice, default connectives,
/// negators, and any user-registered connectives.
class LatticeConfig {
 public:
  LatticeConfig() = default;
  explicit LatticeConfig(Lattice lattice) : lattice_(lattice) {}

  const Lattice& lattice() const { return lattice_; }
  void set_lattice(Lattice lattice) {
    lattice_ = lattice;
    check_closure(conj_);
  }

  const std::string& conjunction() const { return conj_; }
  const std::string& disjunction() const { return disj_; }

  /// Selects the program-default conjunction family (and its dual disjunction).
  void set_conjunction_family(const std::string& family) {
    if (family != "godel" && family != "lukasiewicz" && family != "product")
      throw ConfigError("unknown conjunction family '" + family + "'");
    check_closure(family);
    conj_ = family;
    disj_ = family + "_or";
  }

  NegatorKind strong_negator() const { return sneg_; }
  NegatorKind weak_negator() const { return wneg_; }
  void set_strong_negator(NegatorKind k) { sneg_ = k; }
  void set_weak_negator(NegatorKind k) { wneg_ = k; }

  TruthValue strong_neg(const TruthValue& v) const { return apply_negator(sneg_, v); }
  TruthValue weak_neg(const TruthValue& v) const { return apply_negator(wneg_, v); }

  /// Registers a user connective. Ids of built-ins cannot be shadowed.
  void register_connective(const std::string& id, std::size_t arity, CustomTruthFn fn, bool declared_monotone) {
    if (builtin(id)) throw ConfigError("connective '" + id + "' is built in");
    if (id.empty() || id.front() == '@') throw ConfigError("invalid connective id '" + id + "'");
    Connective c;
    c.id = id;
    c.arity = arity;
    c.op = Connective::Op::custom;
    c.custom = std::move(fn);
    c.declared_monotone = declared_monotone;
    custom_[id] = std::move(c);
  }

  /// Looks up a connective id, including the `geq[c]` threshold family.
  std::optional<Connective> connective(const std::string& id) const {
    if (auto c = builtin(id)) {
      if (lattice_.kind() != LatticeKind::rational &&
          (c->op == Connective::Op::product_and || c->op == Connective::Op::product_or))
        return std::nullopt;
      return c;
    }
    if (auto it = custom_.find(id); it != custom_.end()) return it->second;
    return std::nullopt;
  }

  TruthValue apply_connective(const std::string& id, std::span<const TruthValue> args) const {
    auto c = connective(id);
    if (!c) throw ConfigError("unknown connective '" + id + "'");
    if (args.size() != c->arity)
      throw ConfigError("connective '" + id + "' expects " + std::to_string(c->arity) + " arguments, got " +
                        std::to_string(args.size()));
    for (const auto& a : args) lattice_.require(a);
    return c->apply(args);
  }

  std::optional<Implicator> implicator(const std::string& id) const {
    if (id == "godel") return Implicator{id, &truth::godel_impl, "godel"};
    if (id == "lukasiewicz") return Implicator{id, &truth::lukasiewicz_impl, "lukasiewicz"};
    if (id == "product" && lattice_.kind() == LatticeKind::rational)
      return Implicator{id, &truth::product_impl, "product"};
    return std::nullopt;
  }

  /// The implicator residuated with the program-default conjunction.
  std::string default_implicator() const { return conj_; }

  const std::map<std::string, Connective>& custom_connectives() const { return custom_; }

  friend bool operator==(const LatticeConfig& a, const LatticeConfig& b) {
    if (!(a.lattice_ == b.lattice_) || a.conj_ != b.conj_ || a.disj_ != b.disj_ || a.sneg_ != b.sneg_ ||
        a.wneg_ != b.wneg_ || a.custom_.size() != b.custom_.size())
      return false;
    for (const auto& [id, c] : a.custom_)
      if (!b.custom_.contains(id)) return false;
    return true;
  }

  static std::optional<Connective> builtin(const std::string& id) {
    using Op = Connective::Op;
    static const std::map<std::string, Op> table = {
        {"godel", Op::godel_and},          {"godel_or", Op::godel_or},
        {"lukasiewicz", Op::lukasiewicz_and}, {"lukasiewicz_or", Op::lukasiewicz_or},
        {"product", Op::product_and},      {"product_or", Op::product_or},
    };
    if (auto it = table.find(id); it != table.end()) return Connective{id, 2, it->second, {}, {}, true};
    if (id.size() > 5 && id.starts_with("geq[") && id.back() == ']') {
      TruthValue c;
      try {
        c = TruthValue::parse(std::string_view(id).substr(4, id.size() - 5));
      } catch (const ConfigError&) {
        return std::nullopt;
      }
      return Connective{threshold_id(c), 1, Op::threshold, c, {}, true};
    }
    return std::nullopt;
  }

 private:
  void check_closure(const std::string& family) const {
    if (family == "product" && lattice_.kind() != LatticeKind::rational)
      throw ConfigError("product connectives are not closed on " + lattice_.name());
  }

  Lattice lattice_ = Lattice::rational();
  std::string conj_ = "godel";
  std::string disj_ = "godel_or";
  NegatorKind sneg_ = NegatorKind::standard;
  NegatorKind wneg_ = NegatorKind::standard;
  std::map<std::string, Connective> custom_;
};

/// Outcome of an exhaustive or sampled law check.
struct LawReport {
  bool pass = true;
  std::size_t checked = 0;
  std::vector<TruthValue> counterexample;
};

namespace detail {

/// Random rationals in [0,1] with small denominators, so that coincidences
/// (equal values, boundary cases) actually occur in samples.
inline TruthValue sample_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> den_dist(1, 12);
  std::int64_t den = den_dist(rng);
  std::uniform_int_distribution<std::int64_t> num_dist(0, den);
  return TruthValue::fraction(num_dist(rng), den);
}

}  // namespace detail

/// Adjoint law x & y <= z  iff  y <= (z <- x), for an arbitrary pairing.
/// Exhaustive on finite lattices; `samples` random triples on the rationals.
inline LawReport check_adjoint_pair(ImplicatorFn impl, ConjunctorFn conj, const Lattice& lattice,
                                    std::size_t samples = 10000, std::uint64_t seed = 1) {
  LawReport report;
  auto check = [&](const TruthValue& x, const TruthValue& y, const TruthValue& z) {
    ++report.checked;
    bool lhs = conj(x, y) <= z;
    bool rhs = y <= impl(z, x);
    if (lhs != rhs && report.pass) {
      report.pass = false;
      report.counterexample = {x, y, z};
    }
  };
  if (lattice.is_finite()) {
    auto values = lattice.carrier();
    for (const auto& x : values)
      for (const auto& y : values)
        for (const auto& z : values) check(x, y, z);
  } else {
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
      auto x = detail::sample_rational(rng);
      auto y = detail::sample_rational(rng);
      auto z = detail::sample_rational(rng);
      check(x, y, z);
    }
  }
  return report;
}

/// Adjoint check for a registered implicator id against its declared partner.
inline LawReport check_adjoint(const LatticeConfig& config, const std::string& implicator_id,
                               std::size_t samples = 10000, std::uint64_t seed = 1) {
  auto impl = config.implicator(implicator_id);
  if (!impl) throw ConfigError("unknown implicator '" + implicator_id + "'");
  ConjunctorFn conj = nullptr;
  if (impl->adjoint_conjunction == "godel") conj = &truth::godel_and;
  if (impl->adjoint_conjunction == "lukasiewicz") conj = &truth::lukasiewicz_and;
  if (impl->adjoint_conjunction == "product") conj = &truth::product_and;
  if (!conj) throw ConfigError("implicator '" + implicator_id + "' has no adjoint conjunction");
  return check_adjoint_pair(impl->fn, conj, config.lattice(), samples, seed);
}

/// Monotonicity in every argument: exhaustive over the carrier when finite,
/// sampled pairs of argument vectors otherwise.
inline LawReport check_monotone(const Connective& c, const Lattice& lattice, std::size_t samples = 10000,
                                std::uint64_t seed = 1) {
  LawReport report;
  std::vector<TruthValue> lo(c.arity), hi(c.arity);
  auto compare = [&] {
    ++report.checked;
    if (c.apply(lo) > c.apply(hi) && report.pass) {
      report.pass = false;
      report.counterexample = lo;
      report.counterexample.insert(report.counterexample.end(), hi.begin(), hi.end());
    }
  };
  if (lattice.is_finite()) {
    auto values = lattice.carrier();
    std::size_t n = values.size();
    // Enumerate every pair (lo, hi) that differs in exactly one argument with lo_i <= hi_i.
    std::vector<std::size_t> idx(c.arity, 0);
    for (;;) {
      for (std::size_t i = 0; i < c.arity; ++i) lo[i] = values[idx[i]];
      for (std::size_t arg = 0; arg < c.arity; ++arg) {
        hi = lo;
        for (std::size_t up = idx[arg]; up < n; ++up) {
          hi[arg] = values[up];
          compare();
        }
      }
      std::size_t k = 0;
      while (k < c.arity && ++idx[k] == n) idx[k++] = 0;
      if (k == c.arity) break;
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, c.arity == 0 ? 0 : c.arity - 1);
    for (std::size_t s = 0; s < samples; ++s) {
      for (auto& v : lo) v = detail::sample_rational(rng);
      hi = lo;
      std::size_t arg = pick(rng);
      auto other = detail::sample_rational(rng);
      if (other < lo[arg]) std::swap(lo[arg], other);
      hi[arg] = other;
      compare();
    }
  }
  return report;
}

/// Antimonotone and classical on {0,1}.
inline LawReport check_negator(NegatorKind kind, const Lattice& lattice, std::size_t samples = 10000,
                               std::uint64_t seed = 1) {
  LawReport report;
  report.checked += 2;
  if (!apply_negator(kind, TruthValue::zero()).is_one() || !apply_negator(kind, TruthValue::one()).is_zero()) {
    report.pass = false;
    report.counterexample = {TruthValue::zero(), TruthValue::one()};
    return report;
  }
  auto check = [&](const TruthValue& x, const TruthValue& y) {
    ++report.checked;
    if (x <= y && apply_negator(kind, y) > apply_negator(kind, x) && report.pass) {
      report.pass = false;
      report.counterexample = {x, y};
    }
  };
  if (lattice.is_finite()) {
    auto values = lattice.carrier();
    for (const auto& x : values)
      for (const auto& y : values) check(x, y);
  } else {
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) check(detail::sample_rational(rng), detail::sample_rational(rng));
  }
  return report;
}

}  // namespace eflp
