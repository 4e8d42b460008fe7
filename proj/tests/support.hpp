#pragma once

// Brute-force reference computations and the property checks shared by the
// unit suites and the acceptance runner.

#include "eflp/eflp.hpp"
#include "eflp/generate.hpp"
#include "eflp/io/json.hpp"
#include "eflp/theorems.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace eflp::testing {

inline TruthValue tv(const char* text) { return TruthValue::parse(text); }

inline ParaInterp interp(const UniversePtr& u, std::initializer_list<std::pair<const char*, std::pair<const char*, const char*>>> items) {
  ParaInterp out(u);
  for (const auto& [atom, pair] : items) out.at(atom) = {tv(pair.first), tv(pair.second)};
  return out;
}

/// Every interpretation over `u` with degrees from `values`.
inline std::vector<ParaInterp> all_interps(const UniversePtr& u, const std::vector<TruthValue>& values) {
  std::vector<ParaInterp> out;
  std::size_t count = 1;
  for (std::size_t i = 0; i < 2 * u->size(); ++i) count *= values.size();
  for (std::size_t code = 0; code < count; ++code) {
    ParaInterp i(u);
    std::size_t c = code;
    for (std::size_t a = 0; a < u->size(); ++a) {
      i[a].t = values[c % values.size()];
      c /= values.size();
      i[a].f = values[c % values.size()];
      c /= values.size();
    }
    out.push_back(std::move(i));
  }
  return out;
}

/// The element below all others in `candidates` under `leq`, if any.
template <class T, class Leq>
std::optional<T> least_of(const std::vector<T>& candidates, Leq leq) {
  for (const auto& c : candidates) {
    bool least = true;
    for (const auto& d : candidates)
      if (!leq(c, d)) {
        least = false;
        break;
      }
    if (least) return c;
  }
  return std::nullopt;
}

/// Least fixpoint of z -> first(z, frozen) found by scanning every
/// interpretation rather than iterating.
inline std::optional<ParaInterp> scanned_frozen_lfp(const CompiledProgram& cp, const ParaInterp& frozen,
                                                    const std::vector<TruthValue>& values) {
  std::vector<ParaInterp> fixpoints;
  for (const auto& z : all_interps(cp.universe(), values))
    if (approximator_first(cp, z, frozen) == z) fixpoints.push_back(z);
  return least_of(fixpoints, [](const auto& a, const auto& b) { return leq_t(a, b); });
}

/// Precision-least fixpoint of the approximator by scanning all pairs.
inline std::optional<InterpPair> scanned_kk(const CompiledProgram& cp, const std::vector<TruthValue>& values) {
  auto all = all_interps(cp.universe(), values);
  std::vector<InterpPair> fixpoints;
  for (const auto& l : all)
    for (const auto& u : all) {
      InterpPair p{l, u};
      if (approximator(cp, p) == p) fixpoints.push_back(p);
    }
  return least_of(fixpoints, [](const auto& a, const auto& b) { return leq_p(a, b); });
}

/// Outcome of one property over many generated cases.
struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string witness;

  bool ok() const { return failures == 0 && cases > 0; }
  void fail(const std::string& w) {
    if (failures++ == 0) witness = w;
  }
};

/// Lattice setups the random programs are drawn over. The rational one
/// sticks to Gödel connectives so that every iteration terminates.
struct Setting {
  std::string name;
  LatticeConfig config;
  gen::FuzzyOptions options;
};

inline std::vector<Setting> settings() {
  std::vector<Setting> out;
  auto add = [&](std::string name, Lattice lattice, const std::string& conj, std::vector<std::string> conns) {
    LatticeConfig c(lattice);
    c.set_conjunction_family(conj);
    gen::FuzzyOptions o;
    o.connectives = std::move(conns);
    out.push_back({std::move(name), c, o});
  };
  add("bool", Lattice::boolean(), "godel", {"godel", "godel_or", "lukasiewicz"});
  add("chain3", Lattice::chain(3), "lukasiewicz", {"godel", "godel_or", "lukasiewicz", "lukasiewicz_or"});
  add("chain5", Lattice::chain(5), "godel", {"godel", "godel_or", "lukasiewicz", "lukasiewicz_or"});
  add("rational", Lattice::rational(), "godel", {"godel", "godel_or"});
  return out;
}

inline std::string describe(const Program& p, const ParaInterp& i) {
  return to_text(p) + "interp: " + io::to_json(i).dump();
}

/// Runs `body(setting, rng)` `per_setting` times for each setting.
inline PropertyResult for_settings(const std::string& name, std::size_t per_setting, std::uint64_t seed,
                                   const std::function<void(const Setting&, gen::Rng&, PropertyResult&)>& body) {
  PropertyResult r{name};
  gen::Rng rng(seed);
  for (const auto& s : settings())
    for (std::size_t i = 0; i < per_setting; ++i) body(s, rng, r);
  return r;
}

inline PropertyResult prop_model_iff_prefixpoint(std::size_t n = 300, std::uint64_t seed = 11) {
  return for_settings("model iff prefixpoint", n, seed, [](const Setting& s, gen::Rng& rng, PropertyResult& r) {
    auto p = gen::fuzzy_program(rng, s.config, s.options);
    CompiledProgram cp(p);
    auto i = gen::random_interp(rng, cp.universe(), gen::sample_values(s.config.lattice()));
    ++r.cases;
    if (is_model(cp, i) != leq_t(phi(cp, i), i)) r.fail(describe(p, i));
  });
}

inline PropertyResult prop_approximator_monotone(std::size_t n = 300, std::uint64_t seed = 12) {
  return for_settings("approximator precision-monotone", n, seed, [](const Setting& s, gen::Rng& rng, PropertyResult& r) {
    auto p = gen::fuzzy_program(rng, s.config, s.options);
    CompiledProgram cp(p);
    auto values = gen::sample_values(s.config.lattice());
    // (L,U) below (M,T): L <= M and T <= U.
    auto l = gen::random_interp(rng, cp.universe(), values);
    auto m = gen::random_above(rng, l, values);
    auto t = gen::random_interp(rng, cp.universe(), values);
    auto u = gen::random_above(rng, t, values);
    InterpPair lo{l, u}, hi{m, t};
    ++r.cases;
    if (!leq_p(approximator(cp, lo), approximator(cp, hi))) r.fail(to_text(p));
  });
}

inline PropertyResult prop_exactness(std::size_t n = 300, std::uint64_t seed = 13) {
  return for_settings("approximator exact on exact pairs", n, seed, [](const Setting& s, gen::Rng& rng, PropertyResult& r) {
    auto p = gen::fuzzy_program(rng, s.config, s.options);
    CompiledProgram cp(p);
    auto i = gen::random_interp(rng, cp.universe(), gen::sample_values(s.config.lattice()));
    auto a = approximator(cp, {i, i});
    auto f = phi(cp, i);
    ++r.cases;
    if (!(a.lower == f && a.upper == f)) r.fail(describe(p, i));
  });
}

inline PropertyResult prop_symmetry(std::size_t n = 300, std::uint64_t seed = 14) {
  return for_settings("approximator symmetric", n, seed, [](const Setting& s, gen::Rng& rng, PropertyResult& r) {
    auto p = gen::fuzzy_program(rng, s.config, s.options);
    CompiledProgram cp(p);
    auto values = gen::sample_values(s.config.lattice());
    auto l = gen::random_interp(rng, cp.universe(), values);
    auto u = gen::random_interp(rng, cp.universe(), values);
    ++r.cases;
    if (!(approximator(cp, {l, u}).upper == approximator(cp, {u, l}).lower)) r.fail(to_text(p));
  });
}

inline PropertyResult prop_pair_eval_monotone(std::size_t n = 300, std::uint64_t seed = 15) {
  return for_settings("pair evaluation precision-monotone", n, seed,
                      [](const Setting& s, gen::Rng& rng, PropertyResult& r) {
                        auto p = gen::fuzzy_program(rng, s.config, s.options);
                        if (p.rules.empty()) p.rules.push_back({Literal::pos("a"), Formula::atom("a"), std::nullopt});
                        auto u_ptr = make_universe(p.atoms());
                        auto values = gen::sample_values(s.config.lattice());
                        auto l = gen::random_interp(rng, u_ptr, values);
                        auto m = gen::random_above(rng, l, values);
                        auto t = gen::random_interp(rng, u_ptr, values);
                        auto u = gen::random_above(rng, t, values);
                        for (const auto& rule : p.rules) {
                          ++r.cases;
                          if (!(eval_pair(l, u, rule.body, p.config) <= eval_pair(m, t, rule.body, p.config)))
                            r.fail(to_text(rule.body));
                        }
                      });
}

inline PropertyResult prop_pair_eval_diagonal(std::size_t n = 300, std::uint64_t seed = 16) {
  return for_settings("pair evaluation on (I,I) equals evaluation", n, seed,
                      [](const Setting& s, gen::Rng& rng, PropertyResult& r) {
                        auto p = gen::fuzzy_program(rng, s.config, s.options);
                        auto u = make_universe(p.atoms());
                        auto i = gen::random_interp(rng, u, gen::sample_values(s.config.lattice()));
                        CompiledProgram cp(p, u);
                        for (std::size_t k = 0; k < p.rules.size(); ++k) {
                          ++r.cases;
                          auto reference = eval(i, p.rules[k].body, p.config);
                          if (!(eval_pair(i, i, p.rules[k].body, p.config) == reference &&
                                cp.eval(cp.bodies()[k], i, i) == reference))
                            r.fail(to_text(p.rules[k].body));
                        }
                      });
}

inline PropertyResult prop_negation_free_monotone(std::size_t n = 300, std::uint64_t seed = 17) {
  return for_settings("immediate consequence monotone without weak negation", n, seed,
                      [](const Setting& s, gen::Rng& rng, PropertyResult& r) {
                        auto o = s.options;
                        o.weak_negation = false;
                        auto p = gen::fuzzy_program(rng, s.config, o);
                        CompiledProgram cp(p);
                        auto values = gen::sample_values(s.config.lattice());
                        auto i = gen::random_interp(rng, cp.universe(), values);
                        auto j = gen::random_above(rng, i, values);
                        ++r.cases;
                        if (!leq_t(phi(cp, i), phi(cp, j))) r.fail(describe(p, i));
                      });
}

/// Exhaustive over two-valued interpretations on 0..4 atoms.
inline PropertyResult prop_zeta_isomorphism() {
  PropertyResult r{"literal-set view is an order isomorphism"};
  const std::vector<TruthValue> crisp{TruthValue::zero(), TruthValue::one()};
  for (std::size_t n = 0; n <= 4; ++n) {
    auto u = make_universe(gen::atom_names(n));
    auto all = all_interps(u, crisp);
    std::vector<LiteralSet> images;
    for (const auto& i : all) {
      ++r.cases;
      images.push_back(zeta(i));
      if (!(zeta_inv(images.back(), u) == i)) r.fail(io::to_json(i).dump());
    }
    for (std::size_t a = 0; a < all.size(); ++a)
      for (std::size_t b = 0; b < all.size(); ++b) {
        ++r.cases;
        bool sub = std::includes(images[b].begin(), images[b].end(), images[a].begin(), images[a].end());
        if (leq_t(all[a], all[b]) != sub) r.fail(io::to_json(all[a]).dump() + " vs " + io::to_json(all[b]).dump());
      }
  }
  return r;
}

inline PropertyResult prop_ordered_kk_wf(std::size_t n = 300, std::uint64_t seed = 18) {
  return for_settings("Kripke-Kleene and well-founded pairs are ordered", n, seed,
                      [](const Setting& s, gen::Rng& rng, PropertyResult& r) {
                        auto p = gen::fuzzy_program(rng, s.config, s.options);
                        CompiledProgram cp(p);
                        auto kk = kripke_kleene(cp).value;
                        auto wf = well_founded(cp).value;
                        r.cases += 2;
                        if (!is_ordered(kk)) r.fail("kk: " + to_text(p));
                        if (!is_ordered(wf)) r.fail("wf: " + to_text(p));
                      });
}

/// Boolean programs on at most three atoms, all interpretations scanned.
inline PropertyResult prop_stable_minimal(std::size_t n = 1000, std::uint64_t seed = 19) {
  PropertyResult r{"stable fixpoints are minimal fixpoints"};
  gen::Rng rng(seed);
  const std::vector<TruthValue> crisp{TruthValue::zero(), TruthValue::one()};
  LatticeConfig config(Lattice::boolean());
  gen::FuzzyOptions o;
  o.max_atoms = 3;
  o.connectives = {"godel", "godel_or"};
  SearchOptions brute;
  brute.strategy = SearchStrategy::brute_force;
  brute.workers = 1;
  for (std::size_t k = 0; k < n; ++k) {
    auto p = gen::fuzzy_program(rng, config, o);
    CompiledProgram cp(p);
    auto stable = enumerate_stable_models(cp, crisp, brute);
    auto minimal = minimal_fixpoints(cp, crisp, brute);
    ++r.cases;
    for (const auto& m : stable) {
      bool fixpoint = phi(cp, m) == m;
      bool is_minimal = std::find(minimal.begin(), minimal.end(), m) != minimal.end();
      if (!fixpoint || !is_minimal) r.fail(describe(p, m));
    }
  }
  return r;
}

/// Adjoint law for the shipped pairs, exhaustive on chain(2..6) and
/// sampled on the rationals.
inline PropertyResult prop_adjoint_laws(std::size_t samples = 2000) {
  PropertyResult r{"adjoint laws"};
  for (std::size_t n = 2; n <= 6; ++n) {
    LatticeConfig c(Lattice::chain(n));
    for (const char* id : {"godel", "lukasiewicz"}) {
      auto rep = check_adjoint(c, id);
      r.cases += rep.checked;
      if (!rep.pass) r.fail(std::string(id) + " on chain(" + std::to_string(n) + ")");
    }
  }
  LatticeConfig q(Lattice::rational());
  for (const char* id : {"godel", "lukasiewicz", "product"}) {
    auto rep = check_adjoint(q, id, samples, 5);
    r.cases += rep.checked;
    if (!rep.pass) r.fail(std::string(id) + " on rationals");
  }
  return r;
}

inline std::vector<PropertyResult> all_properties() {
  return {prop_model_iff_prefixpoint(), prop_approximator_monotone(), prop_exactness(),
          prop_pair_eval_monotone(),    prop_negation_free_monotone(), prop_zeta_isomorphism(),
          prop_ordered_kk_wf(),         prop_stable_minimal(),         prop_adjoint_laws()};
}

}  // namespace eflp::testing
