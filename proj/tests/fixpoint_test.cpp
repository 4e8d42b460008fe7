#include "support.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace eflp;
using eflp::testing::interp;
using eflp::testing::tv;

namespace {

Program p1() { return parse_program("#lattice bool. neg q <- not p. p <- p."); }
Program twoneg() { return parse_program("#lattice bool. p <- not q. q <- not p."); }

Program empty_over(std::set<std::string> atoms) {
  Program p;
  p.declared_atoms = std::move(atoms);
  return p;
}

ParaInterp i1(const UniversePtr& u) { return interp(u, {{"p", {"0", "0"}}, {"q", {"0", "1"}}}); }

SearchOptions brute() {
  SearchOptions o;
  o.strategy = SearchStrategy::brute_force;
  return o;
}

// Least fixpoint of stable revision, each inner least fixpoint found by scanning.
std::optional<InterpPair> scanned_wf(const CompiledProgram& cp, const std::vector<TruthValue>& values) {
  auto u = cp.universe();
  InterpPair cur{ParaInterp(u), ParaInterp::top(u)};
  for (;;) {
    auto lo = eflp::testing::scanned_frozen_lfp(cp, cur.upper, values);
    auto up = eflp::testing::scanned_frozen_lfp(cp, cur.lower, values);
    if (!lo || !up) return std::nullopt;
    InterpPair next{*lo, *up};
    if (next == cur) return cur;
    cur = next;
  }
}

}  // namespace

TEST(LfpIterate, IdentityStopsImmediately) {
  auto r = lfp_iterate([](int x) { return x; }, 7);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.value, 7);
  EXPECT_EQ(r.iterations, 0u);
  EXPECT_EQ(r.applications, 1u);
}

TEST(LfpIterate, ReportsBudgetExhaustion) {
  auto r = lfp_iterate([](int x) { return x + 1; }, 0, 5);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.applications, 5u);
  EXPECT_THROW(require_converged(r, 5), NonConvergenceError);
}

TEST(LfpIterate, PhiOfP2FromBottom) {
  CompiledProgram cp(parse_program("#lattice bool. neg q <- neg p. p <- p."));
  auto bot = ParaInterp(cp.universe());
  auto r = lfp_iterate([&](const ParaInterp& i) { return phi(cp, i); }, bot);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.value, bot);
  EXPECT_EQ(r.applications, 1u);
}

TEST(LfpIterate, ProductSelfLoop) {
  CompiledProgram cp(parse_program("#conj product. p <- product(1/2, p)."));
  auto bot = ParaInterp(cp.universe());
  auto r = lfp_iterate([&](const ParaInterp& i) { return phi(cp, i); }, bot);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.value, bot);
  EXPECT_EQ(r.applications, 1u);
}

TEST(KripkeKleene, P1) {
  CompiledProgram cp(p1());
  auto u = cp.universe();
  auto r = kripke_kleene(cp);
  InterpPair expected{ParaInterp(u), interp(u, {{"p", {"1", "0"}}, {"q", {"0", "1"}}})};
  EXPECT_EQ(r.value, expected);
  EXPECT_EQ(r.iterations, 1u);
  auto scanned = eflp::testing::scanned_kk(cp, Lattice::boolean().carrier());
  ASSERT_TRUE(scanned);
  EXPECT_EQ(*scanned, expected);
}

TEST(KripkeKleene, EmptyProgram) {
  CompiledProgram cp(empty_over({"p", "q"}));
  auto r = kripke_kleene(cp);
  EXPECT_TRUE(r.value.exact());
  EXPECT_EQ(r.value.lower, ParaInterp(cp.universe()));
  EXPECT_EQ(r.iterations, 1u);
}

TEST(KripkeKleene, SelfSupportLeavesAtomUndetermined) {
  CompiledProgram cp(parse_program("#lattice bool. p <- p."));
  auto u = cp.universe();
  auto r = kripke_kleene(cp);
  EXPECT_EQ(r.value, (InterpPair{ParaInterp(u), interp(u, {{"p", {"1", "0"}}})}));
}

TEST(KripkeKleene, MatchesScanOnSmallPrograms) {
  gen::Rng rng(31);
  LatticeConfig config(Lattice::boolean());
  gen::FuzzyOptions o;
  o.max_atoms = 2;
  o.connectives = {"godel", "godel_or"};
  for (int k = 0; k < 100; ++k) {
    auto p = gen::fuzzy_program(rng, config, o);
    CompiledProgram cp(p);
    auto scanned = eflp::testing::scanned_kk(cp, Lattice::boolean().carrier());
    ASSERT_TRUE(scanned) << to_text(p);
    EXPECT_EQ(kripke_kleene(cp).value, *scanned) << to_text(p);
  }
}

TEST(StableRevision, P1FromBottomTop) {
  CompiledProgram cp(p1());
  auto u = cp.universe();
  auto values = Lattice::boolean().carrier();
  auto r = stable_revision(cp, {ParaInterp(u), ParaInterp::top(u)});
  auto lower = eflp::testing::scanned_frozen_lfp(cp, ParaInterp::top(u), values);
  auto upper = eflp::testing::scanned_frozen_lfp(cp, ParaInterp(u), values);
  ASSERT_TRUE(lower && upper);
  EXPECT_EQ(r, (InterpPair{*lower, *upper}));
  EXPECT_EQ(r.lower, ParaInterp(u));
  EXPECT_EQ(r.upper, i1(u));
}

TEST(StableRevision, EmptyProgram) {
  CompiledProgram cp(empty_over({"p"}));
  auto u = cp.universe();
  EXPECT_EQ(stable_revision(cp, {ParaInterp::top(u), ParaInterp::top(u)}), (InterpPair{ParaInterp(u), ParaInterp(u)}));
}

TEST(StableRevision, MutualNegation) {
  CompiledProgram cp(twoneg());
  auto u = cp.universe();
  auto r = stable_revision(cp, {ParaInterp(u), ParaInterp::top(u)});
  EXPECT_EQ(r, (InterpPair{ParaInterp(u), interp(u, {{"p", {"1", "0"}}, {"q", {"1", "0"}}})}));
}

TEST(WellFounded, P1IsTheIntendedModel) {
  CompiledProgram cp(p1());
  auto r = well_founded(cp);
  EXPECT_TRUE(r.value.exact());
  EXPECT_EQ(r.value.lower, i1(cp.universe()));
}

TEST(WellFounded, MutualNegationUndetermined) {
  CompiledProgram cp(twoneg());
  auto u = cp.universe();
  EXPECT_EQ(well_founded(cp).value, (InterpPair{ParaInterp(u), interp(u, {{"p", {"1", "0"}}, {"q", {"1", "0"}}})}));
}

TEST(WellFounded, EmptyProgram) {
  CompiledProgram cp(empty_over({"p"}));
  auto r = well_founded(cp).value;
  EXPECT_TRUE(r.exact());
  EXPECT_EQ(r.lower, ParaInterp(cp.universe()));
}

TEST(WellFounded, MatchesScannedStableRevision) {
  gen::Rng rng(32);
  for (const char* lattice : {"bool", "chain3"}) {
    LatticeConfig config(std::string(lattice) == "bool" ? Lattice::boolean() : Lattice::chain(3));
    gen::FuzzyOptions o;
    o.max_atoms = 2;
    o.max_rules = 4;
    for (int k = 0; k < 60; ++k) {
      auto p = gen::fuzzy_program(rng, config, o);
      CompiledProgram cp(p);
      auto scanned = scanned_wf(cp, config.lattice().carrier());
      ASSERT_TRUE(scanned) << to_text(p);
      EXPECT_EQ(well_founded(cp).value, *scanned) << to_text(p);
    }
  }
}

TEST(WellFounded, ExactWithoutWeakNegation) {
  gen::Rng rng(33);
  for (const auto& s : eflp::testing::settings()) {
    auto o = s.options;
    o.weak_negation = false;
    for (int k = 0; k < 100; ++k) {
      auto p = gen::fuzzy_program(rng, s.config, o);
      EXPECT_TRUE(well_founded(p).value.exact()) << to_text(p);
    }
  }
}

TEST(WellFounded, AtLeastAsPreciseAsKripkeKleene) {
  gen::Rng rng(34);
  for (const auto& s : eflp::testing::settings())
    for (int k = 0; k < 150; ++k) {
      auto p = gen::fuzzy_program(rng, s.config, s.options);
      CompiledProgram cp(p);
      EXPECT_TRUE(leq_p(kripke_kleene(cp).value, well_founded(cp).value)) << to_text(p);
    }
}

TEST(WellFounded, ParaconsistencyStaysLocal) {
  auto p = parse_program("#lattice bool. p. -p. s. r <- s & not q.");
  auto r = well_founded(p).value;
  ASSERT_TRUE(r.exact());
  EXPECT_EQ(r.lower.at("p"), (TruthPair{TruthValue::one(), TruthValue::one()}));
  EXPECT_EQ(r.lower.at("r"), (TruthPair{TruthValue::one(), TruthValue::zero()}));
  EXPECT_FALSE(is_consistent(r.lower, p.config));
}

TEST(Properties, OrderedKripkeKleeneAndWellFounded) {
  auto r = eflp::testing::prop_ordered_kk_wf();
  EXPECT_TRUE(r.ok()) << r.witness;
  EXPECT_GE(r.cases, 1000u);
}

TEST(Properties, StableFixpointsAreMinimal) {
  auto r = eflp::testing::prop_stable_minimal();
  EXPECT_TRUE(r.ok()) << r.witness;
  EXPECT_GE(r.cases, 1000u);
}

TEST(NonConvergence, ProductDisjunctionLoop) {
  auto p = parse_program("#conj product. p <- product_or(p, 1/2).");
  EXPECT_THROW(kripke_kleene(p, 50), NonConvergenceError);
  EXPECT_THROW(well_founded(p, 50), NonConvergenceError);
  try {
    well_founded(p, 50);
  } catch (const NonConvergenceError& e) {
    EXPECT_EQ(e.max_iter(), 50u);
  }
}

TEST(NonConvergence, EnvironmentBudget) {
  ::setenv("EFLP_MAX_ITER", "7", 1);
  EXPECT_EQ(default_max_iter(), 7u);
  ::setenv("EFLP_MAX_ITER", "junk", 1);
  EXPECT_EQ(default_max_iter(), 10000u);
  ::unsetenv("EFLP_MAX_ITER");
  EXPECT_EQ(default_max_iter(), 10000u);
}

TEST(IsStableModel, Examples) {
  CompiledProgram cp(p1());
  EXPECT_TRUE(is_stable_model(cp, i1(cp.universe())));
  CompiledProgram loop(parse_program("#lattice bool. p <- p."));
  EXPECT_FALSE(is_stable_model(loop, interp(loop.universe(), {{"p", {"1", "0"}}})));
  CompiledProgram empty(empty_over({"p"}));
  EXPECT_TRUE(is_stable_model(empty, ParaInterp(empty.universe())));
}

TEST(Enumerate, MutualNegation) {
  CompiledProgram cp(twoneg());
  auto u = cp.universe();
  std::vector<ParaInterp> expected{interp(u, {{"p", {"0", "0"}}, {"q", {"1", "0"}}}),
                                   interp(u, {{"p", {"1", "0"}}, {"q", {"0", "0"}}})};
  EXPECT_EQ(enumerate_stable_models(cp), expected);
  EXPECT_EQ(enumerate_stable_models(cp, brute()), expected);
}

TEST(Enumerate, EmptyAndP1) {
  CompiledProgram empty(empty_over({"p"}));
  EXPECT_EQ(enumerate_stable_models(empty), std::vector<ParaInterp>{ParaInterp(empty.universe())});
  CompiledProgram cp(p1());
  EXPECT_EQ(enumerate_stable_models(cp), std::vector<ParaInterp>{i1(cp.universe())});
  EXPECT_EQ(enumerate_stable_models(cp, brute()), std::vector<ParaInterp>{i1(cp.universe())});
}

TEST(Enumerate, ParaconsistentFacts) {
  CompiledProgram cp(parse_program("#lattice bool. p. -p."));
  EXPECT_EQ(enumerate_stable_models(cp), std::vector<ParaInterp>{interp(cp.universe(), {{"p", {"1", "1"}}})});
}

TEST(Enumerate, StrategiesAgreeWithDefinition) {
  gen::Rng rng(35);
  for (const char* lattice : {"bool", "chain3"}) {
    LatticeConfig config(std::string(lattice) == "bool" ? Lattice::boolean() : Lattice::chain(3));
    gen::FuzzyOptions o;
    o.max_atoms = 2;
    o.max_rules = 5;
    auto values = config.lattice().carrier();
    for (int k = 0; k < 80; ++k) {
      auto p = gen::fuzzy_program(rng, config, o);
      CompiledProgram cp(p);
      std::vector<ParaInterp> scanned;
      for (const auto& i : eflp::testing::all_interps(cp.universe(), values)) {
        auto least = eflp::testing::scanned_frozen_lfp(cp, i, values);
        if (least && *least == i) scanned.push_back(i);
      }
      std::sort(scanned.begin(), scanned.end());
      EXPECT_EQ(enumerate_stable_models(cp), scanned) << to_text(p);
      EXPECT_EQ(enumerate_stable_models(cp, brute()), scanned) << to_text(p);
    }
  }
}

TEST(Enumerate, NestedWeakNegationFallsBackToBruteForce) {
  CompiledProgram cp(parse_program("#lattice bool. p <- not not q. q <- not r."));
  EXPECT_TRUE(cp.nested_weak_neg());
  EXPECT_EQ(enumerate_stable_models(cp), enumerate_stable_models(cp, brute()));
  EXPECT_EQ(enumerate_stable_models(cp).size(), 1u);
}

TEST(Enumerate, RationalGridAndOffGridModels) {
  // The weight uses the Lukasiewicz implicator, the program default, so
  // flies gets 0.8 & 0.6 = 2/5, which the default grid misses.
  auto p = parse_program(
      "#conj lukasiewicz. bird <- 0.9. penguin <- 0.3. flies <-[0.8] bird & not penguin. -flies <- penguin.");
  CompiledProgram cp(p);
  auto wf = well_founded(cp).value;
  ASSERT_TRUE(wf.exact());
  EXPECT_EQ(wf.lower.at("flies"), (TruthPair{tv("2/5"), tv("3/10")}));
  EXPECT_TRUE(enumerate_stable_models(cp).empty());
  SearchOptions keep;
  keep.restrict_to_grid = false;
  EXPECT_EQ(enumerate_stable_models(cp, keep), std::vector<ParaInterp>{wf.lower});
  auto grid = default_grid(cp);
  grid.push_back(tv("2/5"));
  std::sort(grid.begin(), grid.end());
  EXPECT_EQ(enumerate_stable_models(cp, grid), std::vector<ParaInterp>{wf.lower});
}

TEST(Enumerate, GridValidationAndLimits) {
  CompiledProgram cp(twoneg());
  EXPECT_THROW(enumerate_stable_models(cp, {TruthValue::one()}), ConfigError);
  SearchOptions tiny = brute();
  tiny.max_candidates = 10;
  EXPECT_THROW(enumerate_stable_models(cp, tiny), SearchLimitError);
}

TEST(Enumerate, DefaultGridClosesConstantsUnderNegation) {
  CompiledProgram cp(parse_program("p <- 1/4."));
  EXPECT_EQ(default_grid(cp), (std::vector<TruthValue>{TruthValue::zero(), tv("1/4"), tv("3/4"), TruthValue::one()}));
  CompiledProgram chain(parse_program("#lattice chain(4). p <- 1/3."));
  EXPECT_EQ(default_grid(chain), Lattice::chain(4).carrier());
}

TEST(Enumerate, DeterministicAcrossWorkerCounts) {
  gen::Rng rng(36);
  LatticeConfig config(Lattice::chain(3));
  for (int k = 0; k < 20; ++k) {
    auto p = gen::fuzzy_program(rng, config);
    CompiledProgram cp(p);
    SearchOptions one = brute(), four = brute();
    one.workers = 1;
    four.workers = 4;
    EXPECT_EQ(enumerate_stable_models(cp, one), enumerate_stable_models(cp, four));
  }
}
