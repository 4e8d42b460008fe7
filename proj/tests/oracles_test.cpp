#include "support.hpp"

#include <gtest/gtest.h>

using namespace eflp;
using eflp::testing::interp;
using eflp::testing::tv;

namespace {

Program p1() { return parse_program("#lattice bool. neg q <- not p. p <- p."); }
Program p2() { return parse_program("#lattice bool. neg q <- neg p. p <- p."); }
Program twoneg() { return parse_program("#lattice bool. p <- not q. q <- not p."); }

LiteralSet lits(std::initializer_list<const char*> names) {
  LiteralSet out;
  for (std::string n : names) out.insert(n.front() == '-' ? Literal::neg(n.substr(1)) : Literal::pos(n));
  return out;
}

SaadInterp saad(std::initializer_list<std::pair<const char*, const char*>> items) {
  SaadInterp g;
  for (const auto& [l, v] : items) {
    std::string n = l;
    g.values[n.front() == '-' ? Literal::neg(n.substr(1)) : Literal::pos(n)] = tv(v);
  }
  return g;
}

}  // namespace

TEST(ConjunctiveRules, AcceptsConjunctionsOnly) {
  auto rules = conjunctive_rules(parse_program("#lattice bool. a <- b & not -c & 1. b."));
  ASSERT_EQ(rules.size(), 2u);
  EXPECT_EQ(rules[0].body.positive, lits({"b"}));
  EXPECT_EQ(rules[0].body.negative, lits({"-c"}));
  EXPECT_THROW(conjunctive_rules(parse_program("#lattice bool. a <- b | c.")), OracleError);
  EXPECT_THROW(conjunctive_rules(parse_program("#lattice bool. a <- not not b.")), OracleError);
  EXPECT_THROW(conjunctive_rules(parse_program("a <- b.")), Error);
}

TEST(SakamaT, Examples) {
  EXPECT_EQ(sakama_T(p1(), {}, {}, {}), LiteralSet{});
  EXPECT_EQ(sakama_T(p1(), {}, lits({"p"}), {}), lits({"-q"}));
  auto all = lits({"p", "-p", "q", "-q"});
  EXPECT_EQ(sakama_T(p1(), all, all, all), lits({"p", "-q"}));
}

TEST(SakamaF, Examples) {
  EXPECT_EQ(sakama_F(p1(), {}, {}, lits({"p", "-p", "q", "-q"})), lits({"p", "-p", "q"}));
  EXPECT_EQ(sakama_F(p1(), {}, {}, {}), lits({"-p", "q"}));
  // -p has no rule either, so it joins q and -q.
  EXPECT_EQ(sakama_F(p2(), {}, {}, lits({"-p"})), lits({"q", "-p", "-q"}));
}

TEST(SakamaWf, Examples) {
  auto p = p1();
  auto wf = sakama_wf(p);
  auto fix = well_founded(p).value;
  EXPECT_EQ(wf, zeta2(fix));
  EXPECT_EQ(zeta_inv(wf.proven, fix.lower.universe()), fix.lower);
  Program empty;
  empty.declared_atoms = {"p"};
  empty.config = LatticeConfig(Lattice::boolean());
  EXPECT_EQ(sakama_wf(empty), (SakamaPair{{}, lits({"p", "-p"})}));
  EXPECT_EQ(sakama_wf(twoneg()), (SakamaPair{{}, lits({"-p", "-q"})}));
}

TEST(SakamaWf, AgreesWithWellFoundedOnCorpus) {
  auto report = run_corpus(Check::wf_sakama, 500, 7);
  EXPECT_EQ(report.cases, 500u);
  EXPECT_EQ(report.divergences, 0u) << report.to_json().dump();
}

TEST(SiReduct, DropsBlockedRulesAndNegations) {
  auto p = parse_program("#lattice bool. a <- b & not c. d <- not a. e.");
  auto u = make_universe(p.atoms());
  auto reduct = si_reduct(p, interp(u, {{"a", {"1", "0"}}}));
  ASSERT_EQ(reduct.rules.size(), 2u);
  EXPECT_EQ(conjunctive_rules(reduct)[0].body.positive, lits({"b"}));
  EXPECT_TRUE(conjunctive_rules(reduct)[0].body.negative.empty());
  EXPECT_EQ(reduct.rules[1].head, Literal::pos("e"));
  auto free = parse_program("#lattice bool. a <- b. -b <- a & c.");
  EXPECT_EQ(si_reduct(free, ParaInterp(make_universe(free.atoms()))).rules, free.rules);
}

TEST(SiStableModels, Examples) {
  auto u1 = make_universe({"p", "q"});
  EXPECT_EQ(si_stable_models(p1()), std::vector<ParaInterp>{interp(u1, {{"p", {"0", "0"}}, {"q", {"0", "1"}}})});
  auto models = si_stable_models(twoneg());
  ASSERT_EQ(models.size(), 2u);
  EXPECT_EQ(models, enumerate_stable_models(CompiledProgram(twoneg())));
  auto facts = parse_program("#lattice bool. p. -p.");
  auto up = make_universe({"p"});
  EXPECT_EQ(si_stable_models(facts), std::vector<ParaInterp>{interp(up, {{"p", {"1", "1"}}})});
  EXPECT_TRUE(gl_answer_sets(facts).empty());
}

TEST(GlAnswerSets, ClassicExamples) {
  EXPECT_EQ(gl_answer_sets(twoneg()).size(), 2u);
  EXPECT_TRUE(gl_answer_sets(parse_program("#lattice bool. p <- not p.")).empty());
  auto u = make_universe({"a", "b"});
  EXPECT_EQ(gl_answer_sets(parse_program("#lattice bool. a. -b <- a & not b.")),
            std::vector<ParaInterp>{interp(u, {{"a", {"1", "0"}}, {"b", {"0", "1"}}})});
}

TEST(StableReduct, AgreesOnCorpus) {
  auto report = run_corpus(Check::stable_reduct, 300, 7);
  EXPECT_EQ(report.divergences, 0u) << report.to_json().dump();
}

TEST(SaadOperator, Examples) {
  auto q = parse_saad("p:1 <- not q:0.");
  EXPECT_EQ(saad_operator(q, {}), saad({{"p", "1"}}));
  EXPECT_EQ(saad_operator(q, saad({{"q", "0"}})), SaadInterp{});
  EXPECT_EQ(saad_operator(SaadProgram{}, saad({{"q", "0"}})), SaadInterp{});
  // Several rules for one literal: the largest firing head bound wins.
  auto r = parse_saad("p:1/2. p:1 <- q:1/2. q:1.");
  EXPECT_EQ(saad_operator(r, saad({{"q", "1"}})), saad({{"p", "1"}, {"q", "1"}}));
}

TEST(SaadOperator, MonotoneOnReducts) {
  // Along the iteration of a reduct, domains and values only grow.
  gen::Rng rng(41);
  for (int k = 0; k < 300; ++k) {
    auto q = gen::saad_program(rng);
    SaadInterp g;
    for (const auto& r : q.rules)
      if (gen::coin(rng)) g.values[r.head.lit] = r.head.bound;
    auto reduct = saad_reduct(q, g);
    SaadInterp cur;
    for (int step = 0; step < 20; ++step) {
      auto next = saad_operator(reduct, cur);
      for (const auto& [l, v] : cur.values) {
        ASSERT_TRUE(next.defined(l)) << to_text(q);
        EXPECT_GE(next.values.at(l), v);
      }
      if (next == cur) break;
      cur = next;
    }
  }
}

TEST(SaadStableModels, Examples) {
  auto models = saad_stable_models(parse_saad("p:1 <- not q:0."));
  ASSERT_EQ(models.size(), 1u);
  EXPECT_EQ(models[0].interp, saad({{"p", "1"}}));
  EXPECT_FALSE(models[0].inconsistent);
  EXPECT_TRUE(saad_stable_models(parse_saad("p:1 <- not p:0.")).empty());
  auto empty = saad_stable_models(SaadProgram{});
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_TRUE(empty[0].interp.values.empty());
}

TEST(SaadStableModels, InconsistencyIsReportedNotReplaced) {
  auto q = parse_saad("p:1. -p:1.");
  auto models = saad_stable_models(q);
  ASSERT_EQ(models.size(), 1u);
  EXPECT_TRUE(models[0].inconsistent);
  EXPECT_EQ(models[0].interp, saad({{"p", "1"}, {"-p", "1"}}));
  SaadOptions replace;
  replace.replace_inconsistent = true;
  auto replaced = saad_stable_models(q, replace);
  ASSERT_EQ(replaced.size(), 1u);
  EXPECT_TRUE(replaced[0].inconsistent);
  EXPECT_EQ(replaced[0].interp, saad({{"p", "1"}, {"-p", "1"}}));
  EXPECT_FALSE(saad_inconsistent(saad({{"p", "1/4"}, {"-p", "3/4"}})));
}

TEST(CornejoBodyReduct, Examples) {
  LatticeConfig config;
  auto u = make_universe({"p", "q"});
  NonParaInterp k(u);
  k.at("q") = tv("0.3");
  auto body = Formula::apply("godel", {Formula::atom("p"), Formula::weak_neg(Formula::atom("q"))});
  EXPECT_EQ(cornejo_body_reduct(body, k, config),
            Formula::apply("godel", {Formula::atom("p"), Formula::constant(tv("0.7"))}));
  EXPECT_EQ(cornejo_body_reduct(Formula::atom("p"), k, config), Formula::atom("p"));
  k.at("q") = TruthValue::one();
  EXPECT_EQ(cornejo_body_reduct(Formula::weak_neg(Formula::atom("q")), k, config), Formula::constant(TruthValue::zero()));
}

TEST(CornejoStableModels, Examples) {
  auto q = parse_cornejo("#lattice bool. p <- not q.");
  auto models = cornejo_stable_models(q);
  ASSERT_EQ(models.size(), 1u);
  EXPECT_EQ(models[0].at("p"), TruthValue::one());
  EXPECT_EQ(models[0].at("q"), TruthValue::zero());
  EXPECT_TRUE(cornejo_stable_models(parse_cornejo("#lattice bool. p <- not q. 0 <- p.")).empty());
  CornejoProgram empty;
  empty.declared_atoms = {"p"};
  empty.config = LatticeConfig(Lattice::boolean());
  auto e = cornejo_stable_models(empty);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].at("p"), TruthValue::zero());
}

TEST(CornejoStableModels, ConstraintFiltersOnChain) {
  auto q = parse_cornejo("#lattice chain(5). #conj lukasiewicz. cost <- not cheap. cheap <- not cost. 1/2 <- cost.");
  auto free = parse_cornejo("#lattice chain(5). #conj lukasiewicz. cost <- not cheap. cheap <- not cost.");
  auto all = cornejo_stable_models(free);
  auto kept = cornejo_stable_models(q);
  std::vector<NonParaInterp> expected;
  for (const auto& k : all)
    if (k.at("cost") <= tv("1/2")) expected.push_back(k);
  EXPECT_EQ(kept, expected);
  EXPECT_EQ(all.size(), 5u);
  EXPECT_EQ(kept.size(), 3u);
}
