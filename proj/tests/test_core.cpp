#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "tgmod/corpus.hpp"
#include "tgmod/core.hpp"
#include "tgmod/enumerate.hpp"

using namespace tgmod;

TEST_CASE("one-element monoid passes") {
  FiniteCommutativeMonoid m;
  m.size = 1;
  m.zero = 0;
  m.add_table = {0};
  REQUIRE(check_monoid(m).passed());
}

TEST_CASE("boolean OR monoid passes (exhaustive scan of 8 triples)") {
  FiniteCommutativeMonoid m;
  m.size = 2;
  m.zero = 0;
  m.add_table = {0, 1, 1, 1};
  REQUIRE(check_monoid(m).passed());
}

TEST_CASE("asymmetric table fails commutativity with witness (0,1)") {
  FiniteCommutativeMonoid m;
  m.size = 2;
  m.zero = 0;
  m.add_table = {0, 0, 1, 1};  // add(0,1)=0, add(1,0)=1
  auto rep = check_monoid(m);
  REQUIRE_FALSE(rep.passed());
  auto* c = rep.find("add-commutativity");
  REQUIRE(c);
  REQUIRE_FALSE(c->passed);
  REQUIRE(c->witness == std::vector<std::size_t>{0, 1});
  REQUIRE(replay_monoid_witness(m, c->name, c->witness));
}

TEST_CASE("malformed table is a structural error, not an axiom failure") {
  FiniteCommutativeMonoid m;
  m.size = 2;
  m.zero = 0;
  m.add_table = {0, 1, 1, 5};  // out of range
  REQUIRE_THROWS_AS(check_monoid(m), StructuralError);
}

TEST_CASE("B1 and TRIV pass check_semiring; Z3 passes") {
  REQUIRE(check_semiring(*b1_semiring()).passed());
  REQUIRE(check_semiring(*triv_semiring()).passed());
  REQUIRE(check_semiring(*z3_semiring()).passed());
  REQUIRE(check_semiring(*b1g2_semiring()).passed());
}

TEST_CASE("MUT1 fails with the mutated entry implicated") {
  auto s = mut1_semiring();
  auto rep = check_semiring(*s, true);
  REQUIRE_FALSE(rep.passed());
  auto* gc = rep.find("gamma-commutativity");
  REQUIRE(gc);
  REQUIRE_FALSE(gc->passed);
  // first violating tuple in lex order is the mirror (0,g,0,g,1)
  REQUIRE(gc->witness == std::vector<std::size_t>{0, 0, 0, 0, 1});
  REQUIRE(replay_semiring_witness(*s, gc->name, gc->witness));
  // strict mode pins the exact mutated tuple (1,g,0,g,0) via zero absorption
  auto* za = rep.find("zero-absorption");
  REQUIRE(za);
  REQUIRE_FALSE(za->passed);
  REQUIRE(za->witness == std::vector<std::size_t>{1, 0, 0, 0, 0});
  REQUIRE(replay_semiring_witness(*s, za->name, za->witness));
}

TEST_CASE("every failing check replays against the tables") {
  auto s = mut1_semiring();
  auto rep = check_semiring(*s, true);
  for (const auto& c : rep.checks)
    if (!c.passed) REQUIRE(replay_semiring_witness(*s, c.name, c.witness));
}

TEST_CASE("MB1 passes check_module; zero module passes") {
  auto rep = check_module(*mb1_module());
  REQUIRE(rep.passed());
  REQUIRE(check_module(*zero_module(b1_semiring(), "Z")).passed());
  REQUIRE(check_module(*mz3_module()).passed());
}

TEST_CASE("module check refuses an unvalidated semiring") {
  auto bad = mut1_semiring();
  TernaryGammaModule m;
  m.name = "over-bad";
  m.semiring = bad;
  m.carrier.size = 1;
  m.carrier.zero = 0;
  m.carrier.add_table = {0};
  m.action_table.assign(4, 0);
  REQUIRE_THROWS_AS(check_module(m), StructuralError);
}

TEST_CASE("mutated action entry fails zero-absorption under strict mode") {
  auto m = mutm1_module();
  auto rep = check_module(*m, true);
  REQUIRE_FALSE(rep.passed());
  auto* za = rep.find("action-zero-absorption");
  REQUIRE(za);
  REQUIRE_FALSE(za->passed);
  REQUIRE(replay_module_witness(*m, za->name, za->witness));
}

TEST_CASE("morphism checks: identity, zero, swap") {
  auto mb1 = mb1_module();
  REQUIRE(check_morphism(identity_morphism(mb1)).passed());
  REQUIRE(check_morphism(zero_morphism(mb1, mb1)).passed());
  ModuleMorphism swap;
  swap.source = swap.target = mb1;
  swap.table = {1, 0};
  auto rep = check_morphism(swap);
  REQUIRE_FALSE(rep.passed());
  // first violated instance: f(0) should be 0
  auto* z = rep.find("morphism-zero");
  REQUIRE(z);
  REQUIRE_FALSE(z->passed);
  auto* add = rep.find("morphism-additive");
  REQUIRE(add);
  REQUIRE_FALSE(add->passed);
  REQUIRE(add->witness == std::vector<std::size_t>{0, 1});
  REQUIRE(replay_morphism_witness(swap, add->name, add->witness));
}

TEST_CASE("enumerate_morphisms matches the brute-force oracle") {
  auto mb1 = mb1_module();
  auto zb1 = zero_module(b1_semiring(), "Z");
  WorkbenchConfig cfg;

  auto got = enumerate_morphisms(mb1, mb1, cfg);
  auto want = oracle::all_morphism_tables(*mb1, *mb1);
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) REQUIRE(got[i].table == want[i]);
  // identity and constant-zero are both members
  bool has_id = false, has_zero = false;
  for (const auto& f : got) {
    if (f.table == std::vector<Elem>{0, 1}) has_id = true;
    if (f.table == std::vector<Elem>{0, 0}) has_zero = true;
  }
  REQUIRE(has_id);
  REQUIRE(has_zero);

  REQUIRE(enumerate_morphisms(zb1, mb1, cfg).size() == 1);
  REQUIRE(enumerate_morphisms(mb1, zb1, cfg).size() == 1);
}

TEST_CASE("enumerate_morphisms respects the |N|^|M| bound") {
  auto mz3 = mz3_module();
  WorkbenchConfig cfg;
  cfg.search_budget = 8;  // 3^3 = 27 > 8
  REQUIRE_THROWS_AS(enumerate_morphisms(mz3, mz3, cfg), BudgetError);
}

TEST_CASE("product_module: componentwise tables, projections are morphisms") {
  auto mb1 = mb1_module();
  auto zb1 = zero_module(b1_semiring(), "Z");
  auto prod = product_module(mb1, mb1);
  REQUIRE(prod.module->size() == 4);
  REQUIRE(check_module(*prod.module).passed());
  REQUIRE(check_morphism(prod.proj0).passed());
  REQUIRE(check_morphism(prod.proj1).passed());

  auto pz = product_module(zb1, mb1);
  REQUIRE(find_module_isomorphism(*pz.module, *mb1).has_value());
}

TEST_CASE("product universal property, exhaustively at corpus sizes") {
  auto mb1 = mb1_module();
  auto prod = product_module(mb1, mb1);
  WorkbenchConfig cfg;
  auto fs = enumerate_morphisms(mb1, mb1, cfg);
  auto hs = enumerate_morphisms(mb1, prod.module, cfg);
  for (const auto& f : fs)
    for (const auto& g : fs) {
      std::size_t hits = 0;
      for (const auto& h : hs)
        if (compose(prod.proj0, h).table == f.table &&
            compose(prod.proj1, h).table == g.table)
          ++hits;
      REQUIRE(hits == 1);
      REQUIRE(compose(prod.proj0, pair_morphism(f, g, prod)).table == f.table);
    }
}

TEST_CASE("submodule_generated: empty seed, full seed, product seed") {
  auto mb1 = mb1_module();
  auto s0 = submodule_generated(mb1, {});
  REQUIRE(s0.module->size() == 1);
  auto s1 = submodule_generated(mb1, {1});
  REQUIRE(s1.module->size() == 2);
  REQUIRE(check_morphism(s1.inclusion).passed());

  auto prod = product_module(mb1, mb1);
  auto sp = submodule_generated(prod.module, {2});  // (1,0)
  auto want = oracle::naive_closure(*prod.module, {2});
  REQUIRE(sp.elements == want);
  REQUIRE(check_module(*sp.module).passed());
  REQUIRE(check_morphism(sp.inclusion).passed());
}

TEST_CASE("enumerate_semirings exhaustive: sizes, membership, pairwise non-iso") {
  WorkbenchConfig cfg;
  auto one = enumerate_semirings(1, 1, EnumerationMode::Exhaustive, cfg);
  REQUIRE(one.size() == 1);

  auto two = enumerate_semirings(2, 1, EnumerationMode::Exhaustive, cfg);
  REQUIRE(!two.empty());
  for (const auto& s : two) REQUIRE(check_semiring(s, cfg.strict_zero).passed());
  bool has_b1 = false;
  for (const auto& s : two)
    if (semirings_isomorphic(s, *b1_semiring())) has_b1 = true;
  REQUIRE(has_b1);
  for (std::size_t i = 0; i < two.size(); ++i)
    for (std::size_t j = i + 1; j < two.size(); ++j)
      REQUIRE_FALSE(semirings_isomorphic(two[i], two[j]));

  REQUIRE_THROWS_AS(enumerate_semirings(3, 1, EnumerationMode::Exhaustive, cfg),
                    BudgetError);
}

TEST_CASE("enumerate_semirings sampled emits valid instances deterministically") {
  WorkbenchConfig cfg;
  cfg.seed = 42;
  auto a = enumerate_semirings(3, 1, EnumerationMode::Sampled, cfg, 3);
  auto b = enumerate_semirings(3, 1, EnumerationMode::Sampled, cfg, 3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].ternary_table == b[i].ternary_table);
    REQUIRE(check_semiring(a[i], cfg.strict_zero).passed());
  }
}

TEST_CASE("checker invariance under carrier relabeling") {
  auto mb1 = mb1_module();
  auto prod = product_module(mb1, mb1);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Elem> phi(prod.module->size());
    std::iota(phi.begin(), phi.end(), 0);
    std::shuffle(phi.begin(), phi.end(), rng);
    auto relabeled = relabel_module(*prod.module, phi);
    auto a = check_module(*prod.module);
    auto b = check_module(relabeled);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i)
      REQUIRE(a.checks[i].passed == b.checks[i].passed);
  }
}

TEST_CASE("single-worker and multi-worker reports are identical") {
  auto s = mut1_semiring();
  auto one = check_semiring(*s, true, 1);
  auto four = check_semiring(*s, true, 4);
  REQUIRE(one.checks.size() == four.checks.size());
  for (std::size_t i = 0; i < one.checks.size(); ++i) {
    REQUIRE(one.checks[i].name == four.checks[i].name);
    REQUIRE(one.checks[i].passed == four.checks[i].passed);
    REQUIRE(one.checks[i].witness == four.checks[i].witness);
  }
  auto m = mutm1_module();
  auto mone = check_module(*m, true, 1);
  auto mfour = check_module(*m, true, 3);
  for (std::size_t i = 0; i < mone.checks.size(); ++i) {
    REQUIRE(mone.checks[i].passed == mfour.checks[i].passed);
    REQUIRE(mone.checks[i].witness == mfour.checks[i].witness);
  }
}

TEST_CASE("round-trip property: enumerated instances all pass their checker") {
  WorkbenchConfig cfg;
  for (const auto& s : enumerate_semirings(2, 1, EnumerationMode::Exhaustive, cfg))
    REQUIRE(check_semiring(s, cfg.strict_zero).passed());
  auto b1 = b1_semiring();
  for (const auto& m : enumerate_modules(b1, 2, cfg))
    REQUIRE(check_module(*m, cfg.strict_zero).passed());
}

TEST_CASE("corpus sanity") {
  auto corpus = build_corpus();
  REQUIRE(check_semiring(*corpus.semiring("B1")).passed());
  REQUIRE(check_semiring(*corpus.semiring("Z3")).passed());
  REQUIRE_FALSE(check_semiring(*corpus.semiring("MUT1")).passed());
  REQUIRE(check_module(*corpus.module("PB1")).passed());
  REQUIRE(check_module(*corpus.module("QB1")).passed());
  REQUIRE(check_module(*corpus.module("SB1")).passed());
  REQUIRE(check_module(*corpus.module("PZ3")).passed());
  REQUIRE(check_morphism(corpus.morphism("diagMB1")).passed());
  REQUIRE(check_morphism(corpus.morphism("diagMZ3")).passed());
  REQUIRE(check_morphism(corpus.morphism("dblMZ3")).passed());
  REQUIRE_FALSE(check_morphism(corpus.morphism("swapMB1")).passed());
}
