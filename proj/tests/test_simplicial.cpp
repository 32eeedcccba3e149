#include <catch2/catch_amalgamated.hpp>

#include "tgmod/corpus.hpp"
#include "tgmod/moore.hpp"
#include "tgmod/simplicial.hpp"

using namespace tgmod;

namespace {

/// 1-truncated object with X_1 = MB1 x MB1, d_0/d_1 the projections, s_0 the
/// diagonal.
SModulePtr pair_object() {
  auto corpus = build_corpus();
  auto mb1 = corpus.module("MB1");
  auto prod = product_module(mb1, mb1);
  auto x = std::make_shared<SimplicialModule>();
  x->name = "pairobj";
  x->trunc = 1;
  x->levels = {mb1, prod.module};
  x->faces.resize(2);
  x->degens.resize(2);
  x->faces[1] = {prod.proj0, prod.proj1};
  ModuleMorphism diag;
  diag.source = mb1;
  diag.target = prod.module;
  diag.table = {0, 3};
  x->degens[0] = {diag};
  return x;
}

}  // namespace

TEST_CASE("constant objects pass check_simplicial; corrupted face fails") {
  auto corpus = build_corpus();
  auto x = constant_object(corpus.module("MB1"), 3);
  REQUIRE(check_simplicial(*x).passed());

  auto pt = point_object(corpus.semiring("B1"), 3);
  REQUIRE(check_simplicial(*pt).passed());

  auto bad = std::make_shared<SimplicialModule>(*x);
  bad->faces[1][0] = zero_morphism(bad->levels[1], bad->levels[0]);
  auto rep = check_simplicial(*bad);
  REQUIRE_FALSE(rep.passed());
  REQUIRE(rep.first_failure() != nullptr);
}

TEST_CASE("pair object is simplicial") {
  REQUIRE(check_simplicial(*pair_object()).passed());
}

TEST_CASE("moore complex of a constant object") {
  auto corpus = build_corpus();
  auto x = constant_object(corpus.module("MB1"), 3);
  auto mc = moore_complex(x);
  REQUIRE(mc.terms[0].module->size() == 2);
  for (std::size_t n = 1; n <= 3; ++n) REQUIRE(mc.terms[n].module->size() == 1);

  auto pt = point_object(corpus.semiring("B1"), 3);
  auto mz = moore_complex(pt);
  for (std::size_t n = 0; n <= 3; ++n) REQUIRE(mz.terms[n].module->size() == 1);
}

TEST_CASE("moore complex refuses non-strict mode") {
  auto corpus = build_corpus();
  auto x = constant_object(corpus.module("MB1"), 2);
  WorkbenchConfig cfg;
  cfg.strict_zero = false;
  REQUIRE_THROWS_AS(moore_complex(x, cfg), StructuralError);
}

TEST_CASE("moore complex of the pair object: N_1 is the first-factor copy") {
  auto x = pair_object();
  auto mc = moore_complex(x);
  REQUIRE(mc.terms[1].module->size() == 2);
  // fiber computation: kernel of d_1 = proj1 is {(0,0), (1,0)} = indices 0, 2
  REQUIRE(mc.terms[1].elements == std::vector<Elem>{0, 2});
  REQUIRE(find_module_isomorphism(*mc.terms[1].module, *x->levels[0]).has_value());
}

TEST_CASE("homology of constant objects: H_0 = M, higher degrees vanish") {
  auto corpus = build_corpus();
  for (const auto& name : {"ZB1", "MB1", "PB1", "QB1", "SB1", "MZ3", "PZ3"}) {
    auto m = corpus.module(name);
    auto x = constant_object(m, 3);
    auto h0 = homology(x, 0);
    REQUIRE(h0.reliable);
    REQUIRE(h0.result->size() == m->size());
    REQUIRE(h0.result->carrier.add_table == m->carrier.add_table);
    for (std::size_t n = 1; n <= 2; ++n) {
      auto hn = homology(x, n);
      REQUIRE(hn.reliable);
      REQUIRE(hn.result->size() == 1);
    }
  }
}

TEST_CASE("homology degree at the truncation edge is flagged unreliable") {
  auto corpus = build_corpus();
  auto x = constant_object(corpus.module("MB1"), 3);
  auto h3 = homology(x, 3);
  REQUIRE_FALSE(h3.reliable);
  REQUIRE_THROWS_AS(homology(x, 4), StructuralError);
}

TEST_CASE("homology of the pair object in degree 0 vanishes (congruence oracle)") {
  auto x = pair_object();
  auto h0 = homology(x, 0);
  // edges (a, b) relate every pair of vertices; brute-force quotient is a point
  REQUIRE(h0.result->size() == 1);
}

TEST_CASE("homology results pass check_module") {
  auto corpus = build_corpus();
  auto x = constant_object(corpus.module("MZ3"), 3);
  for (std::size_t n = 0; n <= 2; ++n)
    REQUIRE(check_module(*homology(x, n).result).passed());
}

TEST_CASE("weak equivalences: identity yes, collapse-to-point no") {
  auto corpus = build_corpus();
  auto x = constant_object(corpus.module("MB1"), 3);
  REQUIRE(is_weak_equivalence(identity_smorphism(x)).is_weak_equivalence);

  auto pt = point_object(corpus.semiring("B1"), 3);
  auto collapse = zero_smorphism(x, pt);
  REQUIRE_FALSE(is_weak_equivalence(collapse).is_weak_equivalence);
}

TEST_CASE("two-out-of-three on composable constant morphisms") {
  auto corpus = build_corpus();
  auto mz3 = corpus.module("MZ3");
  auto f = constant_smorphism(corpus.morphism("dblMZ3"), 3);
  SimplicialMorphism g;
  g.source = f.target;
  g.target = f.target;
  g.levels.assign(4, corpus.morphism("dblMZ3"));
  auto gf = compose(g, f);
  bool wf = is_weak_equivalence(f).is_weak_equivalence;
  bool wg = is_weak_equivalence(g).is_weak_equivalence;
  bool wgf = is_weak_equivalence(gf).is_weak_equivalence;
  REQUIRE(wf);
  REQUIRE(wg);
  REQUIRE(wgf);  // two-out-of-three holds trivially here; all three computed
}

TEST_CASE("non-simplicial map is rejected by weq") {
  auto corpus = build_corpus();
  auto x = constant_object(corpus.module("MB1"), 2);
  SimplicialMorphism bad;
  bad.source = bad.target = x;
  bad.levels.assign(3, identity_morphism(corpus.module("MB1")));
  bad.levels[1] = zero_morphism(corpus.module("MB1"), corpus.module("MB1"));
  REQUIRE_THROWS_AS(is_weak_equivalence(bad), StructuralError);
}

TEST_CASE("constant objects are fibrant; identities are fibrations") {
  auto corpus = build_corpus();
  for (const auto& name : {"MB1", "MZ3", "PB1"}) {
    auto x = constant_object(corpus.module(name), 3);
    REQUIRE(is_fibrant(x));
    REQUIRE(is_fibration(identity_smorphism(x)).is_fibration);
  }
}

TEST_CASE("inclusion of the point into a constant object is a fibration") {
  auto corpus = build_corpus();
  auto x = constant_object(corpus.module("MB1"), 3);
  auto pt = point_object(corpus.semiring("B1"), 3);
  SimplicialMorphism inc = zero_smorphism(pt, x);
  auto rep = is_fibration(inc);
  REQUIRE(rep.is_fibration);
  REQUIRE(rep.problems > 0);
}

TEST_CASE("tensoring with Delta[0] is the identity construction") {
  auto corpus = build_corpus();
  auto x = constant_object(corpus.module("MB1"), 3);
  auto d = tensor_with_simplicial_set(x, sset_delta0(3));
  for (std::size_t n = 0; n <= 3; ++n) {
    REQUIRE(d.object->levels[n]->size() == x->levels[n]->size());
    REQUIRE(d.object->levels[n]->carrier.add_table == x->levels[n]->carrier.add_table);
  }
  REQUIRE(check_simplicial(*d.object).passed());
}

TEST_CASE("tensoring with a two-point discrete set doubles levelwise") {
  auto corpus = build_corpus();
  auto x = constant_object(corpus.module("MB1"), 2);
  auto d = tensor_with_simplicial_set(x, sset_discrete(2, 2));
  for (std::size_t n = 0; n <= 2; ++n)
    REQUIRE(d.object->levels[n]->size() == x->levels[n]->size() * x->levels[n]->size());
  REQUIRE(check_simplicial(*d.object).passed());
}

TEST_CASE("prism levels count |X_n|^(n+2)") {
  auto corpus = build_corpus();
  auto x = constant_object(corpus.module("MB1"), 3);
  auto d = tensor_with_simplicial_set(x, sset_delta1(3));
  for (std::size_t n = 0; n <= 3; ++n) {
    // |Delta[1]_n| = n + 2
    REQUIRE(d.sset.level_sizes[n] == n + 2);
    std::size_t want = 1;
    for (std::size_t c = 0; c < n + 2; ++c) want *= 2;
    REQUIRE(d.object->levels[n]->size() == want);
  }
  REQUIRE(check_simplicial(*d.object).passed());
}

TEST_CASE("prism end inclusions and fold") {
  auto corpus = build_corpus();
  auto x = constant_object(corpus.module("MB1"), 2);
  auto d = tensor_with_simplicial_set(x, sset_delta1(2));
  // Delta[1] vertices: 0 is the all-zeros map, 1 the all-ones map
  auto i0 = vertex_inclusion(x, d, 0);
  auto i1 = vertex_inclusion(x, d, 1);
  REQUIRE(check_simplicial_morphism(i0).passed());
  REQUIRE(check_simplicial_morphism(i1).passed());
  auto fold = fold_morphism(x, d);
  REQUIRE(check_simplicial_morphism(fold).passed());
  for (std::size_t n = 0; n <= 2; ++n) {
    REQUIRE(compose(fold.levels[n], i0.levels[n]).table ==
            identity_morphism(x->levels[n]).table);
    REQUIRE(compose(fold.levels[n], i1.levels[n]).table ==
            identity_morphism(x->levels[n]).table);
  }
}

TEST_CASE("levelwise quotient keeps the simplicial identities") {
  auto corpus = build_corpus();
  auto x = constant_object(corpus.module("MB1"), 2);
  auto d = tensor_with_simplicial_set(x, sset_delta1(2));
  auto i1 = vertex_inclusion(x, d, 1);
  std::vector<Congruence> cs;
  for (std::size_t n = 0; n <= 2; ++n) {
    std::vector<std::pair<Elem, Elem>> pairs;
    for (Elem v = 0; v < x->levels[n]->size(); ++v)
      pairs.emplace_back(i1.levels[n].table[v], d.object->levels[n]->zero());
    cs.push_back(congruence_closure(d.object->levels[n], pairs));
  }
  auto q = simplicial_quotient(d.object, cs, "cone-smoke");
  REQUIRE(check_simplicial(*q.object).passed());
  REQUIRE(check_simplicial_morphism(q.projection).passed());
}
