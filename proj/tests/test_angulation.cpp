#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "oracle_homology.hpp"
#include "tgmod/angulation.hpp"
#include "tgmod/corpus.hpp"

using namespace tgmod;

namespace {

WorkbenchConfig angle_cfg() {
  WorkbenchConfig cfg;
  cfg.element_budget = 65536;
  cfg.search_budget = 200000;
  return cfg;
}

}  // namespace

TEST_CASE("cone of the point is the point") {
  auto corpus = build_corpus();
  auto pt = point_object(corpus.semiring("B1"), 3);
  auto c = cone(pt);
  for (std::size_t n = 0; n <= 3; ++n) REQUIRE(c.object->levels[n]->size() == 1);
  REQUIRE(c.contraction.passed);
}

TEST_CASE("cone homology vanishes in all reliable degrees (quotient oracle)") {
  auto corpus = build_corpus();
  WorkbenchConfig cfg = angle_cfg();
  for (const auto& name : {"MB1", "MZ3"}) {
    auto x = constant_object(corpus.module(name), 3);
    auto c = cone(x, cfg);
    REQUIRE(check_simplicial(*c.object).passed());
    REQUIRE(check_simplicial_morphism(c.inclusion).passed());
    for (std::size_t n = 0; n + 1 <= 3; ++n) {
      auto h = homology(c.object, n, cfg);
      INFO(std::string(name) + " degree " + std::to_string(n));
      REQUIRE(h.result->size() == 1);
    }
    REQUIRE(c.contraction.passed);
  }
}

TEST_CASE("cone contraction certificate records its tier") {
  auto corpus = build_corpus();
  WorkbenchConfig cfg = angle_cfg();
  auto c = cone(constant_object(corpus.module("MB1"), 2), cfg);
  REQUIRE(c.contraction.passed);
  REQUIRE((c.contraction.tier == CheckTier::Strong ||
           c.contraction.tier == CheckTier::Weak));
}

TEST_CASE("suspension: zero stays zero, levels carry valid modules") {
  auto corpus = build_corpus();
  auto pt = point_object(corpus.semiring("Z3"), 3);
  auto s0 = suspension(pt);
  for (std::size_t n = 0; n <= 3; ++n) REQUIRE(s0.object->levels[n]->size() == 1);

  auto sx = suspension(constant_object(corpus.module("MZ3"), 3));
  REQUIRE(check_simplicial(*sx.object).passed());
  for (std::size_t n = 0; n <= 3; ++n)
    REQUIRE(check_module(*sx.object->levels[n]).passed());
}

TEST_CASE("suspension shifts homology on group-complete instances") {
  auto corpus = build_corpus();
  WorkbenchConfig cfg = angle_cfg();
  auto x = constant_object(corpus.module("MZ3"), 3);
  auto sx = suspension(x, cfg);
  // H_{n+1}(SX) vs H_n(X), via the independent abelian oracle on both sides
  for (std::size_t n = 0; n + 2 <= 3; ++n) {
    auto impl = homology(sx.object, n + 1, cfg);
    auto orac = oracle::abelian_homology(*sx.object, n + 1);
    REQUIRE(impl.result->size() == orac.cardinality);
    auto base = homology(x, n, cfg);
    REQUIRE(impl.result->size() == base.result->size());
  }
}

TEST_CASE("mapping cone of an identity is homology-trivial in degrees 0..2") {
  auto corpus = build_corpus();
  WorkbenchConfig cfg = angle_cfg();
  for (const auto& name : {"MB1", "MZ3", "PB1"}) {
    auto x = constant_object(corpus.module(name), 3);
    auto mc = mapping_cone(identity_smorphism(x), cfg);
    REQUIRE(check_simplicial(*mc.object).passed());
    for (std::size_t n = 0; n <= 2; ++n) {
      INFO(std::string(name) + " degree " + std::to_string(n));
      REQUIRE(homology(mc.object, n, cfg).result->size() == 1);
    }
  }
}

TEST_CASE("mapping cone along the zero-module inclusion is the target") {
  auto corpus = build_corpus();
  WorkbenchConfig cfg = angle_cfg();
  auto zb1 = constant_object(corpus.module("ZB1"), 3);
  auto y = constant_object(corpus.module("MB1"), 3);
  auto inc = zero_smorphism(zb1, y);
  auto mc = mapping_cone(inc, cfg);
  for (std::size_t n = 0; n <= 3; ++n)
    REQUIRE(find_module_isomorphism(*mc.object->levels[n], *y->levels[n]).has_value());
}

TEST_CASE("mapping cone into the point matches the suspension") {
  auto corpus = build_corpus();
  WorkbenchConfig cfg = angle_cfg();
  auto x = constant_object(corpus.module("MB1"), 2);
  auto pt = point_object(corpus.semiring("B1"), 2);
  auto mc = mapping_cone(zero_smorphism(x, pt), cfg);
  auto sx = suspension(x, cfg);
  for (std::size_t n = 0; n <= 2; ++n)
    REQUIRE(find_module_isomorphism(*mc.object->levels[n],
                                    *sx.object->levels[n]).has_value());
}

TEST_CASE("identity angle: certificates pass with vanishing cones") {
  auto corpus = build_corpus();
  WorkbenchConfig cfg = angle_cfg();
  auto x = constant_object(corpus.module("MB1"), 3);
  auto a = build_3_angle(identity_smorphism(x), cfg);
  REQUIRE(a.certified);
  for (std::size_t n = 0; n <= 2; ++n)
    REQUIRE(homology(a.Z, n, cfg).result->size() == 1);
}

TEST_CASE("zero-source angle: Z is the target up to iso") {
  auto corpus = build_corpus();
  WorkbenchConfig cfg = angle_cfg();
  auto zb1 = constant_object(corpus.module("ZB1"), 3);
  auto y = constant_object(corpus.module("MB1"), 3);
  auto a = build_3_angle(zero_smorphism(zb1, y), cfg);
  REQUIRE(a.certified);
  for (std::size_t n = 0; n <= 3; ++n)
    REQUIRE(find_module_isomorphism(*a.Z->levels[n], *y->levels[n]).has_value());
}

TEST_CASE("diagonal angle over B1: full certification run") {
  auto corpus = build_corpus();
  WorkbenchConfig cfg = angle_cfg();
  auto diag = constant_smorphism(corpus.morphism("diagMB1"), 3);
  auto a = build_3_angle(diag, cfg);
  REQUIRE(a.certified);
}

TEST_CASE("corpus angles: consecutive composites vanish on homology") {
  auto corpus = build_corpus();
  WorkbenchConfig cfg = angle_cfg();
  auto zb1 = constant_object(corpus.module("ZB1"), 3);
  auto mb1 = constant_object(corpus.module("MB1"), 3);
  std::vector<SimplicialMorphism> seeds = {
      constant_smorphism(corpus.morphism("idMB1"), 3),
      constant_smorphism(corpus.morphism("dblMZ3"), 3),
      constant_smorphism(corpus.morphism("diagMB1"), 3),
      zero_smorphism(zb1, mb1)};
  for (const auto& f : seeds) {
    auto a = build_3_angle(f, cfg);
    INFO(a.Z->name);
    REQUIRE(a.certified);
    for (const auto& c : a.certificates) REQUIRE(c.passed);
  }
}

TEST_CASE("zero-endomorphism angles: triples vanish, the Puppe pair does not") {
  // with Z = C_f and W = C_g, the composite w o h is the classical
  // connecting map; for a zero endomorphism its homology image is the
  // suspension content, so the pair certificate genuinely fails while all
  // triple certificates hold. The angle is still returned, failures marked.
  auto corpus = build_corpus();
  WorkbenchConfig cfg = angle_cfg();
  for (const char* name : {"zeroMB1", "zeroMZ3"}) {
    auto a = build_3_angle(constant_smorphism(corpus.morphism(name), 3), cfg);
    INFO(name);
    REQUIRE_FALSE(a.certified);
    for (const auto& c : a.certificates) {
      if (c.name == "pair-wh")
        REQUIRE_FALSE(c.passed);
      else
        REQUIRE(c.passed);
    }
  }
}

TEST_CASE("rotation re-certifies and preserves certificate statuses") {
  auto corpus = build_corpus();
  WorkbenchConfig cfg = angle_cfg();
  auto x = constant_object(corpus.module("MB1"), 3);
  auto ia = build_3_angle(identity_smorphism(x), cfg);
  auto ir = rotate(ia, cfg);
  REQUIRE(ir.certified);
  // group-complete side: rotate the zero-source angle
  auto zz3 = constant_object(corpus.module("ZZ3"), 3);
  auto mz3 = constant_object(corpus.module("MZ3"), 3);
  auto za = build_3_angle(zero_smorphism(zz3, mz3), cfg);
  REQUIRE(za.certified);
  auto zr = rotate(za, cfg);
  REQUIRE(zr.certified);
}

TEST_CASE("rotation surfaces the Puppe obstruction at the appended pair") {
  // rotating an iso-seeded angle makes (-Sf) o w the new third pair; its
  // homology image is the suspension content of W, so the certificate
  // honestly fails while every other certificate still passes
  auto corpus = build_corpus();
  WorkbenchConfig cfg = angle_cfg();
  auto d = build_3_angle(constant_smorphism(corpus.morphism("dblMZ3"), 3), cfg);
  REQUIRE(d.certified);
  auto dr = rotate(d, cfg);
  REQUIRE_FALSE(dr.certified);
  for (const auto& c : dr.certificates) {
    if (c.name == "pair-wh")
      REQUIRE_FALSE(c.passed);
    else
      REQUIRE(c.passed);
  }
}

TEST_CASE("rotation uses the genuine negative exactly when group-complete") {
  auto corpus = build_corpus();
  WorkbenchConfig cfg = angle_cfg();
  auto az = build_3_angle(constant_smorphism(corpus.morphism("zeroMZ3"), 3), cfg);
  auto rz = rotate(az, cfg);
  bool found_note = false;
  for (const auto& c : rz.certificates)
    if (c.name == "rotation-sign") {
      found_note = true;
      REQUIRE(c.note.find("genuine negative") != std::string::npos);
    }
  REQUIRE(found_note);

  auto ab = build_3_angle(constant_smorphism(corpus.morphism("zeroMB1"), 3), cfg);
  auto rb = rotate(ab, cfg);
  for (const auto& c : rb.certificates)
    if (c.name == "rotation-sign")
      REQUIRE(c.note.find("Sf used") != std::string::npos);
}

TEST_CASE("extend_morphism: identity and zero ladders give canonical maps") {
  auto corpus = build_corpus();
  WorkbenchConfig cfg = angle_cfg();
  auto a = build_3_angle(constant_smorphism(corpus.morphism("zeroMB1"), 3), cfg);

  auto idx = identity_smorphism(a.X);
  auto idy = identity_smorphism(a.Y);
  auto ext = extend_morphism(a, a, idx, idy, cfg);
  REQUIRE(ext.found);
  REQUIRE(ext.canonical);
  REQUIRE(ext.phi.levels[2].table ==
          identity_morphism(a.Z->levels[2]).table);
  REQUIRE(ext.psi.levels[2].table ==
          identity_morphism(a.W->levels[2]).table);

  auto zx = zero_smorphism(a.X, a.X);
  auto zy = zero_smorphism(a.Y, a.Y);
  auto extz = extend_morphism(a, a, zx, zy, cfg);
  REQUIRE(extz.found);
  REQUIRE(extz.canonical);
}

TEST_CASE("extend_morphism rejects a non-commuting square") {
  auto corpus = build_corpus();
  WorkbenchConfig cfg = angle_cfg();
  auto a = build_3_angle(constant_smorphism(corpus.morphism("idMZ3"), 3), cfg);
  auto u = constant_smorphism(corpus.morphism("dblMZ3"), 3);
  auto v = identity_smorphism(a.Y);
  // v o id = id but f' o u = dbl: square fails
  REQUIRE_THROWS_AS(extend_morphism(a, a, u, v, cfg), StructuralError);
}

TEST_CASE("LES of the Z3 angle: exactness pattern against the abelian oracle") {
  auto corpus = build_corpus();
  WorkbenchConfig cfg = angle_cfg();
  auto a = build_3_angle(constant_smorphism(corpus.morphism("zeroMZ3"), 3), cfg);
  auto les = long_exact_sequence(a, 2, cfg);

  // every delta must be available on the group-complete instance
  for (const auto& d : les.delta_status)
    REQUIRE(d.note.find("bijective") != std::string::npos);
  for (const auto& node : les.nodes) REQUIRE_FALSE(node.degraded);

  // the connecting morphism is genuinely exercised: exactness holds at every
  // X, Y, Z node; the W node carries the classical Puppe obstruction (the
  // incoming map and delta are both connecting-map avatars), which is where
  // the quadrilateral's periodicity honestly fails
  for (const auto& node : les.nodes) {
    INFO(node.name);
    if (node.name.find("(W)") == std::string::npos)
      REQUIRE(node.exact);
    else if (homology(a.W, 1, cfg).result->size() > 1 && node.name == "H1(W)")
      REQUIRE_FALSE(node.exact);
  }

  // homology cardinalities cross-checked with the coset oracle
  for (std::size_t n = 0; n <= 2; ++n) {
    REQUIRE(homology(a.X, n, cfg).result->size() ==
            oracle::abelian_homology(*a.X, n).cardinality);
    REQUIRE(homology(a.Y, n, cfg).result->size() ==
            oracle::abelian_homology(*a.Y, n).cardinality);
    REQUIRE(homology(a.Z, n, cfg).result->size() ==
            oracle::abelian_homology(*a.Z, n).cardinality);
    REQUIRE(homology(a.W, n, cfg).result->size() ==
            oracle::abelian_homology(*a.W, n).cardinality);
    REQUIRE(homology(a.SX, n, cfg).result->size() ==
            oracle::abelian_homology(*a.SX, n).cardinality);
  }
}

TEST_CASE("LES nodes recomputed by independent set arithmetic") {
  auto corpus = build_corpus();
  WorkbenchConfig cfg = angle_cfg();
  auto a = build_3_angle(constant_smorphism(corpus.morphism("zeroMZ3"), 3), cfg);
  auto les = long_exact_sequence(a, 2, cfg);
  // pick the degree-1 interior nodes and recheck exactness from raw tables
  for (std::size_t n = 0; n <= 2; ++n) {
    auto hx = homology(a.X, n, cfg);
    auto hy = homology(a.Y, n, cfg);
    auto hz = homology(a.Z, n, cfg);
    auto hf = induced_homology_map(a.f, hx, hy).map;
    auto hg = induced_homology_map(a.g, hy, hz).map;
    std::set<Elem> image(hf.table.begin(), hf.table.end());
    std::set<Elem> kernel;
    for (Elem v = 0; v < hy.result->size(); ++v)
      if (hg.table[v] == hz.result->zero()) kernel.insert(v);
    bool exact = image == kernel;
    for (const auto& node : les.nodes)
      if (node.name == "H" + std::to_string(n) + "(Y)") REQUIRE(node.exact == exact);
  }
}

TEST_CASE("LES of the B1 angle: composite-zero statuses and honest delta report") {
  auto corpus = build_corpus();
  WorkbenchConfig cfg = angle_cfg();
  auto a = build_3_angle(constant_smorphism(corpus.morphism("zeroMB1"), 3), cfg);
  auto les = long_exact_sequence(a, 2, cfg);
  // composite-is-zero holds away from the W nodes, which carry the Puppe
  // obstruction exactly as on the group-complete side
  for (const auto& node : les.nodes) {
    INFO(node.name);
    if (node.name.find("(W)") == std::string::npos) REQUIRE(node.composite_zero);
  }
  // delta availability is recorded one way or the other
  REQUIRE(les.delta_status.size() == 2);
  for (const auto& d : les.delta_status) {
    bool available = d.note.find("bijective") != std::string::npos;
    bool unavailable = d.note.find("unavailable") != std::string::npos;
    REQUIRE((available || unavailable));
  }
}

TEST_CASE("LES of the identity angle: cones vanish and non-W nodes are exact") {
  auto corpus = build_corpus();
  WorkbenchConfig cfg = angle_cfg();
  auto x = constant_object(corpus.module("MZ3"), 3);
  auto a = build_3_angle(identity_smorphism(x), cfg);
  for (std::size_t n = 0; n <= 2; ++n) {
    REQUIRE(homology(a.Z, n, cfg).result->size() == 1);
    // W carries the suspension content of X
    REQUIRE(homology(a.W, n, cfg).result->size() ==
            oracle::abelian_homology(*a.W, n).cardinality);
  }
  auto les = long_exact_sequence(a, 2, cfg);
  // exactness away from the delta-fed nodes; the W and delta-target nodes
  // inherit the quadrilateral obstruction for an iso seed
  for (const auto& node : les.nodes) {
    INFO(node.name);
    if (node.name.find("(Y)") != std::string::npos ||
        node.name.find("(Z)") != std::string::npos)
      REQUIRE(node.exact);
  }
}

TEST_CASE("gamma endomorphisms: trivial for gamma_size 1, all four maps for B1G2") {
  auto corpus = build_corpus();
  auto e1 = gamma_endomorphisms(*corpus.semiring("B1"));
  REQUIRE(e1.elements.size() == 1);
  REQUIRE(e1.closed);

  auto e2 = gamma_endomorphisms(*corpus.semiring("B1G2"));
  REQUIRE(e2.elements.size() == 4);
  REQUIRE(e2.closed);
  // identity present and neutral
  for (std::size_t i = 0; i < 4; ++i) {
    REQUIRE(e2.compose[e2.identity_index][i] == i);
    REQUIRE(e2.compose[i][e2.identity_index] == i);
  }
}

TEST_CASE("homology is invariant under the E_Gamma action; LES commutes") {
  auto corpus = build_corpus();
  WorkbenchConfig cfg = angle_cfg();
  cfg.truncation = 2;  // keep the certification pipeline small
  auto rep = gamma_action_report(corpus.semiring("B1G2"), corpus.module("MB1G2"), cfg);
  INFO((rep.first_failure() ? rep.first_failure()->name : std::string("ok")));
  REQUIRE(rep.passed());
}
