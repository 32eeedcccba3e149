#include <catch2/catch_amalgamated.hpp>

#include "tgmod/corpus.hpp"
#include "tgmod/spectrum.hpp"

using namespace tgmod;

TEST_CASE("ideal enumeration: TRIV has exactly one ideal") {
  auto ids = enumerate_ideals(triv_semiring());
  REQUIRE(ids.size() == 1);
  REQUIRE(ids[0].is_improper());
}

TEST_CASE("ideal enumeration: B1 contains the zero ideal and the full ideal") {
  auto ids = enumerate_ideals(b1_semiring());
  bool has_zero = false, has_full = false;
  for (const auto& id : ids) {
    REQUIRE(is_gamma_ideal(*id.semiring, id.members));  // replay invariants
    if (id.element_list() == std::vector<Elem>{0}) has_zero = true;
    if (id.is_improper()) has_full = true;
  }
  REQUIRE(has_zero);
  REQUIRE(has_full);
}

TEST_CASE("primality: full ideal improper, zero ideal prime in B1 and Z3") {
  auto idsB = enumerate_ideals(b1_semiring());
  for (const auto& id : idsB) {
    if (id.is_improper()) REQUIRE_FALSE(is_prime(id));
    if (id.element_list() == std::vector<Elem>{0}) REQUIRE(is_prime(id));
  }
  auto idsZ = enumerate_ideals(z3_semiring());
  for (const auto& id : idsZ)
    if (id.element_list() == std::vector<Elem>{0}) REQUIRE(is_prime(id));
}

TEST_CASE("spec(TRIV) is empty under the default convention") {
  auto sp = spec_space(triv_semiring());
  REQUIRE(sp.points.empty());
  REQUIRE(sp.improper_ideals_allowed);
  REQUIRE(std::string(convention_name(sp.convention)) == "any-factor");
}

TEST_CASE("spec(B1): V(0) is everything; V is antitone; topology closed") {
  auto sp = spec_space(b1_semiring());
  REQUIRE(sp.points.size() == 1);
  // V(zero ideal) contains every point
  for (std::size_t i = 0; i < sp.ideals.size(); ++i) {
    if (sp.ideals[i].element_list() == std::vector<Elem>{0}) {
      for (std::size_t p = 0; p < sp.points.size(); ++p)
        REQUIRE(sp.closed_sets[i][p]);
    }
  }
  // antitone on all enumerated pairs
  for (std::size_t i = 0; i < sp.ideals.size(); ++i)
    for (std::size_t j = 0; j < sp.ideals.size(); ++j)
      if (sp.ideals[i].subset_of(sp.ideals[j]))
        REQUIRE(set_subset(sp.closed_sets[j], sp.closed_sets[i]));
  // opens closed under union and intersection
  for (const auto& a : sp.opens)
    for (const auto& b : sp.opens) {
      REQUIRE_NOTHROW(sp.open_index(set_union(a, b)));
      REQUIRE_NOTHROW(sp.open_index(set_intersection(a, b)));
    }
}

TEST_CASE("spec(Z3) topology closed under union/intersection; V antitone") {
  auto sp = spec_space(z3_semiring());
  for (const auto& a : sp.opens)
    for (const auto& b : sp.opens) {
      REQUIRE_NOTHROW(sp.open_index(set_union(a, b)));
      REQUIRE_NOTHROW(sp.open_index(set_intersection(a, b)));
    }
  for (std::size_t i = 0; i < sp.ideals.size(); ++i)
    for (std::size_t j = 0; j < sp.ideals.size(); ++j)
      if (sp.ideals[i].subset_of(sp.ideals[j]))
        REQUIRE(set_subset(sp.closed_sets[j], sp.closed_sets[i]));
}

TEST_CASE("proper-only convention shrinks the ideal list") {
  auto with = enumerate_ideals(b1_semiring(), {}, true);
  auto without = enumerate_ideals(b1_semiring(), {}, false);
  REQUIRE(without.size() < with.size());
  for (const auto& id : without) REQUIRE_FALSE(id.is_improper());
}

namespace {

/// Two-point discrete space fixture (not derived from a semiring spectrum;
/// sheaf machinery accepts any finite space).
SpecSpace two_point_discrete(const SemiringPtr& s) {
  SpecSpace sp;
  sp.semiring = s;
  GammaIdeal p0;
  p0.semiring = s;
  p0.members.assign(s->tsize(), false);
  p0.members[s->carrier.zero] = true;
  sp.points = {p0, p0};
  sp.opens = {{false, false}, {false, true}, {true, false}, {true, true}};
  std::sort(sp.opens.begin(), sp.opens.end());
  return sp;
}

}  // namespace

TEST_CASE("constant sheaf on a one-open space passes check_sheaf") {
  auto sp = spec_space(b1_semiring());
  auto f = constant_sheaf(sp, mb1_module());
  auto rep = check_sheaf(f);
  INFO((rep.first_failure() ? rep.first_failure()->name : std::string("ok")));
  REQUIRE(rep.passed());
}

TEST_CASE("constant sheaf on the two-point discrete space passes check_sheaf") {
  auto sp = two_point_discrete(z3_semiring());
  auto f = constant_sheaf(sp, mz3_module());
  REQUIRE(check_sheaf(f).passed());
  // global sections module is valid
  std::vector<bool> full{true, true};
  REQUIRE(check_module(*f.sections[f.space.open_index(full)]).passed());
}

TEST_CASE("a corrupted restriction square fails with the square as witness") {
  auto sp = two_point_discrete(z3_semiring());
  auto f = constant_sheaf(sp, mz3_module());
  std::vector<bool> full{true, true};
  std::vector<bool> left{true, false};
  auto key = std::make_pair(f.space.open_index(full), f.space.open_index(left));
  f.restrictions[key] = zero_morphism(f.sections[key.first], f.sections[key.second]);
  auto rep = check_sheaf(f);
  REQUIRE_FALSE(rep.passed());
  REQUIRE(rep.first_failure() != nullptr);
  REQUIRE_FALSE(rep.first_failure()->witness.empty());
}

TEST_CASE("Cech complex of the trivial cover") {
  auto sp = spec_space(b1_semiring());
  auto f = constant_sheaf(sp, mb1_module());
  std::vector<bool> full(sp.points.size(), true);
  std::vector<std::size_t> cover{sp.open_index(full)};
  auto c = cech_complex(f, cover);
  REQUIRE(c.terms.size() == 1);
  REQUIRE(c.terms[0]->size() == f.sections[sp.open_index(full)]->size());
  auto h0 = cech_cohomology(f, cover, 0);
  REQUIRE(h0.available);
  REQUIRE(h0.result->size() == f.sections[sp.open_index(full)]->size());
  auto h1 = cech_cohomology(f, cover, 1);
  REQUIRE(h1.available);
  REQUIRE(h1.result->size() == 1);
}

TEST_CASE("two-point cover: counting, identities, H0 = Z3 x Z3, H1 trivial") {
  auto sp = two_point_discrete(z3_semiring());
  auto f = constant_sheaf(sp, mz3_module());
  std::vector<bool> left{true, false}, right{false, true};
  std::vector<std::size_t> cover{sp.open_index(left), sp.open_index(right)};
  auto c = cech_complex(f, cover);
  REQUIRE(c.terms.size() == 2);
  REQUIRE(c.tuples[0].size() == 2);  // two factors in degree 0
  REQUIRE(c.tuples[1].size() == 1);  // one factor in degree 1
  REQUIRE(cech_identities_hold(c));

  auto h0 = cech_cohomology(f, cover, 0);
  REQUIRE(h0.available);
  REQUIRE(h0.result->size() == 9);  // Z3 x Z3
  REQUIRE(check_module(*h0.result).passed());

  // matches the sheaf-condition equalizer: sections over the union
  std::vector<bool> full{true, true};
  REQUIRE(h0.result->size() == f.sections[sp.open_index(full)]->size());

  auto h1 = cech_cohomology(f, cover, 1);
  REQUIRE(h1.available);
  REQUIRE(h1.result->size() == 1);  // brute-force cochain oracle: ker/im trivial
}

TEST_CASE("higher Cech degrees are unavailable without group-completeness") {
  auto sp = two_point_discrete(b1_semiring());
  auto f = constant_sheaf(sp, mb1_module());
  std::vector<bool> left{true, false}, right{false, true};
  std::vector<std::size_t> cover{sp.open_index(left), sp.open_index(right)};
  auto h0 = cech_cohomology(f, cover, 0);
  REQUIRE(h0.available);  // degree 0 never needs inverses
  auto h1 = cech_cohomology(f, cover, 1);
  REQUIRE_FALSE(h1.available);
  REQUIRE(h1.reason.find("group-complete") != std::string::npos);
}

TEST_CASE("H0 of every cover reproduces the sections over the union") {
  auto sp = two_point_discrete(z3_semiring());
  auto f = constant_sheaf(sp, mz3_module());
  std::vector<bool> full{true, true};
  std::vector<bool> left{true, false}, right{false, true};
  std::vector<std::vector<std::size_t>> covers = {
      {sp.open_index(full)},
      {sp.open_index(left), sp.open_index(right)},
      {sp.open_index(left), sp.open_index(right), sp.open_index(full)}};
  for (const auto& cover : covers) {
    auto h0 = cech_cohomology(f, cover, 0);
    REQUIRE(h0.available);
    REQUIRE(h0.result->size() == f.sections[sp.open_index(full)]->size());
  }
}
