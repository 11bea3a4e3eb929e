// Group core: table validation, stock groups, subgroup/quotient machinery,
// and the budgeted hom search checked against a brute-force oracle.

#include <doctest.h>

#include <algorithm>
#include <set>

#include "moorekit/group.hpp"
#include "moorekit/zoo.hpp"

using namespace moorekit;

namespace {

// Oracle: every function a -> b fixing nothing in advance, filtered by the hom
// property. Only usable for tiny groups.
int count_homs_brute(const FiniteGroup& a, const FiniteGroup& b) {
  const int n = a.order(), m = b.order();
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= m;
  int count = 0;
  for (long long c = 0; c < total; ++c) {
    std::vector<Elt> map(n);
    long long t = c;
    for (int i = 0; i < n; ++i) {
      map[i] = static_cast<Elt>(t % m);
      t /= m;
    }
    if (!GroupHom::find_violation(a, b, map)) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("table validation catches broken identity, inverses, associativity") {
  CHECK_NOTHROW(cyclic(5));

  // row 0 not the identity
  std::vector<std::vector<Elt>> bad_id = {{0, 1}, {1, 1}};
  CHECK_THROWS_WITH_AS(FiniteGroup::from_table(bad_id), doctest::Contains("inverse"),
                       Error);

  // associativity violation: a Latin square with identity that is not a group
  std::vector<std::vector<Elt>> latin = {
      {0, 1, 2, 3, 4},
      {1, 0, 3, 4, 2},
      {2, 4, 0, 1, 3},
      {3, 2, 4, 0, 1},
      {4, 3, 1, 2, 0}};
  try {
    FiniteGroup::from_table(latin);
    FAIL("expected NotAGroup");
  } catch (const Error& e) {
    CHECK(e.code() == "NotAGroup");
    CHECK(e.witness().contains("triple"));
  }

  std::vector<std::vector<Elt>> not_square = {{0, 1}, {1}};
  CHECK_THROWS_AS(FiniteGroup::from_table(not_square), Error);
}

TEST_CASE("stock groups have the expected gross structure") {
  CHECK(cyclic(6).is_abelian());
  CHECK(symmetric3().order() == 6);
  CHECK_FALSE(symmetric3().is_abelian());
  CHECK(alternating4().order() == 12);
  CHECK(dicyclic(2).order() == 8);
  CHECK(dihedral(4).order() == 8);
  CHECK(klein4().is_abelian());

  // Q8 has exactly one element of order 2
  FiniteGroup q8 = dicyclic(2);
  int order2 = 0;
  for (Elt e = 0; e < q8.order(); ++e)
    if (q8.element_order(e) == 2) ++order2;
  CHECK(order2 == 1);

  // V4 has three
  FiniteGroup v4 = klein4();
  order2 = 0;
  for (Elt e = 0; e < v4.order(); ++e)
    if (v4.element_order(e) == 2) ++order2;
  CHECK(order2 == 3);

  CHECK(find_isomorphism(dihedral(3), symmetric3()).has_value());
  CHECK(find_isomorphism(dicyclic(1), cyclic(4)).has_value());
  CHECK_FALSE(find_isomorphism(dihedral(4), dicyclic(2)).has_value());
  CHECK_FALSE(find_isomorphism(cyclic(4), klein4()).has_value());

  CHECK(iso_classes_upto(12).size() == 24);
  CHECK(iso_classes_upto(6).size() == 8);
}

TEST_CASE("centers and commutator subgroups") {
  CHECK(center(symmetric3()).order() == 1);
  CHECK(center(dihedral(4)).order() == 2);
  CHECK(center(dicyclic(2)).order() == 2);
  CHECK(commutator_subgroup(symmetric3()).order() == 3);
  CHECK(commutator_subgroup(dicyclic(2)).order() == 2);
  CHECK(commutator_subgroup(alternating4()).order() == 4);
  CHECK(commutator_subgroup(cyclic(12)).order() == 1);
}

TEST_CASE("normal closure in S3") {
  FiniteGroup s3 = symmetric3();
  Elt transposition = -1, threecycle = -1;
  for (Elt e = 1; e < 6; ++e) {
    if (s3.element_order(e) == 2 && transposition < 0) transposition = e;
    if (s3.element_order(e) == 3 && threecycle < 0) threecycle = e;
  }
  CHECK(normal_closure(s3, {transposition}).order() == 6);
  CHECK(normal_closure(s3, {threecycle}).order() == 3);
  CHECK(generated_subgroup(s3, {transposition}).order() == 2);
}

TEST_CASE("quotient uses minimal coset representatives and projects correctly") {
  FiniteGroup s3 = symmetric3();
  Subgroup a3 = commutator_subgroup(s3);
  Quotient q = quotient(s3, a3);
  CHECK(q.group.order() == 2);
  CHECK(q.rep[0] == 0);
  CHECK(std::is_sorted(q.rep.begin(), q.rep.end()));
  CHECK(q.project.is_surjective());
  CHECK(kernel(q.project).same_as(a3));
  CHECK(find_isomorphism(q.group, cyclic(2)).has_value());

  // non-normal subgroup must be rejected with a witness
  FiniteGroup g = s3;
  Elt t = -1;
  for (Elt e = 1; e < 6; ++e)
    if (g.element_order(e) == 2) {
      t = e;
      break;
    }
  Subgroup c2 = generated_subgroup(g, {t});
  try {
    quotient(g, c2);
    FAIL("expected NotNormal");
  } catch (const Error& e) {
    CHECK(e.code() == "NotNormal");
    CHECK(e.witness().contains("conjugator"));
  }
}

TEST_CASE("subgroup as group keeps the identity at index 0") {
  FiniteGroup a4 = alternating4();
  Subgroup v = commutator_subgroup(a4);
  auto vg = v.as_group("V");
  CHECK(vg.group.order() == 4);
  CHECK(vg.embed.is_injective());
  CHECK(vg.embed(0) == 0);
  CHECK(find_isomorphism(vg.group, klein4()).has_value());
  for (Elt e : v.elements()) CHECK(vg.index_in_sub[e] >= 0);
}

TEST_CASE("hom enumeration matches the brute-force oracle on all pairs up to order 6") {
  auto groups = iso_classes_upto(6);
  REQUIRE(groups.size() == 8);
  for (const auto& a : groups)
    for (const auto& b : groups) {
      CAPTURE(a.label());
      CAPTURE(b.label());
      const auto homs = enumerate_homs(a, b);
      CHECK(static_cast<int>(homs.size()) == count_homs_brute(a, b));
      // every reported hom is genuinely a hom with the right endpoints
      for (const auto& h : homs) {
        CHECK(h.source().same_instance(a));
        CHECK(h.target().same_instance(b));
        CHECK_FALSE(GroupHom::find_violation(a, b, h.map()).has_value());
      }
      // no duplicates
      std::set<std::vector<Elt>> maps;
      for (const auto& h : homs) maps.insert(h.map());
      CHECK(maps.size() == homs.size());
    }
}

TEST_CASE("known hom counts and automorphism groups") {
  CHECK(enumerate_homs(symmetric3(), cyclic(2)).size() == 2);
  CHECK(enumerate_homs(cyclic(3), symmetric3()).size() == 3);
  CHECK(enumerate_homs(cyclic(4), cyclic(2)).size() == 2);
  CHECK(automorphisms(klein4()).size() == 6);
  CHECK(automorphisms(symmetric3()).size() == 6);
  CHECK(automorphisms(cyclic(6)).size() == 2);
  CHECK(automorphisms(dicyclic(2)).size() == 24);
  CHECK(automorphisms(cyclic(8)).size() == 4);
}

TEST_CASE("hom search refuses oversized sources") {
  FiniteGroup big = direct_product(dicyclic(2), cyclic(4)).group;  // order 32
  REQUIRE(big.order() == 32);
  try {
    enumerate_homs(big, cyclic(2));
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == "BudgetExceeded");
  }
}

TEST_CASE("central extensions") {
  // C4 -> C2 is central; S3 -> C2 is not (kernel A3 is not central)
  FiniteGroup c4 = cyclic(4), c2 = cyclic(2);
  GroupHom redmod(c4, c2, {0, 1, 0, 1});
  CHECK(is_central_extension(redmod));

  FiniteGroup s3 = symmetric3();
  auto sign = enumerate_homs(s3, c2);
  REQUIRE(sign.size() == 2);
  for (const auto& h : sign)
    if (!h.is_zero()) CHECK_FALSE(is_central_extension(h));

  // quotient of Q8 by its center is central by construction
  FiniteGroup q8 = dicyclic(2);
  Quotient q = quotient(q8, center(q8));
  CHECK(is_central_extension(q.project));
  CHECK(find_isomorphism(q.group, klein4()).has_value());
}

TEST_CASE("subgroup lattices of familiar groups") {
  CHECK(all_subgroups(symmetric3()).size() == 6);
  CHECK(all_subgroups(klein4()).size() == 5);
  CHECK(all_subgroups(cyclic(6)).size() == 4);
  CHECK(all_subgroups(dicyclic(2)).size() == 6);
  CHECK(all_subgroups(dihedral(4)).size() == 10);
  CHECK(all_subgroups(alternating4()).size() == 10);
  CHECK(normal_subgroups(symmetric3()).size() == 3);
  CHECK(normal_subgroups(alternating4()).size() == 3);
  CHECK(normal_subgroups(dicyclic(2)).size() == 6);
  CHECK(normal_subgroups(dihedral(4)).size() == 6);
}

TEST_CASE("group actions validate and compose") {
  FiniteGroup s3 = symmetric3();
  GroupAction conj = GroupAction::conjugation(s3);
  CHECK_FALSE(conj.is_trivial());
  CHECK_FALSE(GroupAction::find_violation(s3, s3, conj.perms()).has_value());

  // inversion of C3 by C2 (the S3 semidirect structure)
  FiniteGroup c3 = cyclic(3), c2 = cyclic(2);
  GroupAction invert(c2, c3, {{0, 1, 2}, {0, 2, 1}});
  Semidirect sd = semidirect_product(c3, c2, invert, "C3:C2");
  CHECK(sd.group.order() == 6);
  CHECK(find_isomorphism(sd.group, s3).has_value());
  CHECK(kernel(sd.project_actor).order() == 3);

  // breaking one permutation entry must be caught
  auto perms = invert.perms();
  perms[1][0] = 1;
  perms[1][1] = 0;
  CHECK(GroupAction::find_violation(c2, c3, perms).has_value());
}

TEST_CASE("power groups encode coordinatewise multiplication") {
  FiniteGroup c3 = cyclic(3);
  PowerGroup p = power_group(c3, 3);
  CHECK(p.group.order() == 27);
  for (Elt x = 0; x < 27; ++x) {
    auto xs = p.decode(x);
    CHECK(p.encode(xs) == x);
    for (Elt y = 0; y < 27; ++y) {
      auto ys = p.decode(y);
      std::vector<Elt> zs(3);
      for (int j = 0; j < 3; ++j) zs[j] = c3.mul(xs[j], ys[j]);
      CHECK(p.group.mul(x, y) == p.encode(zs));
    }
  }
}

TEST_CASE("greedy generators actually generate") {
  for (const auto& g : iso_classes_upto(8)) {
    auto gens = greedy_generators(g);
    CHECK(generated_subgroup(g, gens).order() == g.order());
    CHECK(gens.size() <= 3);
  }
}
