#include "moorekit/simplicial.hpp"

#include <doctest.h>

#include "moorekit/zoo.hpp"

using namespace moorekit;

namespace {

bool iso(const FiniteGroup& a, const FiniteGroup& b) {
  return find_isomorphism(a, b).has_value();
}

// Degree-2 object with a nontrivial degenerate part inside the normalized
// part: X = (1, C2, D4) with the three characters of D4 as faces and the
// reflections s, rs as degeneracy images. All simplicial identities hold, but
// r^2 lies in N_2 ∩ D_2.
SimplicialGroup thick_point() {
  FiniteGroup one = trivial_group();
  FiniteGroup c2 = cyclic(2);
  FiniteGroup d4 = dihedral(4);  // index i*2+j is r^i s^j
  auto chi = [&](int rbit, int sbit) {
    std::vector<Elt> m(8);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 2; ++j) m[i * 2 + j] = (i * rbit + j * sbit) % 2;
    return GroupHom(d4, c2, m);
  };
  std::vector<std::vector<GroupHom>> faces{
      {GroupHom::zero(c2, one), GroupHom::zero(c2, one)},
      {chi(1, 1), chi(0, 1), chi(1, 0)}};
  std::vector<std::vector<GroupHom>> degens{
      {GroupHom::zero(one, c2)},
      {GroupHom(c2, d4, {0, 1}), GroupHom(c2, d4, {0, 3})}};
  return SimplicialGroup({one, c2, d4}, faces, degens, std::nullopt, "thick_point");
}

}  // namespace

TEST_CASE("discrete simplicial group: normalization concentrated in degree 0") {
  SimplicialGroup x = dis(symmetric3(), 3);
  MooreComplex m = moore(x);
  CHECK(m.chain.complex().at(0).order() == 6);
  for (int n = 1; n <= 3; ++n) {
    CHECK(m.chain.complex().trivial_at(n));
    CHECK(m.d_in_level[n].is_whole());  // identity degeneracies fill the level
  }
  CHECK(iso(pi0(x).group, symmetric3()));
  auto pis = homotopy_groups(x, 2);
  CHECK(iso(pis[0], symmetric3()));
  CHECK(pis[1].is_trivial());
  CHECK(pis[2].is_trivial());
  CHECK(is_group_T_complex(x).is_t_complex);

  auto flags = classify_membership(x);
  CHECK(flags[0].m_ngeq);
  CHECK(flags[0].m_geq);
  CHECK_FALSE(flags[0].ker_cot);  // nothing above degree 0 can surject onto S3
  CHECK(flags[0].f_tr);
  CHECK(flags[1].m_ngeq);
  CHECK_FALSE(flags[1].m_geq);
}

TEST_CASE("one-point extension: contractible with pi_0 = 1") {
  for (const auto& g : {cyclic(2), cyclic(3), klein4()}) {
    SimplicialGroup x = ind(g, 4);
    for (int n = 0; n <= 4; ++n) {
      long long want = 1;
      for (int i = 0; i <= n; ++i) want *= g.order();
      CHECK(x.level(n).order() == want);
    }
    CHECK(pi0(x).group.is_trivial());
    auto pis = homotopy_groups(x, 3);
    for (int n = 0; n <= 3; ++n) CHECK(pis[n].is_trivial());
    CHECK(is_group_T_complex(x).is_t_complex);
  }
  SimplicialGroup s = ind(symmetric3(), 3);
  auto pis = homotopy_groups(s, 2);
  for (int n = 0; n <= 2; ++n) CHECK(pis[n].is_trivial());
  CHECK(is_group_T_complex(s).is_t_complex);
}

TEST_CASE("normalization of the one-point extension is G = G in degrees 1, 0") {
  FiniteGroup g = cyclic(3);
  MooreComplex m = moore(ind(g, 3));
  CHECK(m.chain.complex().at(0).order() == 3);
  CHECK(m.chain.complex().at(1).order() == 3);
  CHECK(m.chain.complex().trivial_at(2));
  CHECK(m.chain.complex().trivial_at(3));
  ChainComplex expect(0, {g, g}, {GroupHom::identity(g)}, "G=G");
  CHECK(find_chain_isomorphism(m.chain.complex(), expect).has_value());

  auto flags = classify_membership(ind(g, 3));
  CHECK(flags[0].m_geq);
  CHECK(flags[0].ker_cot);  // delta_1 is onto
  CHECK(flags[0].f_tr);     // supported in degrees <= 1 with monic delta_1
  CHECK_FALSE(flags[0].m_ngeq);
  CHECK(flags[1].m_ngeq);
}

TEST_CASE("degenerate subgroups of the one-point extension") {
  MooreComplex m = moore(ind(cyclic(2), 2));
  CHECK(m.d_in_level[0].order() == 1);
  CHECK(m.d_in_level[1].order() == 2);  // the diagonal of C2 x C2
  CHECK(m.d_in_level[2].order() == 8);  // degenerate images already generate C2^3
  CHECK(m.n_in_level[1].order() == 2);
  CHECK(m.n_in_level[2].order() == 1);
}

TEST_CASE("simplicial identity validator pinpoints broken data") {
  FiniteGroup g = cyclic(3);
  SimplicialGroup x = ind(g, 2);
  std::vector<FiniteGroup> levels{x.level(0), x.level(1), x.level(2)};
  std::vector<std::vector<GroupHom>> faces{{x.face(1, 0), x.face(1, 1)},
                                           {x.face(2, 0), x.face(2, 1), x.face(2, 2)}};
  std::vector<std::vector<GroupHom>> degens{{x.degen(0, 0)},
                                            {x.degen(1, 0), x.degen(1, 1)}};
  CHECK_FALSE(SimplicialGroup::find_violation(levels, faces, degens).has_value());

  SUBCASE("swapped faces break a mixed identity") {
    std::swap(faces[1][0], faces[1][2]);
    auto v = SimplicialGroup::find_violation(levels, faces, degens);
    REQUIRE(v.has_value());
    CHECK((*v)["kind"].get<std::string>() != "shape");
    CHECK_THROWS_AS(SimplicialGroup(levels, faces, degens, std::nullopt, ""), Error);
  }
  SUBCASE("non-homomorphism map is caught") {
    std::vector<Elt> bad = faces[0][0].map();
    std::swap(bad[0], bad[1]);
    faces[0][0] = GroupHom::unchecked(levels[1], levels[0], bad);
    auto v = SimplicialGroup::find_violation(levels, faces, degens);
    REQUIRE(v.has_value());
  }
  SUBCASE("missing degeneracy row is a shape error") {
    degens.pop_back();
    auto v = SimplicialGroup::find_violation(levels, faces, degens);
    REQUIRE(v.has_value());
    CHECK((*v)["kind"] == "shape");
  }
}

TEST_CASE("one-point extension is 0-coskeletal; the discrete object is not") {
  FiniteGroup g = cyclic(2);
  SimplicialGroup x = ind(g, 3);
  std::vector<FiniteGroup> levels;
  std::vector<std::vector<GroupHom>> faces, degens;
  for (int n = 0; n <= 3; ++n) levels.push_back(x.level(n));
  for (int n = 1; n <= 3; ++n) {
    std::vector<GroupHom> row;
    for (int i = 0; i <= n; ++i) row.push_back(x.face(n, i));
    faces.push_back(row);
  }
  for (int n = 0; n < 3; ++n) {
    std::vector<GroupHom> row;
    for (int i = 0; i <= n; ++i) row.push_back(x.degen(n, i));
    degens.push_back(row);
  }
  CHECK_NOTHROW(SimplicialGroup(levels, faces, degens, 0, "ind-claims-cosk0"));

  SimplicialGroup d = dis(g, 2);
  std::vector<FiniteGroup> dl{d.level(0), d.level(1), d.level(2)};
  std::vector<std::vector<GroupHom>> df{{d.face(1, 0), d.face(1, 1)},
                                        {d.face(2, 0), d.face(2, 1), d.face(2, 2)}};
  std::vector<std::vector<GroupHom>> dd{{d.degen(0, 0)}, {d.degen(1, 0), d.degen(1, 1)}};
  try {
    SimplicialGroup(dl, df, dd, 0, "dis-claims-cosk0");
    FAIL("discrete object accepted a 0-coskeletal claim");
  } catch (const Error& e) {
    CHECK(e.code() == "NotCoskeletal");
    CHECK(e.witness()["degree"] == 1);
  }
}

TEST_CASE("coskeleton extension of a point reproduces the one-point extension") {
  SimplicialGroup start = dis(cyclic(3), 0);
  SimplicialGroup ext = coskeleton_extend(start, 0, 3);
  CHECK(ext.coskeletal_above() == 0);
  SimplicialGroup reference = ind(cyclic(3), 3);
  for (int n = 0; n <= 3; ++n) {
    CHECK(ext.level(n).order() == reference.level(n).order());
    if (ext.level(n).order() <= 24) CHECK(iso(ext.level(n), reference.level(n)));
    // larger levels: elementary abelian of exponent 3, like the reference
    CHECK(ext.level(n).is_abelian());
    for (Elt a = 1; a < ext.level(n).order(); ++a) CHECK(ext.level(n).element_order(a) == 3);
  }
  auto pis = homotopy_groups(ext, 2);
  for (int n = 0; n <= 2; ++n) CHECK(pis[n].is_trivial());

  // The marked extension re-validates through the checking constructor.
  std::vector<FiniteGroup> levels;
  std::vector<std::vector<GroupHom>> faces, degens;
  for (int n = 0; n <= 3; ++n) levels.push_back(ext.level(n));
  for (int n = 1; n <= 3; ++n) {
    std::vector<GroupHom> row;
    for (int i = 0; i <= n; ++i) row.push_back(ext.face(n, i));
    faces.push_back(row);
  }
  for (int n = 0; n < 3; ++n) {
    std::vector<GroupHom> row;
    for (int i = 0; i <= n; ++i) row.push_back(ext.degen(n, i));
    degens.push_back(row);
  }
  CHECK_NOTHROW(SimplicialGroup(levels, faces, degens, 0, "recheck"));
}

TEST_CASE("classifying-space reconstruction is 2-coskeletal") {
  ChainComplex c(1, {cyclic(2)}, {}, "K(C2,1)");
  SimplicialGroup g4 = dold_kan_gamma(c, 4);
  SimplicialGroup ext = coskeleton_extend(g4, 2, 4);
  for (int n = 0; n <= 4; ++n) CHECK(ext.level(n).order() == g4.level(n).order());
  auto pis = homotopy_groups(ext, 3);
  CHECK(pis[0].is_trivial());
  CHECK(iso(pis[1], cyclic(2)));
  CHECK(pis[2].is_trivial());
  CHECK(pis[3].is_trivial());
}

TEST_CASE("reconstruction of Eilenberg-MacLane data") {
  SUBCASE("K(C2,1): levels are binomial powers, homotopy concentrated at 1") {
    ChainComplex c(1, {cyclic(2)}, {}, "K(C2,1)");
    SimplicialGroup g = dold_kan_gamma(c, 4);
    const int want[] = {1, 2, 4, 8, 16};  // 2^C(m,1)
    for (int m = 0; m <= 4; ++m) CHECK(g.level(m).order() == want[m]);
    auto pis = homotopy_groups(g, 3);
    CHECK(pis[0].is_trivial());
    CHECK(iso(pis[1], cyclic(2)));
    CHECK(pis[2].is_trivial());
    CHECK(pis[3].is_trivial());
    CHECK(is_group_T_complex(g).is_t_complex);
  }
  SUBCASE("K(C3,2): homotopy concentrated at 2") {
    ChainComplex c(2, {cyclic(3)}, {}, "K(C3,2)");
    SimplicialGroup g = dold_kan_gamma(c, 3);
    CHECK(g.level(0).order() == 1);
    CHECK(g.level(1).order() == 1);
    CHECK(g.level(2).order() == 3);
    CHECK(g.level(3).order() == 27);  // 3^C(3,2)
    auto pis = homotopy_groups(g, 2);
    CHECK(pis[0].is_trivial());
    CHECK(pis[1].is_trivial());
    CHECK(iso(pis[2], cyclic(3)));
  }
  SUBCASE("K(V4,3) to degree 4") {
    ChainComplex c(3, {klein4()}, {}, "K(V4,3)");
    SimplicialGroup g = dold_kan_gamma(c, 4);
    CHECK(g.level(3).order() == 4);
    CHECK(g.level(4).order() == 256);  // 4^C(4,3)
    auto pis = homotopy_groups(g, 3);
    CHECK(pis[0].is_trivial());
    CHECK(pis[1].is_trivial());
    CHECK(pis[2].is_trivial());
    CHECK(iso(pis[3], klein4()));
  }
  SUBCASE("two-term complex survives the round trip with its homology") {
    FiniteGroup c4 = cyclic(4), c2 = cyclic(2);
    ChainComplex c(0, {c2, c4}, {GroupHom(c4, c2, {0, 1, 0, 1})}, "C4 onto C2");
    SimplicialGroup g = dold_kan_gamma(c, 3);
    MooreComplex m = moore(g);
    CHECK(find_chain_isomorphism(
              m.chain.complex(),
              ChainComplex(0, {c2, c4, trivial_group(), trivial_group()},
                           {GroupHom(c4, c2, {0, 1, 0, 1}),
                            GroupHom::zero(trivial_group(), c4),
                            GroupHom::zero(trivial_group(), trivial_group())},
                           "padded"))
              .has_value());
    auto pis = homotopy_groups(g, 2);
    CHECK(pis[0].is_trivial());          // delta_1 is onto
    CHECK(iso(pis[1], cyclic(2)));       // ker delta_1 = {0, 2}
    CHECK(pis[2].is_trivial());
  }
  SUBCASE("nonabelian input is refused") {
    ChainComplex c(1, {symmetric3()}, {}, "S3 at 1");
    CHECK_THROWS_WITH_AS(dold_kan_gamma(c, 2), doctest::Contains("abelian"), Error);
  }
  SUBCASE("support outside the window is refused") {
    ChainComplex c(2, {cyclic(2)}, {}, "C2 at 2");
    CHECK_THROWS_AS(dold_kan_gamma(c, 1), Error);
  }
}

TEST_CASE("degree-2 object with interlocking degeneracies is not a T-complex") {
  SimplicialGroup x = thick_point();
  auto rep = is_group_T_complex(x);
  CHECK_FALSE(rep.is_t_complex);
  CHECK(rep.witness_degree == 2);
  CHECK(rep.witness == 4);  // r^2 in the dihedral indexing

  MooreComplex m = moore(x);
  CHECK(m.chain.complex().trivial_at(0));
  CHECK(m.chain.complex().at(1).order() == 2);
  CHECK(m.chain.complex().at(2).order() == 2);
  CHECK(m.chain.complex().diff(2).is_zero());

  auto pis = homotopy_groups(x, 1);
  CHECK(pis[0].is_trivial());
  CHECK(iso(pis[1], cyclic(2)));

  auto flags = classify_membership(x);
  CHECK(flags[1].m_geq);
  CHECK_FALSE(flags[1].ker_cot);  // delta_2 is the zero map, not an epi
  CHECK_FALSE(flags[1].f_tr);     // delta_2 not monic
  CHECK(flags[2].m_ngeq);
  CHECK(flags[2].m_geq == false);
}

TEST_CASE("homotopy range is guarded by the degree") {
  CHECK_THROWS_AS(homotopy_groups(dis(cyclic(2), 1), 1), Error);
  CHECK_NOTHROW(homotopy_groups(dis(cyclic(2), 2), 1));
}

TEST_CASE("pi_0 agrees with degree-0 homology across constructions") {
  for (const auto& x : {dis(symmetric3(), 2), ind(cyclic(4), 2), thick_point()}) {
    MooreComplex m = moore(x);
    CHECK(iso(pi0(x).group, homology(m.chain, 0)));
  }
}
