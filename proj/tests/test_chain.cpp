#include "ahss/chain.hpp"
#include "ahss/cw.hpp"

#include <doctest.h>

using namespace ahss;

namespace {

ChainComplex two_term(long d) {
  // degree 1 -> degree 0, both Z, differential (d)
  IntMat m(1, 1);
  m(0, 0) = d;
  return ChainComplex(0, {PresentedGroup::free_group(1), PresentedGroup::free_group(1)}, {m});
}

}  // namespace

TEST_CASE("homology of small complexes") {
  ChainComplex zero_diff = two_term(0);
  CHECK(homology(zero_diff, 0).group.canonical() == CanonicalForm{1, {}});
  CHECK(homology(zero_diff, 1).group.canonical() == CanonicalForm{1, {}});

  ChainComplex doubling = two_term(2);
  CHECK(homology(doubling, 1).group.is_trivial_group());
  CHECK(homology(doubling, 0).group.canonical() == CanonicalForm{0, {2}});

  CHECK(homology(doubling, 5).group.is_trivial_group());  // out of range
  CHECK(homology(cellular_chains(torus()), 1).group.canonical() == CanonicalForm{2, {}});
}

TEST_CASE("complex construction rejects nonzero boundary composite") {
  IntMat d1(1, 1), d2(1, 1);
  d1(0, 0) = 2;
  d2(0, 0) = 3;
  std::vector<PresentedGroup> gs = {PresentedGroup::free_group(1), PresentedGroup::free_group(1),
                                    PresentedGroup::free_group(1)};
  CHECK_THROWS_AS(ChainComplex(0, gs, {d1, d2}), std::invalid_argument);
}

TEST_CASE("induced maps on homology") {
  CWComplex s2 = sphere(2);
  ChainMap incl = pair_chain_map(s2, 0, -1, 2, -1);
  GroupHom h0 = induced_on_homology(incl, 0);
  CHECK(h0.is_isomorphism());

  // degree-2 self map of the circle
  CWComplex s1 = sphere(1);
  ChainComplex c = cellular_chains(s1);
  std::map<int, IntMat> comps;
  comps[0] = IntMat::Identity(1, 1);
  IntMat deg2(1, 1);
  deg2(0, 0) = 2;
  comps[1] = deg2;
  ChainMap f(c, c, comps);
  GroupHom h1 = induced_on_homology(f, 1);
  CHECK(h1.matrix()(0, 0) == Int(2));

  // identity chain map induces the identity
  std::map<int, IntMat> id_comps;
  id_comps[0] = IntMat::Identity(1, 1);
  id_comps[1] = IntMat::Identity(1, 1);
  ChainMap idm(c, c, id_comps);
  CHECK(same_hom(induced_on_homology(idm, 1), GroupHom::identity(homology(c, 1).group)));
}

TEST_CASE("induced maps respect composition") {
  CWComplex x = real_projective(3);
  ChainMap f = pair_chain_map(x, 1, -1, 2, -1);
  ChainMap g = pair_chain_map(x, 2, -1, 3, -1);
  for (int n = 0; n <= 2; ++n) {
    HomologyData h1 = homology(f.src(), n);
    HomologyData h2 = homology(f.dst(), n);
    HomologyData h3 = homology(g.dst(), n);
    GroupHom a = induced_on_homology(f, n, h1, h2);
    GroupHom b = induced_on_homology(g, n, h2, h3);
    ChainMap gf = pair_chain_map(x, 1, -1, 3, -1);
    CHECK(same_hom(compose(b, a), induced_on_homology(gf, n, h1, h3)));
  }
}

TEST_CASE("connecting hom: disk against its boundary circle") {
  // D^2 with one cell in each dimension 0, 1, 2
  CWComplex disk;
  disk.dim = 2;
  disk.cells = {1, 1, 1};
  disk.boundaries = {IntMat::Zero(1, 1), IntMat::Identity(1, 1)};
  REQUIRE(validate(disk).ok);

  ComplexSES ses = triple_ses(disk, 2, 1, -1);
  HomologyData hc = homology(ses.c(), 2);
  HomologyData ha = homology(ses.a(), 1);
  CHECK(hc.group.canonical() == CanonicalForm{1, {}});
  GroupHom del = connecting_hom(ses, 2, hc, ha);
  CHECK(del.is_isomorphism());
  CHECK(del.matrix()(0, 0) == Int(1));
}

TEST_CASE("connecting hom of a skeletal triple equals the relative boundary") {
  CWComplex x = real_projective(3);
  ComplexSES ses = triple_ses(x, 2, 1, 0);
  GroupHom del = connecting_hom(ses, 2);
  CHECK(del.matrix()(0, 0) == Int(2));

  ComplexSES t = triple_ses(torus(), 2, 1, 0);
  CHECK(connecting_hom(t, 2).is_zero_hom());
}

TEST_CASE("long exact sequence of a pair is exact") {
  CWComplex x = real_projective(3);
  ComplexSES ses = triple_ses(x, 3, 1, -1);  // pair (X, X^1)
  for (int n = 0; n <= 3; ++n) {
    HomologyData ha_n = homology(ses.a(), n);
    HomologyData hb_n = homology(ses.b(), n);
    HomologyData hc_n = homology(ses.c(), n);
    HomologyData ha_nm1 = homology(ses.a(), n - 1);
    HomologyData hb_nm1 = homology(ses.b(), n - 1);
    GroupHom i = induced_on_homology(ses.inject(), n, ha_n, hb_n);
    GroupHom p = induced_on_homology(ses.project(), n, hb_n, hc_n);
    GroupHom d = connecting_hom(ses, n, hc_n, ha_nm1);
    GroupHom i1 = induced_on_homology(ses.inject(), n - 1, ha_nm1, hb_nm1);
    CHECK(is_exact_at(i, p).exact);
    CHECK(is_exact_at(p, d).exact);
    CHECK(is_exact_at(d, i1).exact);
  }
}

TEST_CASE("tensoring a free complex") {
  CWComplex s1 = sphere(1);
  ChainComplex circle = cellular_chains(s1);

  ChainComplex same = tensor_free_complex(circle, PresentedGroup::free_group(1));
  CHECK(homology(same, 1).group.canonical() == CanonicalForm{1, {}});

  PresentedGroup z2 = PresentedGroup::cyclic(2);
  ChainComplex mod2 = tensor_free_complex(circle, z2);
  CHECK(homology(mod2, 0).group.canonical() == CanonicalForm{0, {2}});
  CHECK(homology(mod2, 1).group.canonical() == CanonicalForm{0, {2}});

  ChainComplex rp2_mod2 = tensor_free_complex(cellular_chains(real_projective(2)), z2);
  for (int n = 0; n <= 2; ++n)
    CHECK(homology(rp2_mod2, n).group.canonical() == CanonicalForm{0, {2}});

  CHECK_THROWS_AS(tensor_free_complex(ChainComplex(0, {z2}, {}), z2), std::invalid_argument);
}

TEST_CASE("homology of a direct sum is the sum of homologies") {
  ChainComplex a = cellular_chains(real_projective(2));
  ChainComplex b = cellular_chains(torus());
  ChainComplex s = direct_sum(a, b);
  for (int n = 0; n <= 2; ++n) {
    CanonicalForm ca = homology(a, n).group.canonical();
    CanonicalForm cb = homology(b, n).group.canonical();
    CanonicalForm cs = homology(s, n).group.canonical();
    CanonicalForm expect{ca.free_rank + cb.free_rank, {}};
    std::vector<Int> all = ca.invariant_factors;
    all.insert(all.end(), cb.invariant_factors.begin(), cb.invariant_factors.end());
    // merge into a divisibility chain via the classifying presentation
    std::vector<PresentedGroup> parts;
    parts.push_back(PresentedGroup::free_group(expect.free_rank));
    for (const Int& d : all) parts.push_back(PresentedGroup::cyclic(d));
    CHECK(cs == PresentedGroup::direct_sum(parts).canonical());
  }
}
