#include <catch2/catch_amalgamated.hpp>

#include <picard2/oracle.hpp>
#include <picard2/sgp2.hpp>

#include <random>

#include "support/generators.hpp"

using namespace picard2;

namespace {

PicardComplex z_times2_z() {
  return make_complex(free_group(1), free_group(1),
                      make_hom(free_group(1), free_group(1), IntMatrix{{2}}));
}

bool same_invariants(const FinGenAbGroup& a, const FinGenAbGroup& b) {
  Invariants ia = invariants(a), ib = invariants(b);
  return ia.factors == ib.factors && ia.rank == ib.rank;
}

}  // namespace

TEST_CASE("dis and the homotopy groups") {
  PicardComplex d6 = dis(cyclic_group(6));
  REQUIRE(is_trivial(d6.c1));
  REQUIRE(d6.c0 == cyclic_group(6));
  REQUIRE(pi0(d6).group == cyclic_group(6));
  REQUIRE(hom_equal(pi0(d6).proj, identity_hom(cyclic_group(6))));
  REQUIRE(is_trivial(pi1(d6).group));

  REQUIRE(invariants(pi0(dis(free_group(2))).group).rank == 2);

  PicardComplex a = z_times2_z();
  REQUIRE(invariants(pi0(a).group).factors == std::vector<Int>{2});
  REQUIRE(is_trivial(pi1(a).group));

  PicardComplex b = make_complex(free_group(1), free_group(1),
                                 zero_hom(free_group(1), free_group(1)));
  REQUIRE(invariants(pi0(b).group).rank == 1);
  REQUIRE(invariants(pi1(b).group).rank == 1);

  PicardComplex c = make_complex(cyclic_group(4), cyclic_group(4),
                                 make_hom(cyclic_group(4), cyclic_group(4), IntMatrix{{2}}));
  REQUIRE(invariants(pi1(c).group).factors == std::vector<Int>{2});
  REQUIRE(invariants(pi0(c).group).factors == std::vector<Int>{2});
}

TEST_CASE("dis_hom and essential surjectivity") {
  AbHom red3 = make_hom(free_group(1), cyclic_group(3), IntMatrix{{1}});
  REQUIRE(is_essentially_surjective(dis_hom(red3)));
  REQUIRE(chain_hom_equal(dis_hom(identity_hom(cyclic_group(5))),
                          identity_chain(dis(cyclic_group(5)))));
  AbHom twice = make_hom(free_group(1), free_group(1), IntMatrix{{2}});
  REQUIRE_FALSE(is_essentially_surjective(dis_hom(twice)));
}

TEST_CASE("pi0_hom and pi1_hom on pinned chain maps") {
  SECTION("projection recovers a discrete surjection") {
    AbHom red3 = make_hom(free_group(1), cyclic_group(3), IntMatrix{{1}});
    AbHom p = pi0_hom(dis_hom(red3));
    REQUIRE(is_surjective(p));
    REQUIRE(p.matrix == red3.matrix);
  }
  SECTION("identity chain map") {
    PicardComplex a = z_times2_z();
    REQUIRE(hom_equal(pi0_hom(identity_chain(a)), identity_hom(pi0(a).group)));
    REQUIRE(hom_equal(pi1_hom(identity_chain(a)), identity_hom(pi1(a).group)));
  }
  SECTION("reduction onto the discrete quotient") {
    PicardComplex a = z_times2_z();
    PicardComplex b = dis(cyclic_group(2));
    ChainHom f = make_chain_hom(a, b, make_hom(a.c1, b.c1, IntMatrix(0, 1)),
                                make_hom(a.c0, b.c0, IntMatrix{{1}}));
    REQUIRE(is_isomorphism(pi0_hom(f)));
  }
  SECTION("level-1 reduction dies on the kernel") {
    PicardComplex a = make_complex(cyclic_group(4), cyclic_group(4),
                                   make_hom(cyclic_group(4), cyclic_group(4), IntMatrix{{2}}));
    PicardComplex b = make_complex(cyclic_group(2), cyclic_group(2),
                                   zero_hom(cyclic_group(2), cyclic_group(2)));
    ChainHom f = make_chain_hom(a, b, make_hom(a.c1, b.c1, IntMatrix{{1}}),
                                make_hom(a.c0, b.c0, IntMatrix{{1}}));
    REQUIRE(is_zero_hom(pi1_hom(f)));
    REQUIRE_FALSE(is_faithful(f));
  }
}

TEST_CASE("predicates on pinned chain maps") {
  PicardComplex a = z_times2_z();
  ChainHom h = canonical_H(a);
  REQUIRE(is_full(h));
  REQUIRE(is_essentially_surjective(h));

  ChainHom id = identity_chain(a);
  REQUIRE(is_faithful(id));
  REQUIRE(is_full(id));
  REQUIRE(is_essentially_surjective(id));
  REQUIRE(is_equivalence(id));

  // Doubling on dis(Z): an isomorphism onto a subgroupoid.  Hom-sets map
  // bijectively (all of them are empty or a single identity), so the functor
  // is full and faithful; it misses every odd object.
  AbHom twice = make_hom(free_group(1), free_group(1), IntMatrix{{2}});
  ChainHom d = dis_hom(twice);
  REQUIRE(is_faithful(d));
  REQUIRE(is_full(d));
  REQUIRE_FALSE(is_essentially_surjective(d));
  OracleVerdict ov = oracle_predicate(
      dis_hom(make_hom(cyclic_group(3), cyclic_group(6), IntMatrix{{2}})), Predicate::Full);
  REQUIRE(ov.verdict ==
          is_full(dis_hom(make_hom(cyclic_group(3), cyclic_group(6), IntMatrix{{2}}))));
}

TEST_CASE("check_2morphism") {
  PicardComplex a = z_times2_z();
  ChainHom id = identity_chain(a);
  REQUIRE(check_2morphism(zero_homotopy(id)));

  // A homotopy that shifts f0 off target must fail the object condition.
  Homotopy bad = make_homotopy(id, id, make_hom(a.c0, a.c1, IntMatrix{{1}}));
  REQUIRE_FALSE(check_2morphism(bad));

  ChainHom shifted = make_chain_hom(
      a, a, hom_add(id.f1, compose(make_hom(a.c0, a.c1, IntMatrix{{1}}), a.delta)),
      hom_add(id.f0, compose(a.delta, make_hom(a.c0, a.c1, IntMatrix{{1}}))));
  Homotopy good = make_homotopy(id, shifted, make_hom(a.c0, a.c1, IntMatrix{{1}}));
  REQUIRE(check_2morphism(good));

  REQUIRE_THROWS_AS(make_homotopy(id, dis_hom(identity_hom(free_group(1))),
                                  make_hom(a.c0, free_group(1), IntMatrix{{0}})),
                    invalid_input);
}

TEST_CASE("kernel2 on pinned chain maps") {
  SECTION("identity has trivial kernel") {
    Kernel2Result k = kernel2(identity_chain(dis(cyclic_group(4))));
    REQUIRE(is_trivial(pi0(k.k).group));
    REQUIRE(is_trivial(pi1(k.k).group));
  }
  SECTION("discrete reduction has kernel 2Z") {
    AbHom red = make_hom(free_group(1), cyclic_group(2), IntMatrix{{1}});
    Kernel2Result k = kernel2(dis_hom(red));
    Invariants inv = invariants(pi0(k.k).group);
    REQUIRE(inv.factors.empty());
    REQUIRE(inv.rank == 1);
    REQUIRE(is_trivial(pi1(k.k).group));
  }
  SECTION("kernel of the zero map is the whole source") {
    ChainHom z = zero_chain(dis(cyclic_group(2)), dis(cyclic_group(2)));
    Kernel2Result k = kernel2(z);
    REQUIRE(invariants(pi0(k.k).group).factors == std::vector<Int>{2});
    REQUIRE(is_trivial(pi1(k.k).group));
  }
}

TEST_CASE("cokernel2 on pinned chain maps") {
  SECTION("identity has trivial cokernel") {
    Cokernel2Result c = cokernel2(identity_chain(dis(cyclic_group(4))));
    REQUIRE(is_trivial(pi0(c.q).group));
    REQUIRE(is_trivial(pi1(c.q).group));
  }
  SECTION("doubling on dis(Z)") {
    AbHom twice = make_hom(free_group(1), free_group(1), IntMatrix{{2}});
    Cokernel2Result c = cokernel2(dis_hom(twice));
    REQUIRE(invariants(pi0(c.q).group).factors == std::vector<Int>{2});
  }
  SECTION("cokernel of the zero map keeps both homotopy groups") {
    ChainHom z = zero_chain(dis(cyclic_group(3)), dis(cyclic_group(3)));
    Cokernel2Result c = cokernel2(z);
    REQUIRE(invariants(pi0(c.q).group).factors == std::vector<Int>{3});
    REQUIRE(invariants(pi1(c.q).group).factors == std::vector<Int>{3});
  }
}

TEST_CASE("two-exactness witnesses on pinned triples") {
  SECTION("kernel inclusion followed by the map") {
    ChainHom f = dis_hom(make_hom(free_group(1), cyclic_group(2), IntMatrix{{1}}));
    Kernel2Result k = kernel2(f);
    TwoExactnessCert cert = two_exactness_witnesses(k.incl, f, k.eps.t);
    REQUIRE(cert.gamma0_full);
    REQUIRE(cert.gamma0_esssurj);
    REQUIRE(cert.condition1());
    REQUIRE(cert.condition2());
  }
  SECTION("the map followed by its cokernel projection") {
    ChainHom f = dis_hom(make_hom(free_group(1), free_group(1), IntMatrix{{2}}));
    Cokernel2Result c = cokernel2(f);
    TwoExactnessCert cert = two_exactness_witnesses(f, c.proj, c.pi.t);
    REQUIRE(cert.sigma0_full);
    REQUIRE(cert.sigma0_faithful);
    REQUIRE(cert.condition1());
    REQUIRE(cert.condition2());
  }
  SECTION("zero maps are not exact through a nonzero middle") {
    PicardComplex b = dis(cyclic_group(2));
    TwoExactnessCert cert =
        two_exactness_witnesses(zero_chain(b, b), zero_chain(b, b),
                                zero_hom(b.c0, b.c1));
    REQUIRE_FALSE(cert.gamma0_esssurj);
    REQUIRE_FALSE(cert.condition1());
    REQUIRE_FALSE(cert.condition2());
  }
}

TEST_CASE("is_2exact on the classical short exact sequence") {
  PicardComplex dz = dis(free_group(1));
  ChainHom gamma = dis_hom(make_hom(free_group(1), free_group(1), IntMatrix{{2}}));
  ChainHom sigma = dis_hom(make_hom(free_group(1), cyclic_group(2), IntMatrix{{1}}));
  AbHom phi = zero_hom(dz.c0, dis(cyclic_group(2)).c1);
  REQUIRE(is_2exact(gamma, sigma, phi));

  ExtensionReport ext = extension_report(gamma, sigma, phi);
  REQUIRE(ext.condition1);
  REQUIRE(ext.condition2);
  REQUIRE(ext.condition3);
  REQUIRE(is_extension(gamma, sigma, phi));
}

TEST_CASE("is_extension degenerate cases") {
  SECTION("B extends 0 by B") {
    PicardComplex b = dis(cyclic_group(4));
    ChainHom gamma = zero_chain(zero_complex(), b);
    ChainHom sigma = identity_chain(b);
    AbHom phi = zero_hom(zero_group(), b.c1);
    REQUIRE(is_extension(gamma, sigma, phi));
  }
  SECTION("identity composite rejects the zero null homotopy") {
    PicardComplex b = dis(cyclic_group(2));
    ChainHom id = identity_chain(b);
    REQUIRE_THROWS_AS(is_extension(id, id, zero_hom(b.c0, b.c1)), invalid_input);
    PicardComplex z = zero_complex();
    REQUIRE(is_extension(identity_chain(z), identity_chain(z), zero_hom(z.c0, z.c1)));
  }
}

TEST_CASE("canonical_H on pinned complexes") {
  REQUIRE(chain_hom_equal(canonical_H(dis(cyclic_group(6))),
                          identity_chain(dis(cyclic_group(6)))));

  PicardComplex a = z_times2_z();
  ChainHom h = canonical_H(a);
  REQUIRE(invariants(h.dst.c0).factors == std::vector<Int>{2});
  REQUIRE(is_full(h));
  REQUIRE(is_essentially_surjective(h));

  PicardComplex onto = make_complex(free_group(1), free_group(1),
                                    make_hom(free_group(1), free_group(1), IntMatrix{{1}}));
  ChainHom h2 = canonical_H(onto);
  REQUIRE(is_trivial(pi0(h2.dst).group));
  REQUIRE(is_full(h2));
  REQUIRE(is_essentially_surjective(h2));
}

TEST_CASE("is_discrete_free") {
  REQUIRE(is_discrete_free(dis(free_group(3))));
  REQUIRE(is_discrete_free(zero_complex()));
  REQUIRE_FALSE(is_discrete_free(dis(cyclic_group(2))));
  REQUIRE_FALSE(is_discrete_free(make_complex(free_group(1), free_group(1),
                                              zero_hom(free_group(1), free_group(1)))));
}

TEST_CASE("lift_discrete_free on pinned instances") {
  SECTION("lift through the identity") {
    PicardComplex p = dis(free_group(1));
    PicardComplex b = dis(cyclic_group(2));
    ChainHom g = dis_hom(make_hom(free_group(1), cyclic_group(2), IntMatrix{{1}}));
    LiftResult r = lift_discrete_free(g, identity_chain(b));
    REQUIRE(chain_hom_equal(r.gprime, g));
    REQUIRE(r.h.t.matrix.is_zero());
    REQUIRE(check_2morphism(r.h));
  }
  SECTION("lift a discrete reduction through another") {
    ChainHom g = dis_hom(make_hom(free_group(1), cyclic_group(2), IntMatrix{{1}}));
    ChainHom f = dis_hom(make_hom(free_group(1), cyclic_group(2), IntMatrix{{1}}));
    LiftResult r = lift_discrete_free(g, f);
    REQUIRE(r.gprime.f0.matrix == IntMatrix{{1}});
    REQUIRE(r.h.t.matrix == IntMatrix(0, 1));
    REQUIRE(check_2morphism(r.h));
    REQUIRE(chain_hom_equal(r.h.to, g));
    REQUIRE(chain_hom_equal(r.h.from, compose_chain(f, r.gprime)));
  }
  SECTION("lift through the canonical projection") {
    PicardComplex a = z_times2_z();
    ChainHom f = canonical_H(a);
    ChainHom g = make_chain_hom(dis(free_group(1)), f.dst,
                                make_hom(zero_group(), f.dst.c1, IntMatrix(0, 0)),
                                make_hom(free_group(1), f.dst.c0, IntMatrix{{1}}));
    LiftResult r = lift_discrete_free(g, f);
    REQUIRE(r.gprime.f0.matrix == IntMatrix{{1}});
    REQUIRE(r.h.t.matrix.is_zero());
    REQUIRE(check_2morphism(r.h));
  }
  SECTION("rejections") {
    PicardComplex b = dis(cyclic_group(2));
    ChainHom g = zero_chain(dis(cyclic_group(2)), b);
    REQUIRE_THROWS_AS(lift_discrete_free(g, identity_chain(b)), invalid_input);
    ChainHom g2 = zero_chain(dis(free_group(1)), b);
    ChainHom not_onto = zero_chain(dis(free_group(1)), b);
    REQUIRE_THROWS_AS(lift_discrete_free(g2, not_onto), invalid_input);
  }
}

TEST_CASE("projective_presentation on pinned complexes") {
  SECTION("Z doubling on itself") {
    PicardComplex a = z_times2_z();
    Presentation pr = projective_presentation(a);
    REQUIRE(pr.p.c0 == free_group(1));
    REQUIRE(is_trivial(pr.p.c1));
    REQUIRE(pr.f.f0.matrix == IntMatrix{{1}});
    REQUIRE(pr.cert.discrete_free);
    REQUIRE(pr.cert.essentially_surjective);
    REQUIRE(pr.cert.identity_homotopy);
    REQUIRE(is_surjective(pi0_hom(pr.f)));
  }
  SECTION("zero complex") {
    Presentation pr = projective_presentation(dis(zero_group()));
    REQUIRE(pr.p.c0.gens == 0);
    REQUIRE(pr.cert.discrete_free);
    REQUIRE(pr.cert.essentially_surjective);
    REQUIRE(pr.cert.identity_homotopy);
  }
  SECTION("two canonical generators") {
    Presentation pr = projective_presentation(dis(make_group(2, IntMatrix{{2, 0}, {0, 4}})));
    REQUIRE(pr.p.c0 == free_group(2));
    REQUIRE(pr.cert.discrete_free);
    REQUIRE(pr.cert.essentially_surjective);
    REQUIRE(pr.cert.identity_homotopy);
  }
}

TEST_CASE("pi0_hom and pi1_hom are functorial") {
  std::mt19937_64 rng(201);
  for (int trial = 0; trial < 40; ++trial) {
    ChainHom f = testsupport::random_mixed_chain_hom(rng);
    REQUIRE(hom_equal(pi0_hom(identity_chain(f.src)), identity_hom(pi0(f.src).group)));
    REQUIRE(hom_equal(pi1_hom(identity_chain(f.src)), identity_hom(pi1(f.src).group)));

    ChainHom g = [&] {
      switch (testsupport::rand_ll(rng, 0, 2)) {
        case 0: return testsupport::scalar_endo(f.dst, testsupport::rand_ll(rng, -2, 2));
        case 1: return canonical_H(f.dst);
        default: return cokernel2(f).proj;
      }
    }();
    ChainHom gf = compose_chain(g, f);
    REQUIRE(hom_equal(pi0_hom(gf), compose(pi0_hom(g), pi0_hom(f))));
    REQUIRE(hom_equal(pi1_hom(gf), compose(pi1_hom(g), pi1_hom(f))));
  }
}

TEST_CASE("discrete surjections and essential surjectivity round trip") {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 40; ++trial) {
    FinGenAbGroup dst = testsupport::random_group(rng, 2, 1);
    FreeCover fc = free_cover(dst);
    REQUIRE(is_essentially_surjective(dis_hom(fc.cover)));

    ChainHom f = testsupport::random_esssurj(rng, false);
    REQUIRE(is_surjective(pi0_hom(f)));
  }
}

TEST_CASE("canonical_H is full and essentially surjective on random complexes") {
  std::mt19937_64 rng(203);
  for (int trial = 0; trial < 30; ++trial) {
    ChainHom h = canonical_H(testsupport::random_complex(rng));
    REQUIRE(is_full(h));
    REQUIRE(is_essentially_surjective(h));
  }
}

TEST_CASE("kernel2 and cokernel2 contracts on random chain maps") {
  std::mt19937_64 rng(204);
  for (int trial = 0; trial < 40; ++trial) {
    ChainHom f = testsupport::random_mixed_chain_hom(rng);

    Kernel2Result k = kernel2(f);
    REQUIRE(is_faithful(k.incl));
    REQUIRE(check_2morphism(k.eps));
    REQUIRE(chain_hom_equal(k.eps.from, compose_chain(f, k.incl)));
    REQUIRE(same_invariants(pi1(k.k).group, kernel(pi1_hom(f)).group));

    Cokernel2Result c = cokernel2(f);
    REQUIRE(is_essentially_surjective(c.proj));
    REQUIRE(check_2morphism(c.pi));
    REQUIRE(chain_hom_equal(c.pi.from, compose_chain(c.proj, f)));
    REQUIRE(same_invariants(pi0(c.q).group, cokernel(pi0_hom(f)).group));
  }
}

TEST_CASE("definition-level equivalences on random valid triples") {
  std::mt19937_64 rng(205);
  int exact_seen = 0, inexact_seen = 0;
  for (int trial = 0; trial < 30; ++trial) {
    testsupport::Triple t = testsupport::random_triple(rng);
    TwoExactnessCert cert = two_exactness_witnesses(t.gamma, t.sigma, t.phi);
    REQUIRE(cert.condition1() == cert.condition2());
    (cert.condition1() ? exact_seen : inexact_seen)++;

    ExtensionReport ext = extension_report(t.gamma, t.sigma, t.phi);
    REQUIRE(ext.condition1 == ext.condition2);
    REQUIRE(ext.condition2 == ext.condition3);
  }
  REQUIRE(exact_seen > 0);
  REQUIRE(inexact_seen > 0);
}

TEST_CASE("lift_discrete_free against random essentially surjective maps") {
  std::mt19937_64 rng(206);
  for (int trial = 0; trial < 10; ++trial) {
    ChainHom f = testsupport::random_esssurj(rng, false);
    int rank = int(testsupport::rand_ll(rng, 0, 2));
    ChainHom g = testsupport::random_free_source_hom(rng, rank, f.dst);
    LiftResult r = lift_discrete_free(g, f);
    REQUIRE(check_2morphism(r.h));
    REQUIRE(chain_hom_equal(r.h.to, g));
    REQUIRE(chain_hom_equal(r.h.from, compose_chain(f, r.gprime)));
  }
}

TEST_CASE("projective_presentation on random complexes") {
  std::mt19937_64 rng(207);
  for (int trial = 0; trial < 15; ++trial) {
    PicardComplex a = testsupport::random_complex(rng);
    Presentation pr = projective_presentation(a);
    REQUIRE(pr.cert.discrete_free);
    REQUIRE(pr.cert.essentially_surjective);
    REQUIRE(pr.cert.identity_homotopy);
    REQUIRE(is_discrete_free(pr.p));
    REQUIRE(is_essentially_surjective(pr.f));
    // The composite with the canonical projection is the dis-image of the
    // free cover, on the nose.
    ChainHom composite = compose_chain(canonical_H(a), pr.f);
    ChainHom cover = dis_hom(free_cover(pi0(a).group).cover);
    REQUIRE(composite.f0.matrix == cover.f0.matrix);
    REQUIRE(composite.f1.matrix == cover.f1.matrix);
  }
}
