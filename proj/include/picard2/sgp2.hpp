#pragma once

// Symmetric 2-groups modeled as 2-term chain complexes of finitely generated
// abelian groups, delta: C1 -> C0.  Objects of the associated groupoid are
// elements of C0; a morphism x -> y is an element c of C1 with y = x + delta(c).
// Chain maps are the strict morphisms, homotopies are the 2-morphisms.

#include "picard2/abgroup.hpp"

#include <optional>
#include <stdexcept>

namespace picard2 {

struct PicardComplex {
  FinGenAbGroup c1, c0;
  AbHom delta;  // c1 -> c0

  bool operator==(const PicardComplex& o) const {
    return c1 == o.c1 && c0 == o.c0 && delta.matrix == o.delta.matrix;
  }
  bool operator!=(const PicardComplex& o) const { return !(*this == o); }
};

inline PicardComplex make_complex(FinGenAbGroup c1, FinGenAbGroup c0, AbHom delta) {
  if (delta.src != c1 || delta.dst != c0)
    throw invalid_input("make_complex: delta endpoints do not match c1, c0");
  return PicardComplex{std::move(c1), std::move(c0), std::move(delta)};
}

// Discrete complex on a group: no morphisms besides identities.
inline PicardComplex dis(const FinGenAbGroup& g) {
  FinGenAbGroup z = zero_group();
  return PicardComplex{z, g, zero_hom(z, g)};
}

inline PicardComplex zero_complex() { return dis(zero_group()); }

struct Pi0Result {
  FinGenAbGroup group;
  AbHom proj;  // c0 -> group
};

inline Pi0Result pi0(const PicardComplex& a) {
  CokernelResult c = cokernel(a.delta);
  return Pi0Result{c.group, c.proj};
}

struct Pi1Result {
  FinGenAbGroup group;
  AbHom incl;  // group -> c1
};

inline Pi1Result pi1(const PicardComplex& a) {
  KernelResult k = kernel(a.delta);
  return Pi1Result{k.group, k.incl};
}

inline bool is_finite_complex(const PicardComplex& a) {
  return group_order(a.c0).has_value() && group_order(a.c1).has_value();
}

// ---------------------------------------------------------------------------
// Chain maps

struct ChainHom {
  PicardComplex src, dst;
  AbHom f1, f0;
};

inline ChainHom make_chain_hom(PicardComplex src, PicardComplex dst, AbHom f1, AbHom f0) {
  if (f1.src != src.c1 || f1.dst != dst.c1 || f0.src != src.c0 || f0.dst != dst.c0)
    throw invalid_input("make_chain_hom: level maps do not match the complexes");
  if (!hom_equal(compose(f0, src.delta), compose(dst.delta, f1)))
    throw invalid_input("make_chain_hom: chain square does not commute");
  return ChainHom{std::move(src), std::move(dst), std::move(f1), std::move(f0)};
}

inline ChainHom identity_chain(const PicardComplex& a) {
  return ChainHom{a, a, identity_hom(a.c1), identity_hom(a.c0)};
}

inline ChainHom zero_chain(const PicardComplex& a, const PicardComplex& b) {
  return ChainHom{a, b, zero_hom(a.c1, b.c1), zero_hom(a.c0, b.c0)};
}

inline ChainHom compose_chain(const ChainHom& g, const ChainHom& f) {
  if (f.dst != g.src) throw invalid_input("compose_chain: middle complexes differ");
  return ChainHom{f.src, g.dst, compose(g.f1, f.f1), compose(g.f0, f.f0)};
}

inline ChainHom dis_hom(const AbHom& f) {
  PicardComplex s = dis(f.src), d = dis(f.dst);
  return ChainHom{s, d, zero_hom(s.c1, d.c1), f};
}

inline bool chain_hom_equal(const ChainHom& f, const ChainHom& g) {
  return f.src == g.src && f.dst == g.dst && hom_equal(f.f1, g.f1) && hom_equal(f.f0, g.f0);
}

// Induced maps on homotopy groups.
inline AbHom pi0_hom(const ChainHom& f) {
  Pi0Result s = pi0(f.src), d = pi0(f.dst);
  return make_hom(s.group, d.group, f.f0.matrix);
}

inline AbHom pi1_hom(const ChainHom& f) {
  Pi1Result s = pi1(f.src), d = pi1(f.dst);
  auto m = solve_preimage_mat(d.incl, f.f1.matrix * s.incl.matrix);
  if (!m) throw invalid_input("pi1_hom: image of pi1 escaped the target kernel");
  return make_hom(s.group, d.group, *m);
}

// ---------------------------------------------------------------------------
// Predicates.  In this model the groupoid-level properties reduce to the
// induced maps: faithful <-> pi1 injective; full <-> pi1 surjective and pi0
// injective; essentially surjective <-> pi0 surjective.

inline bool is_faithful(const ChainHom& f) { return is_injective(pi1_hom(f)); }

inline bool is_full(const ChainHom& f) {
  return is_surjective(pi1_hom(f)) && is_injective(pi0_hom(f));
}

inline bool is_essentially_surjective(const ChainHom& f) { return is_surjective(pi0_hom(f)); }

inline bool is_equivalence(const ChainHom& f) {
  return is_faithful(f) && is_full(f) && is_essentially_surjective(f);
}

// ---------------------------------------------------------------------------
// Homotopies (2-morphisms) t: F => G between parallel chain maps.
// Conditions: g0 = f0 + delta_dst o t  and  t o delta_src = g1 - f1.

struct Homotopy {
  ChainHom from, to;
  AbHom t;  // from.src.c0 -> from.dst.c1
};

inline Homotopy make_homotopy(ChainHom from, ChainHom to, AbHom t) {
  if (from.src != to.src || from.dst != to.dst)
    throw invalid_input("make_homotopy: chain maps are not parallel");
  if (t.src != from.src.c0 || t.dst != from.dst.c1)
    throw invalid_input("make_homotopy: component endpoints do not match");
  return Homotopy{std::move(from), std::move(to), std::move(t)};
}

inline Homotopy zero_homotopy(const ChainHom& f) {
  return Homotopy{f, f, zero_hom(f.src.c0, f.dst.c1)};
}

inline bool check_2morphism(const Homotopy& h) {
  bool obj = hom_equal(h.to.f0, hom_add(h.from.f0, compose(h.from.dst.delta, h.t)));
  bool nat = hom_equal(compose(h.t, h.from.src.delta), hom_sub(h.to.f1, h.from.f1));
  return obj && nat;
}

// Canonical projection A -> dis(pi0(A)).
inline ChainHom canonical_H(const PicardComplex& a) {
  Pi0Result p = pi0(a);
  PicardComplex d = dis(p.group);
  return make_chain_hom(a, d, zero_hom(a.c1, d.c1), p.proj);
}

// ---------------------------------------------------------------------------
// Kernel and cokernel in the 2-categorical sense

struct Kernel2Result {
  PicardComplex k;
  ChainHom incl;  // k -> src of f
  Homotopy eps;   // f o incl => 0
};

// K0 = ker[f0 | delta_B] inside A.c0 + B.c1; K1 = A.c1 with
// delta_K(a) = (delta_A a, -f1 a).  incl projects to the A.c0 part, the
// homotopy component eps is the B.c1 part.
inline Kernel2Result kernel2(const ChainHom& f) {
  const PicardComplex& a = f.src;
  const PicardComplex& b = f.dst;
  DirectSum s = direct_sum(a.c0, b.c1);
  AbHom phi = make_hom(s.group, b.c0, hstack(f.f0.matrix, b.delta.matrix));
  KernelResult kr = kernel(phi);
  FinGenAbGroup k0 = kr.group;

  IntMatrix amb = vstack(a.delta.matrix, -f.f1.matrix);
  auto dk = solve_preimage_mat(kr.incl, amb);
  if (!dk) throw invalid_input("kernel2: differential image escaped the kernel");
  PicardComplex k = make_complex(a.c1, k0, make_hom(a.c1, k0, *dk));

  AbHom incl0 = make_hom(k0, a.c0, kr.incl.matrix.top_rows(a.c0.gens));
  ChainHom incl = make_chain_hom(k, a, identity_hom(a.c1), incl0);

  AbHom t = make_hom(k0, b.c1, kr.incl.matrix.bottom_rows(b.c1.gens));
  Homotopy eps = make_homotopy(compose_chain(f, incl), zero_chain(k, b), std::move(t));
  if (!check_2morphism(eps)) throw invalid_input("kernel2: eps is not a 2-morphism");
  return Kernel2Result{std::move(k), std::move(incl), std::move(eps)};
}

struct Cokernel2Result {
  PicardComplex q;
  ChainHom proj;  // dst of f -> q
  Homotopy pi;    // proj o f => 0
};

// Q0 = B.c0; Q1 = (B.c1 + A.c0) / <(f1 a, -delta_A a)> with
// delta_Q = [delta_B | f0].  proj includes B.c1 into the first block, the
// homotopy component is minus the second block.
inline Cokernel2Result cokernel2(const ChainHom& f) {
  const PicardComplex& a = f.src;
  const PicardComplex& b = f.dst;
  int q1g = b.c1.gens + a.c0.gens;
  IntMatrix graph = hstack(f.f1.matrix.transposed(), -a.delta.matrix.transposed());
  FinGenAbGroup q1{q1g, vstack(block_diag(b.c1.rels, a.c0.rels), graph)};
  AbHom dq = make_hom(q1, b.c0, hstack(b.delta.matrix, f.f0.matrix));
  PicardComplex q = make_complex(q1, b.c0, dq);

  IntMatrix injm(q1g, b.c1.gens);
  for (int j = 0; j < b.c1.gens; ++j) injm.at(j, j) = 1;
  ChainHom proj = make_chain_hom(b, q, make_hom(b.c1, q1, injm), identity_hom(b.c0));

  IntMatrix tm(q1g, a.c0.gens);
  for (int j = 0; j < a.c0.gens; ++j) tm.at(b.c1.gens + j, j) = -1;
  Homotopy pi = make_homotopy(compose_chain(proj, f), zero_chain(a, q),
                              make_hom(a.c0, q1, tm));
  if (!check_2morphism(pi)) throw invalid_input("cokernel2: pi is not a 2-morphism");
  return Cokernel2Result{std::move(q), std::move(proj), std::move(pi)};
}

// ---------------------------------------------------------------------------
// 2-exactness of A --gamma--> B --sigma--> C with null homotopy
// phi: sigma o gamma => 0

struct TwoExactnessCert {
  Kernel2Result ker;     // kernel of sigma
  Cokernel2Result coker; // cokernel of gamma
  ChainHom gamma0;       // A -> Ker(sigma), factoring gamma
  ChainHom sigma0;       // Coker(gamma) -> C, factoring sigma
  bool gamma0_full = false, gamma0_esssurj = false;
  bool sigma0_full = false, sigma0_faithful = false;

  bool condition1() const { return gamma0_full && gamma0_esssurj; }
  bool condition2() const { return sigma0_full && sigma0_faithful; }
};

// phi is the component of a null homotopy sigma o gamma => 0, as a
// homomorphism A.c0 -> C.c1.  Rejected unless it satisfies the 2-morphism
// equations.
inline TwoExactnessCert two_exactness_witnesses(const ChainHom& gamma, const ChainHom& sigma,
                                                const AbHom& phi) {
  if (gamma.dst != sigma.src) throw invalid_input("two_exactness: maps do not compose");
  Homotopy null = make_homotopy(compose_chain(sigma, gamma),
                                zero_chain(gamma.src, sigma.dst), phi);
  if (!check_2morphism(null))
    throw invalid_input("two_exactness: phi is not a null homotopy of sigma o gamma");

  TwoExactnessCert cert{kernel2(sigma), cokernel2(gamma), {}, {}, false, false, false, false};

  // Gamma0 at level 0 sends a to (gamma0(a), phi(a)) read in K0 coordinates.
  const PicardComplex& b = gamma.dst;
  DirectSum s = direct_sum(b.c0, sigma.dst.c1);
  AbHom amb = make_hom(cert.ker.k.c0, s.group,
                       vstack(cert.ker.incl.f0.matrix, cert.ker.eps.t.matrix));
  auto g0 = solve_preimage_mat(amb, vstack(gamma.f0.matrix, phi.matrix));
  if (!g0) throw invalid_input("two_exactness: gamma does not factor through ker(sigma)");
  cert.gamma0 = make_chain_hom(gamma.src, cert.ker.k, gamma.f1,
                               make_hom(gamma.src.c0, cert.ker.k.c0, *g0));

  // Sigma0 at level 1 is [sigma1 | -phi] on (B.c1 + A.c0) / relations.
  AbHom s1 = make_hom(cert.coker.q.c1, sigma.dst.c1,
                      hstack(sigma.f1.matrix, -phi.matrix));
  cert.sigma0 = make_chain_hom(cert.coker.q, sigma.dst, std::move(s1), sigma.f0);

  cert.gamma0_full = is_full(cert.gamma0);
  cert.gamma0_esssurj = is_essentially_surjective(cert.gamma0);
  cert.sigma0_full = is_full(cert.sigma0);
  cert.sigma0_faithful = is_faithful(cert.sigma0);
  return cert;
}

inline bool is_2exact(const ChainHom& gamma, const ChainHom& sigma, const AbHom& phi) {
  return two_exactness_witnesses(gamma, sigma, phi).condition1();
}

struct ExtensionReport {
  TwoExactnessCert cert;
  bool condition1 = false;  // 2-exact, gamma faithful, sigma essentially surjective
  bool condition2 = false;  // gamma0 equivalence, sigma essentially surjective
  bool condition3 = false;  // gamma faithful, sigma0 equivalence
};

inline ExtensionReport extension_report(const ChainHom& gamma, const ChainHom& sigma,
                                        const AbHom& phi) {
  ExtensionReport r{two_exactness_witnesses(gamma, sigma, phi), false, false, false};
  bool gfaithful = is_faithful(gamma);
  bool sess = is_essentially_surjective(sigma);
  r.condition1 = r.cert.condition1() && gfaithful && sess;
  r.condition2 = is_equivalence(r.cert.gamma0) && sess;
  r.condition3 = gfaithful && is_equivalence(r.cert.sigma0);
  return r;
}

inline bool is_extension(const ChainHom& gamma, const ChainHom& sigma, const AbHom& phi) {
  return extension_report(gamma, sigma, phi).condition1;
}

// ---------------------------------------------------------------------------
// Discrete free objects and lifting

// P is discrete free when its differential is the zero morphism, pi1 is
// trivial, and pi0 is free.  Such a P presents dis(Z^k).
inline bool is_discrete_free(const PicardComplex& p) {
  return is_zero_hom(p.delta) && is_trivial(pi1(p).group) &&
         invariants(pi0(p).group).factors.empty();
}

struct LiftResult {
  ChainHom gprime;  // P -> A
  Homotopy h;       // F o gprime => G
};

// Lift G: P -> B through an essentially surjective F: A -> B when P is
// discrete free.  The level-0 map is chosen on a canonical free basis of
// P.c0 by lifting pi0(G) through pi0(F) and pulling representatives back
// along the pi0 projection of A; the homotopy component repairs the
// remaining defect inside im(delta_B).
inline LiftResult lift_discrete_free(const ChainHom& g, const ChainHom& f) {
  if (g.dst != f.dst) throw invalid_input("lift_discrete_free: targets differ");
  const PicardComplex& p = g.src;
  const PicardComplex& a = f.src;
  const PicardComplex& b = f.dst;
  if (!is_discrete_free(p)) throw invalid_input("lift_discrete_free: source is not discrete free");
  if (!is_essentially_surjective(f))
    throw invalid_input("lift_discrete_free: f is not essentially surjective");

  Pi0Result pa = pi0(a);
  AbHom g0 = pi0_hom(g), f0 = pi0_hom(f);

  // Free basis for pi0(P); the canonical group of P.c0 itself also works and
  // keeps coordinates aligned with P.c0.
  Canonical cp = canonicalize(g0.src);
  AbHom on_basis = compose(g0, cp.from_canonical);
  AbHom lifted = lift_free(on_basis, f0);  // canonical -> pi0(A)

  // Pull each basis image back along the projection A.c0 -> pi0(A).
  IntMatrix reps(a.c0.gens, cp.group.gens);
  for (int j = 0; j < cp.group.gens; ++j) {
    auto x = solve_preimage(pa.proj, lifted.matrix.col(j));
    if (!x) throw invalid_input("lift_discrete_free: pi0 projection preimage missing");
    for (int i = 0; i < a.c0.gens; ++i) reps.at(i, j) = x->at(i, 0);
  }
  AbHom chi{cp.group, a.c0, std::move(reps)};  // free source, always a hom
  AbHom gp0 = compose(chi, cp.to_canonical);   // P.c0 -> A.c0
  ChainHom gprime = make_chain_hom(p, a, zero_hom(p.c1, a.c1),
                                   AbHom{p.c0, a.c0, gp0.matrix});

  // Homotopy component: solve delta_B(u) = (g0 - f0 gprime0)(basis element).
  AbHom defect = hom_sub(g.f0, compose(f.f0, gprime.f0));
  IntMatrix tvals(b.c1.gens, cp.group.gens);
  for (int j = 0; j < cp.group.gens; ++j) {
    auto u = solve_preimage(b.delta, defect.matrix * cp.from_canonical.matrix.col(j));
    if (!u) throw invalid_input("lift_discrete_free: homotopy defect not in im(delta)");
    for (int i = 0; i < b.c1.gens; ++i) tvals.at(i, j) = u->at(i, 0);
  }
  AbHom tau{cp.group, b.c1, std::move(tvals)};
  AbHom t = compose(tau, cp.to_canonical);
  Homotopy h = make_homotopy(compose_chain(f, gprime), g, AbHom{p.c0, b.c1, t.matrix});
  if (!check_2morphism(h)) throw invalid_input("lift_discrete_free: constructed h fails");
  return LiftResult{std::move(gprime), std::move(h)};
}

struct PresentationCert {
  bool discrete_free = false;
  bool essentially_surjective = false;
  bool identity_homotopy = false;  // canonical_H(A) o F equals dis of the cover on the nose
};

struct Presentation {
  PicardComplex p;
  ChainHom f;  // p -> a
  PresentationCert cert;
};

// Projective presentation: P = dis(free cover of pi0(A)) with F the cover
// matrix in level 0.  The witness that P was built from pi0(A) itself:
// composing with the canonical projection A -> dis(pi0 A) returns the cover
// map exactly, not merely up to homotopy.
inline Presentation projective_presentation(const PicardComplex& a) {
  Pi0Result p0 = pi0(a);
  FreeCover fc = free_cover(p0.group);
  PicardComplex p = dis(fc.free);
  ChainHom f = make_chain_hom(p, a, zero_hom(p.c1, a.c1),
                              AbHom{fc.free, a.c0, fc.cover.matrix});

  PresentationCert cert;
  cert.discrete_free = is_discrete_free(p);
  cert.essentially_surjective = is_essentially_surjective(f);
  ChainHom down = compose_chain(canonical_H(a), f);
  ChainHom target = dis_hom(fc.cover);
  cert.identity_homotopy =
      down.f0.matrix == target.f0.matrix && down.f1.matrix == target.f1.matrix;
  return Presentation{std::move(p), std::move(f), cert};
}

}  // namespace picard2
