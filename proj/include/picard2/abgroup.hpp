#pragma once

// Finitely generated abelian groups as cokernel presentations: a group is
// Z^gens modulo the row span of an integer relation matrix.  Homomorphisms
// are integer matrices acting on generator coordinates, validated to respect
// relations at construction time.

#include "picard2/int_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace picard2 {

struct FinGenAbGroup {
  int gens = 0;
  IntMatrix rels;  // rels.cols() == gens; each row is a relator

  bool operator==(const FinGenAbGroup& o) const { return gens == o.gens && rels == o.rels; }
  bool operator!=(const FinGenAbGroup& o) const { return !(*this == o); }
};

inline FinGenAbGroup make_group(int gens, IntMatrix rels) {
  if (gens < 0) throw invalid_input("make_group: negative generator count");
  if (rels.cols() != gens) throw invalid_input("make_group: relation width != gens");
  return FinGenAbGroup{gens, std::move(rels)};
}

inline FinGenAbGroup zero_group() { return FinGenAbGroup{0, IntMatrix(0, 0)}; }
inline FinGenAbGroup free_group(int n) { return make_group(n, IntMatrix(0, n)); }
inline FinGenAbGroup cyclic_group(const Int& n) {
  return make_group(1, IntMatrix{{n}});
}

// x is a generator-coordinate column; membership in the relation lattice.
inline bool is_relation(const FinGenAbGroup& g, const IntMatrix& x) {
  if (x.rows() != g.gens || x.cols() != 1) throw invalid_input("is_relation: bad coordinate shape");
  return solve_mat(g.rels.transposed(), x).has_value();
}

inline bool elements_equal(const FinGenAbGroup& g, const IntMatrix& x, const IntMatrix& y) {
  return is_relation(g, x - y);
}

// ---------------------------------------------------------------------------
// Homomorphisms

struct AbHom {
  FinGenAbGroup src, dst;
  IntMatrix matrix;  // dst.gens x src.gens, columns are images of generators
};

// Does the candidate matrix send every relator of src into the relation
// lattice of dst?  All columns are checked in one solve.
inline bool hom_well_defined(const FinGenAbGroup& src, const FinGenAbGroup& dst,
                             const IntMatrix& m) {
  if (m.rows() != dst.gens || m.cols() != src.gens) return false;
  IntMatrix images = m * src.rels.transposed();  // dst.gens x (#relators)
  return solve_mat(dst.rels.transposed(), images).has_value();
}

inline AbHom make_hom(FinGenAbGroup src, FinGenAbGroup dst, IntMatrix m) {
  if (m.rows() != dst.gens || m.cols() != src.gens)
    throw invalid_input("make_hom: matrix shape does not match groups");
  if (!hom_well_defined(src, dst, m))
    throw invalid_input("make_hom: matrix does not respect relations");
  return AbHom{std::move(src), std::move(dst), std::move(m)};
}

inline AbHom zero_hom(FinGenAbGroup src, FinGenAbGroup dst) {
  IntMatrix m(dst.gens, src.gens);
  return AbHom{std::move(src), std::move(dst), std::move(m)};
}

inline AbHom identity_hom(FinGenAbGroup g) {
  IntMatrix m = IntMatrix::identity(g.gens);
  return AbHom{g, g, std::move(m)};
}

inline AbHom compose(const AbHom& g, const AbHom& f) {
  if (f.dst != g.src) throw invalid_input("compose: middle objects differ");
  return AbHom{f.src, g.dst, g.matrix * f.matrix};
}

inline AbHom hom_add(const AbHom& f, const AbHom& g) {
  if (f.src != g.src || f.dst != g.dst) throw invalid_input("hom_add: endpoint mismatch");
  return AbHom{f.src, f.dst, f.matrix + g.matrix};
}

inline AbHom hom_sub(const AbHom& f, const AbHom& g) {
  if (f.src != g.src || f.dst != g.dst) throw invalid_input("hom_sub: endpoint mismatch");
  return AbHom{f.src, f.dst, f.matrix - g.matrix};
}

inline AbHom hom_neg(const AbHom& f) { return AbHom{f.src, f.dst, -f.matrix}; }

// Equality as morphisms: same endpoints, images agree modulo dst relations.
inline bool hom_equal(const AbHom& f, const AbHom& g) {
  if (f.src != g.src || f.dst != g.dst) return false;
  IntMatrix diff = f.matrix - g.matrix;
  return solve_mat(f.dst.rels.transposed(), diff).has_value();
}

inline bool is_zero_hom(const AbHom& f) {
  return solve_mat(f.dst.rels.transposed(), f.matrix).has_value();
}

// ---------------------------------------------------------------------------
// Invariants and canonical form

struct Invariants {
  std::vector<Int> factors;  // invariant factors >= 2, each dividing the next
  int rank = 0;              // free rank
};

inline Invariants invariants(const FinGenAbGroup& g) {
  SmithResult s = smith_normal_form(g.rels.transposed());
  Invariants inv;
  for (const Int& d : s.diag)
    if (d >= 2) inv.factors.push_back(d);
  inv.rank = g.gens - s.rank;
  return inv;
}

inline bool is_trivial(const FinGenAbGroup& g) {
  Invariants inv = invariants(g);
  return inv.factors.empty() && inv.rank == 0;
}

inline bool is_free(const FinGenAbGroup& g) { return invariants(g).factors.empty(); }

// Group order as a number; nullopt when infinite.
inline std::optional<Int> group_order(const FinGenAbGroup& g) {
  Invariants inv = invariants(g);
  if (inv.rank > 0) return std::nullopt;
  Int n = 1;
  for (const Int& d : inv.factors) n *= d;
  return n;
}

struct Canonical {
  FinGenAbGroup group;  // gens = factors + rank, rels = diag(factors) padded
  Invariants inv;
  AbHom to_canonical;    // original -> canonical, an isomorphism
  AbHom from_canonical;  // canonical -> original, its inverse
};

// Canonical presentation Z/d1 + ... + Z/dt + Z^r with explicit isomorphisms
// in both directions.  The relation lattice of g, written as columns, is
// diagonalized; canonical generators are the change-of-basis images whose
// diagonal entry is >= 2 or 0.
inline Canonical canonicalize(const FinGenAbGroup& g) {
  IntMatrix rt = g.rels.transposed();  // gens x relators, columns span the lattice
  SmithResult s = smith_normal_form(rt);
  int n = g.gens;
  int lim = std::min(n, rt.cols());

  std::vector<Int> full(n, 0);
  for (int i = 0; i < lim; ++i) full[i] = s.diag[i];

  std::vector<int> keep;  // indices of surviving canonical generators
  Invariants inv;
  for (int i = 0; i < n; ++i) {
    if (full[i] >= 2) {
      keep.push_back(i);
      inv.factors.push_back(full[i]);
    } else if (full[i] == 0) {
      keep.push_back(i);
      ++inv.rank;
    }
  }

  int k = int(keep.size());
  IntMatrix crels(int(inv.factors.size()), k);
  for (int i = 0; i < int(inv.factors.size()); ++i) crels.at(i, i) = inv.factors[i];
  FinGenAbGroup canon{k, crels};

  // In coordinates y = U*x the relation lattice is spanned by full[i]*e_i.
  IntMatrix uinv = unimodular_inverse(s.u);
  IntMatrix to_m(k, n), from_m(n, k);
  for (int j = 0; j < k; ++j) {
    for (int c = 0; c < n; ++c) to_m.at(j, c) = s.u.at(keep[j], c);
    for (int r = 0; r < n; ++r) from_m.at(r, j) = uinv.at(r, keep[j]);
  }

  Canonical out;
  out.group = canon;
  out.inv = inv;
  out.to_canonical = AbHom{g, canon, std::move(to_m)};
  out.from_canonical = AbHom{canon, g, std::move(from_m)};
  return out;
}

// ---------------------------------------------------------------------------
// Kernels, cokernels, images

struct KernelResult {
  FinGenAbGroup group;
  AbHom incl;  // group -> f.src, injective, f o incl = 0
};

inline KernelResult kernel(const AbHom& f) {
  int n = f.src.gens;
  // x lies in the kernel iff f(x) is a dst relation: [M | R_dst^T] (x; y) = 0.
  IntMatrix b = hstack(f.matrix, f.dst.rels.transposed());
  IntMatrix kb = kernel_basis(b);
  IntMatrix w = kb.top_rows(n);  // columns generate the kernel lattice in src coords
  int s = w.cols();
  // Relations among those generators: combinations landing in the src lattice.
  IntMatrix b2 = hstack(w, f.src.rels.transposed());
  IntMatrix kb2 = kernel_basis(b2);
  IntMatrix krels = kb2.top_rows(s).transposed();
  FinGenAbGroup kg{s, krels};
  return KernelResult{kg, make_hom(kg, f.src, w)};
}

struct CokernelResult {
  FinGenAbGroup group;
  AbHom proj;  // f.dst -> group, surjective, proj o f = 0
};

inline CokernelResult cokernel(const AbHom& f) {
  IntMatrix rels = vstack(f.dst.rels, f.matrix.transposed());
  FinGenAbGroup q{f.dst.gens, rels};
  return CokernelResult{q, AbHom{f.dst, q, IntMatrix::identity(f.dst.gens)}};
}

inline bool is_injective(const AbHom& f) { return is_trivial(kernel(f).group); }
inline bool is_surjective(const AbHom& f) { return is_trivial(cokernel(f).group); }
inline bool is_isomorphism(const AbHom& f) { return is_injective(f) && is_surjective(f); }

// ---------------------------------------------------------------------------
// Preimages and lifts

// Solve f(x) = y in the group sense: find coordinates x with
// f.matrix * x = y modulo dst relations.  Deterministic minimal solution via
// the Smith form of [M | R_dst^T]; nullopt when y is not in the image.
inline std::optional<IntMatrix> solve_preimage(const AbHom& f, const IntMatrix& y) {
  if (y.rows() != f.dst.gens || y.cols() != 1)
    throw invalid_input("solve_preimage: bad target shape");
  IntMatrix b = hstack(f.matrix, f.dst.rels.transposed());
  auto sol = solve_mat(b, y);
  if (!sol) return std::nullopt;
  return sol->top_rows(f.src.gens);
}

// Column-wise preimages: x with f.matrix * x = ys column by column, modulo
// dst relations.  nullopt when any column is outside the image.
inline std::optional<IntMatrix> solve_preimage_mat(const AbHom& f, const IntMatrix& ys) {
  if (ys.rows() != f.dst.gens) throw invalid_input("solve_preimage_mat: bad target shape");
  IntMatrix b = hstack(f.matrix, f.dst.rels.transposed());
  auto sol = solve_mat(b, ys);
  if (!sol) return std::nullopt;
  return sol->top_rows(f.src.gens);
}

// Free direct sum structure.
struct DirectSum {
  FinGenAbGroup group;
  AbHom inj1, inj2;    // components into the sum
  AbHom proj1, proj2;  // sum onto the components
};

inline DirectSum direct_sum(const FinGenAbGroup& a, const FinGenAbGroup& b) {
  FinGenAbGroup s{a.gens + b.gens, block_diag(a.rels, b.rels)};
  IntMatrix i1(s.gens, a.gens), i2(s.gens, b.gens);
  IntMatrix p1(a.gens, s.gens), p2(b.gens, s.gens);
  for (int j = 0; j < a.gens; ++j) { i1.at(j, j) = 1; p1.at(j, j) = 1; }
  for (int j = 0; j < b.gens; ++j) { i2.at(a.gens + j, j) = 1; p2.at(j, a.gens + j) = 1; }
  DirectSum out;
  out.group = s;
  out.inj1 = AbHom{a, s, std::move(i1)};
  out.inj2 = AbHom{b, s, std::move(i2)};
  out.proj1 = AbHom{s, a, std::move(p1)};
  out.proj2 = AbHom{s, b, std::move(p2)};
  return out;
}

struct FreeCover {
  FinGenAbGroup free;  // Z^k, k = #factors + rank of the target
  AbHom cover;         // free -> target, surjective
};

// Minimal free cover through the canonical decomposition: one free generator
// per invariant factor and per free rank.
inline FreeCover free_cover(const FinGenAbGroup& g) {
  Canonical c = canonicalize(g);
  int k = c.group.gens;
  FinGenAbGroup p = free_group(k);
  return FreeCover{p, AbHom{p, g, c.from_canonical.matrix}};
}

// Lift g through the surjection f: produce g' with f o g' = g.  Requires the
// common source of g to be free (no relators) and f surjective.
inline AbHom lift_free(const AbHom& g, const AbHom& f) {
  // Explicit zero relator rows are harmless; anything else is not free.
  if (!g.src.rels.is_zero()) throw invalid_input("lift_free: source is not a free presentation");
  if (g.dst != f.dst) throw invalid_input("lift_free: targets differ");
  if (!is_surjective(f)) throw invalid_input("lift_free: f is not surjective");
  IntMatrix lift(f.src.gens, g.src.gens);
  for (int j = 0; j < g.src.gens; ++j) {
    auto x = solve_preimage(f, g.matrix.col(j));
    if (!x) throw invalid_input("lift_free: preimage vanished under a surjection");
    for (int i = 0; i < f.src.gens; ++i) lift.at(i, j) = x->at(i, 0);
  }
  return AbHom{g.src, f.src, std::move(lift)};
}

// ---------------------------------------------------------------------------
// Finite enumeration

// All elements of a finite group as generator-coordinate columns, in the
// mixed-radix order of the canonical decomposition (first factor most
// significant).  Throws on infinite groups.
inline std::vector<IntMatrix> enumerate_elements(const FinGenAbGroup& g) {
  Canonical c = canonicalize(g);
  if (c.inv.rank > 0) throw invalid_input("enumerate_elements: group is infinite");
  Int total = 1;
  for (const Int& d : c.inv.factors) total *= d;
  if (total > 2'000'000) throw invalid_input("enumerate_elements: group too large");
  int t = int(c.inv.factors.size());
  std::vector<IntMatrix> out;
  out.reserve(size_t(total));
  std::vector<Int> tuple(t, 0);
  for (Int idx = 0; idx < total; ++idx) {
    IntMatrix col(t, 1);
    for (int i = 0; i < t; ++i) col.at(i, 0) = tuple[i];
    out.push_back(c.from_canonical.matrix * col);
    for (int i = t - 1; i >= 0; --i) {
      tuple[i] += 1;
      if (tuple[i] < c.inv.factors[i]) break;
      tuple[i] = 0;
    }
  }
  return out;
}

}  // namespace picard2
