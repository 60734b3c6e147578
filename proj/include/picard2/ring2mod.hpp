#pragma once

// Finite rings, modules, strict 2-rings and strict 2-modules, all given by
// explicit operation tables over dense integer indices.  Everything here is
// exhaustively validated against its axiom list at construction time and
// computed by direct enumeration; the sizes are meant to stay small.

#include "picard2/int_matrix.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace picard2 {

using Table = std::vector<std::vector<int>>;

// ---------------------------------------------------------------------------
// Abelian group tables

struct GroupTable {
  int size = 0;
  Table add;

  bool operator==(const GroupTable&) const = default;
};

namespace detail {

inline void check_table_shape(const Table& t, int rows, int cols, int range,
                              const char* what) {
  if (int(t.size()) != rows) throw invalid_input(std::string(what) + ": wrong row count");
  for (const auto& row : t) {
    if (int(row.size()) != cols) throw invalid_input(std::string(what) + ": ragged row");
    for (int x : row)
      if (x < 0 || x >= range) throw invalid_input(std::string(what) + ": entry out of range");
  }
}

}  // namespace detail

// Full abelian group axiom check; returns the identity index.
inline int validate_group_table(const GroupTable& g) {
  if (g.size < 1) throw invalid_input("group table: empty carrier");
  detail::check_table_shape(g.add, g.size, g.size, g.size, "group add");
  for (int i = 0; i < g.size; ++i)
    for (int j = 0; j < g.size; ++j)
      if (g.add[i][j] != g.add[j][i]) throw invalid_input("group table: not commutative");
  int zero = -1;
  for (int e = 0; e < g.size && zero < 0; ++e) {
    bool ok = true;
    for (int j = 0; j < g.size; ++j) ok = ok && g.add[e][j] == j;
    if (ok) zero = e;
  }
  if (zero < 0) throw invalid_input("group table: no identity");
  for (int i = 0; i < g.size; ++i)
    for (int j = 0; j < g.size; ++j)
      for (int k = 0; k < g.size; ++k)
        if (g.add[g.add[i][j]][k] != g.add[i][g.add[j][k]])
          throw invalid_input("group table: not associative");
  for (int i = 0; i < g.size; ++i) {
    bool has = false;
    for (int j = 0; j < g.size && !has; ++j) has = g.add[i][j] == zero;
    if (!has) throw invalid_input("group table: missing inverse");
  }
  return zero;
}

inline std::vector<int> negation_table(const GroupTable& g, int zero) {
  std::vector<int> neg(g.size, -1);
  for (int i = 0; i < g.size; ++i)
    for (int j = 0; j < g.size; ++j)
      if (g.add[i][j] == zero) { neg[i] = j; break; }
  return neg;
}

// ---------------------------------------------------------------------------
// Finite rings

struct FinRing {
  int size = 0;
  Table add, mul;
  int zero = 0, one = 0;

  bool operator==(const FinRing&) const = default;
};

inline void validate_ring(const FinRing& r) {
  GroupTable g{r.size, r.add};
  int zero = validate_group_table(g);
  if (zero != r.zero) throw invalid_input("ring: declared zero is not the additive identity");
  detail::check_table_shape(r.mul, r.size, r.size, r.size, "ring mul");
  if (r.one < 0 || r.one >= r.size) throw invalid_input("ring: one out of range");
  for (int j = 0; j < r.size; ++j)
    if (r.mul[r.one][j] != j || r.mul[j][r.one] != j)
      throw invalid_input("ring: declared one is not a unit");
  for (int i = 0; i < r.size; ++i)
    for (int j = 0; j < r.size; ++j)
      for (int k = 0; k < r.size; ++k) {
        if (r.mul[r.mul[i][j]][k] != r.mul[i][r.mul[j][k]])
          throw invalid_input("ring: multiplication not associative");
        if (r.mul[i][r.add[j][k]] != r.add[r.mul[i][j]][r.mul[i][k]])
          throw invalid_input("ring: left distributivity fails");
        if (r.mul[r.add[i][j]][k] != r.add[r.mul[i][k]][r.mul[j][k]])
          throw invalid_input("ring: right distributivity fails");
      }
}

// Z/n with the evident tables.
inline FinRing cyclic_ring(int n) {
  if (n < 1) throw invalid_input("cyclic_ring: modulus must be positive");
  FinRing r;
  r.size = n;
  r.add.assign(n, std::vector<int>(n));
  r.mul.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      r.add[i][j] = (i + j) % n;
      r.mul[i][j] = (i * j) % n;
    }
  r.zero = 0;
  r.one = n == 1 ? 0 : 1;
  return r;
}

// ---------------------------------------------------------------------------
// Finite modules

struct FinMod {
  FinRing ring;
  int size = 0;
  Table add;
  Table act;  // act[r][m]

  bool operator==(const FinMod&) const = default;
};

inline void validate_module(const FinMod& m) {
  validate_ring(m.ring);
  GroupTable g{m.size, m.add};
  int zero = validate_group_table(g);
  detail::check_table_shape(m.act, m.ring.size, m.size, m.size, "module action");
  const FinRing& r = m.ring;
  for (int s = 0; s < r.size; ++s)
    for (int x = 0; x < m.size; ++x) {
      for (int y = 0; y < m.size; ++y)
        if (m.act[s][m.add[x][y]] != m.add[m.act[s][x]][m.act[s][y]])
          throw invalid_input("module: action not additive in the module");
      for (int t = 0; t < r.size; ++t) {
        if (m.act[r.add[s][t]][x] != m.add[m.act[s][x]][m.act[t][x]])
          throw invalid_input("module: action not additive in the ring");
        if (m.act[r.mul[s][t]][x] != m.act[s][m.act[t][x]])
          throw invalid_input("module: action not multiplicative");
      }
      if (m.act[r.one][x] != x) throw invalid_input("module: unit acts nontrivially");
    }
  (void)zero;
}

inline int module_zero(const FinMod& m) {
  return validate_group_table(GroupTable{m.size, m.add});
}

struct FinModHom {
  FinMod src, dst;
  std::vector<int> map;
};

inline void validate_module_hom(const FinModHom& f) {
  if (!(f.src.ring == f.dst.ring)) throw invalid_input("module hom: rings differ");
  if (int(f.map.size()) != f.src.size) throw invalid_input("module hom: wrong map length");
  for (int x : f.map)
    if (x < 0 || x >= f.dst.size) throw invalid_input("module hom: value out of range");
  for (int x = 0; x < f.src.size; ++x) {
    for (int y = 0; y < f.src.size; ++y)
      if (f.map[f.src.add[x][y]] != f.dst.add[f.map[x]][f.map[y]])
        throw invalid_input("module hom: not additive");
    for (int r = 0; r < f.src.ring.size; ++r)
      if (f.map[f.src.act[r][x]] != f.dst.act[r][f.map[x]])
        throw invalid_input("module hom: not equivariant");
  }
}

inline bool module_hom_surjective(const FinModHom& f) {
  std::vector<char> hit(f.dst.size, 0);
  for (int x : f.map) hit[x] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

// ---------------------------------------------------------------------------
// Strict 2-rings: a ring crossed module delta: R1 -> R0 with two-sided
// actions of R0 on R1.

struct Strict2Ring {
  GroupTable r1;
  FinRing r0;
  std::vector<int> delta;  // R1 -> R0
  Table left;              // left[r][s], r in R0, s in R1
  Table right;             // right[s][r]
};

inline void validate_ring2(const Strict2Ring& r) {
  int zero1 = validate_group_table(r.r1);
  validate_ring(r.r0);
  int k1 = r.r1.size, k0 = r.r0.size;
  if (int(r.delta.size()) != k1) throw invalid_input("ring2: delta has wrong length");
  for (int x : r.delta)
    if (x < 0 || x >= k0) throw invalid_input("ring2: delta value out of range");
  detail::check_table_shape(r.left, k0, k1, k1, "ring2 left action");
  detail::check_table_shape(r.right, k1, k0, k1, "ring2 right action");

  const Table& a1 = r.r1.add;
  const Table& a0 = r.r0.add;
  const Table& m0 = r.r0.mul;
  for (int s = 0; s < k1; ++s)
    for (int t = 0; t < k1; ++t)
      if (r.delta[a1[s][t]] != a0[r.delta[s]][r.delta[t]])
        throw invalid_input("ring2: delta not additive");

  for (int a = 0; a < k0; ++a)
    for (int s = 0; s < k1; ++s) {
      for (int t = 0; t < k1; ++t) {
        if (r.left[a][a1[s][t]] != a1[r.left[a][s]][r.left[a][t]])
          throw invalid_input("ring2: left action not additive in R1");
        if (r.right[a1[s][t]][a] != a1[r.right[s][a]][r.right[t][a]])
          throw invalid_input("ring2: right action not additive in R1");
      }
      for (int b = 0; b < k0; ++b) {
        if (r.left[a0[a][b]][s] != a1[r.left[a][s]][r.left[b][s]])
          throw invalid_input("ring2: left action not additive in R0");
        if (r.right[s][a0[a][b]] != a1[r.right[s][a]][r.right[s][b]])
          throw invalid_input("ring2: right action not additive in R0");
        if (r.left[m0[a][b]][s] != r.left[a][r.left[b][s]])
          throw invalid_input("ring2: left action not associative with mul");
        if (r.right[s][m0[a][b]] != r.right[r.right[s][a]][b])
          throw invalid_input("ring2: right action not associative with mul");
        if (r.left[a][r.right[s][b]] != r.right[r.left[a][s]][b])
          throw invalid_input("ring2: left and right actions do not commute");
      }
      if (r.delta[r.left[a][s]] != m0[a][r.delta[s]])
        throw invalid_input("ring2: delta not left equivariant");
      if (r.delta[r.right[s][a]] != m0[r.delta[s]][a])
        throw invalid_input("ring2: delta not right equivariant");
    }
  for (int s = 0; s < k1; ++s) {
    if (r.left[r.r0.one][s] != s) throw invalid_input("ring2: left unit law fails");
    if (r.right[s][r.r0.one] != s) throw invalid_input("ring2: right unit law fails");
    for (int t = 0; t < k1; ++t)
      if (r.left[r.delta[s]][t] != r.right[s][r.delta[t]])
        throw invalid_input("ring2: Peiffer identity fails");
  }
  (void)zero1;
}

// Quotient of R0 by the image ideal of delta.  Representatives are the
// lowest-index member of each coset; classes are numbered by first
// appearance.
struct Pi0RingResult {
  FinRing ring;
  std::vector<int> class_of;  // R0 index -> class index
  std::vector<int> rep;       // class index -> R0 index
};

inline Pi0RingResult pi0_ring(const Strict2Ring& r2) {
  validate_ring2(r2);
  const FinRing& r = r2.r0;
  int zero = r.zero;
  std::vector<int> neg = negation_table(GroupTable{r.size, r.add}, zero);
  std::vector<char> in_image(r.size, 0);
  for (int x : r2.delta) in_image[x] = 1;

  Pi0RingResult out;
  out.class_of.assign(r.size, -1);
  for (int x = 0; x < r.size; ++x) {
    if (out.class_of[x] >= 0) continue;
    int c = int(out.rep.size());
    out.rep.push_back(x);
    for (int y = x; y < r.size; ++y)
      if (out.class_of[y] < 0 && in_image[r.add[y][neg[x]]]) out.class_of[y] = c;
  }

  int n = int(out.rep.size());
  out.ring.size = n;
  out.ring.add.assign(n, std::vector<int>(n));
  out.ring.mul.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      out.ring.add[i][j] = out.class_of[r.add[out.rep[i]][out.rep[j]]];
      out.ring.mul[i][j] = out.class_of[r.mul[out.rep[i]][out.rep[j]]];
    }
  out.ring.zero = out.class_of[r.zero];
  out.ring.one = out.class_of[r.one];
  validate_ring(out.ring);
  return out;
}

inline Strict2Ring dis_ring(const FinRing& r) {
  Strict2Ring out;
  out.r1 = GroupTable{1, {{0}}};
  out.r0 = r;
  out.delta = {r.zero};
  out.left.assign(r.size, std::vector<int>(1, 0));
  out.right.assign(1, std::vector<int>(r.size, 0));
  return out;
}

// ---------------------------------------------------------------------------
// Strict 2-modules over a discrete 2-ring R_dis: a module crossed module
// delta: M1 -> M0 over an ordinary finite ring.

struct Mod2 {
  FinRing ring;
  FinMod m1, m0;
  std::vector<int> delta;  // M1 -> M0

  bool operator==(const Mod2&) const = default;
};

inline void validate_mod2(const Mod2& m) {
  validate_ring(m.ring);
  if (!(m.m1.ring == m.ring) || !(m.m0.ring == m.ring))
    throw invalid_input("mod2: component modules are over a different ring");
  validate_module(m.m1);
  validate_module(m.m0);
  if (int(m.delta.size()) != m.m1.size) throw invalid_input("mod2: delta has wrong length");
  for (int x : m.delta)
    if (x < 0 || x >= m.m0.size) throw invalid_input("mod2: delta value out of range");
  for (int x = 0; x < m.m1.size; ++x) {
    for (int y = 0; y < m.m1.size; ++y)
      if (m.delta[m.m1.add[x][y]] != m.m0.add[m.delta[x]][m.delta[y]])
        throw invalid_input("mod2: delta not additive");
    for (int r = 0; r < m.ring.size; ++r)
      if (m.delta[m.m1.act[r][x]] != m.m0.act[r][m.delta[x]])
        throw invalid_input("mod2: delta not equivariant");
  }
}

struct Mod2Hom {
  Mod2 src, dst;
  std::vector<int> h1, h0;
};

inline void validate_mod2hom(const Mod2Hom& f) {
  validate_mod2(f.src);
  validate_mod2(f.dst);
  if (!(f.src.ring == f.dst.ring)) throw invalid_input("mod2 hom: rings differ");
  validate_module_hom(FinModHom{f.src.m1, f.dst.m1, f.h1});
  validate_module_hom(FinModHom{f.src.m0, f.dst.m0, f.h0});
  for (int x = 0; x < f.src.m1.size; ++x)
    if (f.h0[f.src.delta[x]] != f.dst.delta[f.h1[x]])
      throw invalid_input("mod2 hom: chain square does not commute");
}

inline Mod2Hom compose_mod2hom(const Mod2Hom& g, const Mod2Hom& f) {
  if (!(f.dst == g.src)) throw invalid_input("compose_mod2hom: middle objects differ");
  Mod2Hom out{f.src, g.dst, {}, {}};
  out.h1.resize(f.src.m1.size);
  out.h0.resize(f.src.m0.size);
  for (int x = 0; x < f.src.m1.size; ++x) out.h1[x] = g.h1[f.h1[x]];
  for (int x = 0; x < f.src.m0.size; ++x) out.h0[x] = g.h0[f.h0[x]];
  return out;
}

struct Pi0ModResult {
  FinMod mod;
  std::vector<int> class_of;
  std::vector<int> rep;
};

inline Pi0ModResult pi0_module(const Mod2& m) {
  validate_mod2(m);
  int zero0 = module_zero(m.m0);
  std::vector<int> neg = negation_table(GroupTable{m.m0.size, m.m0.add}, zero0);
  std::vector<char> in_image(m.m0.size, 0);
  for (int x : m.delta) in_image[x] = 1;

  Pi0ModResult out;
  out.class_of.assign(m.m0.size, -1);
  for (int x = 0; x < m.m0.size; ++x) {
    if (out.class_of[x] >= 0) continue;
    int c = int(out.rep.size());
    out.rep.push_back(x);
    for (int y = x; y < m.m0.size; ++y)
      if (out.class_of[y] < 0 && in_image[m.m0.add[y][neg[x]]]) out.class_of[y] = c;
  }

  int n = int(out.rep.size());
  out.mod.ring = m.ring;
  out.mod.size = n;
  out.mod.add.assign(n, std::vector<int>(n));
  out.mod.act.assign(m.ring.size, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.mod.add[i][j] = out.class_of[m.m0.add[out.rep[i]][out.rep[j]]];
  for (int r = 0; r < m.ring.size; ++r)
    for (int i = 0; i < n; ++i)
      out.mod.act[r][i] = out.class_of[m.m0.act[r][out.rep[i]]];
  validate_module(out.mod);
  return out;
}

struct Pi1ModResult {
  FinMod mod;
  std::vector<int> elems;  // kernel elements as M1 indices
};

inline Pi1ModResult pi1_module(const Mod2& m) {
  validate_mod2(m);
  int zero0 = module_zero(m.m0);
  Pi1ModResult out;
  std::vector<int> pos(m.m1.size, -1);
  for (int x = 0; x < m.m1.size; ++x)
    if (m.delta[x] == zero0) {
      pos[x] = int(out.elems.size());
      out.elems.push_back(x);
    }
  int n = int(out.elems.size());
  out.mod.ring = m.ring;
  out.mod.size = n;
  out.mod.add.assign(n, std::vector<int>(n));
  out.mod.act.assign(m.ring.size, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.mod.add[i][j] = pos[m.m1.add[out.elems[i]][out.elems[j]]];
  for (int r = 0; r < m.ring.size; ++r)
    for (int i = 0; i < n; ++i)
      out.mod.act[r][i] = pos[m.m1.act[r][out.elems[i]]];
  validate_module(out.mod);
  return out;
}

inline FinMod trivial_module(const FinRing& r) {
  FinMod m;
  m.ring = r;
  m.size = 1;
  m.add = {{0}};
  m.act.assign(r.size, std::vector<int>(1, 0));
  return m;
}

inline Mod2 dis_module(const FinMod& n) {
  Mod2 out;
  out.ring = n.ring;
  out.m1 = trivial_module(n.ring);
  out.m0 = n;
  out.delta = {module_zero(n)};
  return out;
}

inline Mod2Hom dis_module_hom(const FinModHom& f) {
  Mod2Hom out{dis_module(f.src), dis_module(f.dst), {0}, f.map};
  return out;
}

inline FinModHom pi0_module_hom(const Mod2Hom& f) {
  Pi0ModResult s = pi0_module(f.src), d = pi0_module(f.dst);
  FinModHom out{s.mod, d.mod, std::vector<int>(s.mod.size)};
  for (int c = 0; c < s.mod.size; ++c) out.map[c] = d.class_of[f.h0[s.rep[c]]];
  validate_module_hom(out);
  return out;
}

inline Mod2Hom canonical_H_mod(const Mod2& m) {
  Pi0ModResult p = pi0_module(m);
  Mod2Hom out{m, dis_module(p.mod), std::vector<int>(m.m1.size, 0), p.class_of};
  return out;
}

// ---------------------------------------------------------------------------
// Free modules and covers

struct FreeModule {
  FinMod mod;
  int rank = 0;
  std::vector<int> basis;  // indices of e_0 .. e_{rank-1}
};

// R^n with elements encoded as base-|R| digit strings, digit i the coordinate
// on e_i = one * |R|^i.
inline FreeModule free_module(const FinRing& r, int rank) {
  if (rank < 0) throw invalid_input("free_module: negative rank");
  long long size = 1;
  for (int i = 0; i < rank; ++i) {
    size *= r.size;
    if (size > 1024) throw search_overflow("free_module: table too large");
  }
  int n = int(size);
  FreeModule out;
  out.mod.ring = r;
  out.mod.size = n;
  out.rank = rank;
  out.mod.add.assign(n, std::vector<int>(n));
  out.mod.act.assign(r.size, std::vector<int>(n));
  auto digit = [&](int x, int i) {
    for (int k = 0; k < i; ++k) x /= r.size;
    return x % r.size;
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int v = 0, p = 1;
      for (int i = 0; i < rank; ++i) {
        v += r.add[digit(x, i)][digit(y, i)] * p;
        p *= r.size;
      }
      out.mod.add[x][y] = v;
    }
  for (int s = 0; s < r.size; ++s)
    for (int x = 0; x < n; ++x) {
      int v = 0, p = 1;
      for (int i = 0; i < rank; ++i) {
        v += r.mul[s][digit(x, i)] * p;
        p *= r.size;
      }
      out.mod.act[s][x] = v;
    }
  // e_i has digit i equal to one and every other digit equal to zero; the
  // zero of the ring need not be index 0, so build the index explicitly.
  out.basis.resize(rank);
  for (int i = 0; i < rank; ++i) {
    int v = 0, p = 1;
    for (int j = 0; j < rank; ++j) {
      v += (j == i ? r.one : r.zero) * p;
      p *= r.size;
    }
    out.basis[i] = v;
  }
  return out;
}

// Does m0 literally carry the standard free module tables of some rank?
inline std::optional<int> literal_free_rank(const FinMod& m) {
  if (m.ring.size == 1) return m.size == 1 ? std::optional<int>(0) : std::nullopt;
  int rank = 0;
  long long size = 1;
  while (size < m.size) {
    size *= m.ring.size;
    ++rank;
    if (size > 1024) return std::nullopt;
  }
  if (size != m.size) return std::nullopt;
  FreeModule f = free_module(m.ring, rank);
  if (f.mod == m) return rank;
  return std::nullopt;
}

inline std::vector<int> submodule_closure(const FinMod& m, const std::vector<int>& gens) {
  int zero = module_zero(m);
  std::vector<char> in(m.size, 0);
  in[zero] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x = 0; x < m.size; ++x) {
      if (!in[x]) continue;
      for (int g : gens)
        for (int r = 0; r < m.ring.size; ++r) {
          int y = m.add[x][m.act[r][g]];
          if (!in[y]) { in[y] = 1; grew = true; }
        }
    }
  }
  std::vector<int> out;
  for (int x = 0; x < m.size; ++x)
    if (in[x]) out.push_back(x);
  return out;
}

struct FreeCoverMod {
  FreeModule free;
  FinModHom cover;
};

// Greedy minimal generating set: repeatedly adjoin the lowest-index element
// outside the closure so far, then present the induced map from the free
// module on those generators.
inline FreeCoverMod free_cover_mod(const FinMod& n) {
  validate_module(n);
  std::vector<int> gens;
  std::vector<int> closure = submodule_closure(n, gens);
  while (int(closure.size()) < n.size) {
    std::vector<char> in(n.size, 0);
    for (int x : closure) in[x] = 1;
    int pick = -1;
    for (int x = 0; x < n.size; ++x)
      if (!in[x]) { pick = x; break; }
    gens.push_back(pick);
    closure = submodule_closure(n, gens);
  }
  FreeModule f = free_module(n.ring, int(gens.size()));
  std::vector<int> map(f.mod.size);
  auto digit = [&](int x, int i) {
    for (int k = 0; k < i; ++k) x /= n.ring.size;
    return x % n.ring.size;
  };
  int zero = module_zero(n);
  for (int x = 0; x < f.mod.size; ++x) {
    int v = zero;
    for (int i = 0; i < int(gens.size()); ++i)
      v = n.add[v][n.act[digit(x, i)][gens[i]]];
    map[x] = v;
  }
  FinModHom cover{f.mod, n, std::move(map)};
  validate_module_hom(cover);
  return FreeCoverMod{std::move(f), std::move(cover)};
}

// ---------------------------------------------------------------------------
// Discrete free strict 2-modules, lifting, and presentations

inline bool is_discrete_free_mod(const Mod2& p) {
  if (p.m1.size != 1) return false;
  return literal_free_rank(p.m0).has_value();
}

struct ModHomotopy {
  Mod2Hom from, to;
  std::vector<int> t;  // src.m0 -> dst.m1
};

// Structural failures (t not a module map) throw; the homotopy equations
// themselves are the returned verdict.
inline bool check_mod_2morphism(const ModHomotopy& h) {
  if (!(h.from.src == h.to.src) || !(h.from.dst == h.to.dst))
    throw invalid_input("mod 2-morphism: chain maps are not parallel");
  validate_module_hom(FinModHom{h.from.src.m0, h.from.dst.m1, h.t});
  const Mod2& dst = h.from.dst;
  for (int x = 0; x < h.from.src.m0.size; ++x)
    if (h.to.h0[x] != dst.m0.add[h.from.h0[x]][dst.delta[h.t[x]]]) return false;
  std::vector<int> neg1 =
      negation_table(GroupTable{dst.m1.size, dst.m1.add}, module_zero(dst.m1));
  for (int x = 0; x < h.from.src.m1.size; ++x)
    if (h.t[h.from.src.delta[x]] != dst.m1.add[h.to.h1[x]][neg1[h.from.h1[x]]]) return false;
  return true;
}

struct ModLiftResult {
  Mod2Hom gprime;
  ModHomotopy h;
};

// Lift G: P -> B through F: A -> B for P discrete free, entirely by table
// search: each basis generator image is lifted through pi0(F) by first-match
// scan, then the homotopy defect is solved inside im(delta_B).
inline ModLiftResult lift_discrete_free_mod(const Mod2Hom& g, const Mod2Hom& f) {
  validate_mod2hom(g);
  validate_mod2hom(f);
  if (!(g.dst == f.dst)) throw invalid_input("lift_discrete_free_mod: targets differ");
  const Mod2& p = g.src;
  const Mod2& a = f.src;
  const Mod2& b = f.dst;
  if (!is_discrete_free_mod(p))
    throw invalid_input("lift_discrete_free_mod: source is not discrete free");
  FinModHom f0 = pi0_module_hom(f);
  if (!module_hom_surjective(f0))
    throw invalid_input("lift_discrete_free_mod: f is not essentially surjective");

  int rank = *literal_free_rank(p.m0);
  std::vector<int> basis = free_module(p.ring, rank).basis;
  Pi0ModResult pa = pi0_module(a), pb = pi0_module(b);
  int k = p.ring.size;
  auto digit = [&](int x, int i) {
    for (int j = 0; j < i; ++j) x /= k;
    return x % k;
  };

  // Basis images in A.m0.
  std::vector<int> arep(rank);
  for (int i = 0; i < rank; ++i) {
    int e = basis[i];
    int target = pb.class_of[g.h0[e]];
    int found = -1;
    for (int x = 0; x < pa.mod.size && found < 0; ++x)
      if (f0.map[x] == target) found = x;
    if (found < 0) throw invalid_input("lift_discrete_free_mod: pi0 preimage missing");
    arep[i] = pa.rep[found];
  }

  int azero = module_zero(a.m0);
  std::vector<int> h0(p.m0.size);
  for (int x = 0; x < p.m0.size; ++x) {
    int v = azero;
    for (int i = 0; i < rank; ++i) v = a.m0.add[v][a.m0.act[digit(x, i)][arep[i]]];
    h0[x] = v;
  }
  int a1zero = module_zero(a.m1);
  Mod2Hom gprime{p, a, std::vector<int>(p.m1.size, a1zero), std::move(h0)};
  validate_mod2hom(gprime);

  // Homotopy component on the basis, extended linearly.
  std::vector<int> bneg = negation_table(GroupTable{b.m0.size, b.m0.add}, module_zero(b.m0));
  std::vector<int> urep(rank);
  for (int i = 0; i < rank; ++i) {
    int e = basis[i];
    int defect = b.m0.add[g.h0[e]][bneg[f.h0[gprime.h0[e]]]];
    int found = -1;
    for (int u = 0; u < b.m1.size && found < 0; ++u)
      if (b.delta[u] == defect) found = u;
    if (found < 0) throw invalid_input("lift_discrete_free_mod: defect not in im(delta)");
    urep[i] = found;
  }
  int b1zero = module_zero(b.m1);
  std::vector<int> t(p.m0.size);
  for (int x = 0; x < p.m0.size; ++x) {
    int v = b1zero;
    for (int i = 0; i < rank; ++i) v = b.m1.add[v][b.m1.act[digit(x, i)][urep[i]]];
    t[x] = v;
  }
  ModHomotopy h{compose_mod2hom(f, gprime), g, std::move(t)};
  if (!check_mod_2morphism(h))
    throw invalid_input("lift_discrete_free_mod: constructed homotopy fails");
  return ModLiftResult{std::move(gprime), std::move(h)};
}

struct ModPresentationCert {
  bool discrete_free = false;
  bool essentially_surjective = false;
  bool identity_homotopy = false;
};

struct ModPresentation {
  Mod2 p;
  Mod2Hom f;
  ModPresentationCert cert;
};

// P = dis(free cover of pi0(M)); the level-0 component sends each free
// element to the sum of chosen representatives, so projecting back to pi0
// recovers the cover map on the nose.
inline ModPresentation module_projective_presentation(const Mod2& m) {
  validate_mod2(m);
  Pi0ModResult p0 = pi0_module(m);
  FreeCoverMod fc = free_cover_mod(p0.mod);
  Mod2 p = dis_module(fc.free.mod);

  int k = m.ring.size;
  auto digit = [&](int x, int i) {
    for (int j = 0; j < i; ++j) x /= k;
    return x % k;
  };
  // Representatives of the generator images, extended linearly into M.m0.
  std::vector<int> reps(fc.free.rank);
  for (int i = 0; i < fc.free.rank; ++i) reps[i] = p0.rep[fc.cover.map[fc.free.basis[i]]];
  int mzero = module_zero(m.m0);
  std::vector<int> h0(fc.free.mod.size);
  for (int x = 0; x < fc.free.mod.size; ++x) {
    int v = mzero;
    for (int i = 0; i < fc.free.rank; ++i) v = m.m0.add[v][m.m0.act[digit(x, i)][reps[i]]];
    h0[x] = v;
  }
  Mod2Hom f{p, m, std::vector<int>(1, module_zero(m.m1)), std::move(h0)};
  validate_mod2hom(f);

  ModPresentationCert cert;
  cert.discrete_free = is_discrete_free_mod(p);
  cert.essentially_surjective = module_hom_surjective(pi0_module_hom(f));
  Mod2Hom down = compose_mod2hom(canonical_H_mod(m), f);
  Mod2Hom target = dis_module_hom(fc.cover);
  cert.identity_homotopy = down.h0 == target.h0 && down.h1 == target.h1 &&
                           down.dst == target.dst && down.src == target.src;
  return ModPresentation{std::move(p), std::move(f), cert};
}

}  // namespace picard2
