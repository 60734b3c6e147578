#pragma once

// Brute-force groupoid semantics.  Finite complexes are materialized into
// dense element tables and every predicate or lift is decided by literal
// enumeration, sharing no formulas with the sgp2 layer beyond the complex
// representation itself.

#include "picard2/sgp2.hpp"

#include <cstdint>
#include <string>
#include <thread>
#include <vector>

namespace picard2 {

// Dense indexing of a finite group's elements.  Order is mixed-radix over the
// canonical invariant factors, first factor most significant.
struct ElementTable {
  FinGenAbGroup group;
  IntMatrix to_can;    // k x gens
  IntMatrix from_can;  // gens x k
  std::vector<Int> factors;
  long long size = 1;
  std::vector<IntMatrix> elems;  // generator coordinates per index

  long long index_of(const IntMatrix& coords) const {
    IntMatrix y = to_can * coords;
    long long idx = 0;
    for (size_t i = 0; i < factors.size(); ++i) {
      Int d = factors[i];
      Int digit = y.at(int(i), 0) % d;
      if (digit < 0) digit += d;
      idx = idx * int(d) + int(digit);
    }
    return idx;
  }
};

inline ElementTable build_element_table(const FinGenAbGroup& g, long long limit = 1000000) {
  Canonical c = canonicalize(g);
  if (c.inv.rank > 0) throw invalid_input("element table: group is infinite");
  ElementTable t;
  t.group = g;
  t.to_can = c.to_canonical.matrix;
  t.from_can = c.from_canonical.matrix;
  t.factors = c.inv.factors;
  for (const Int& d : t.factors) {
    t.size *= int(d);
    if (t.size > limit) throw search_overflow("element table: group too large to materialize");
  }
  int k = int(t.factors.size());
  std::vector<Int> tuple(k, 0);
  t.elems.reserve(size_t(t.size));
  for (long long i = 0; i < t.size; ++i) {
    IntMatrix col(k, 1);
    for (int j = 0; j < k; ++j) col.at(j, 0) = tuple[j];
    t.elems.push_back(t.from_can * col);
    for (int j = k - 1; j >= 0; --j) {
      tuple[j] += 1;
      if (tuple[j] < t.factors[j]) break;
      tuple[j] = 0;
    }
  }
  return t;
}

// A finite complex as a plain groupoid: objects are C0 elements, morphism
// labels are C1 elements, the label c maps x to x + delta(c).
struct TableGroupoid {
  ElementTable obj, lab;
  std::vector<long long> delta;  // label index -> object index
  long long objects = 0, morphisms = 0;
};

inline TableGroupoid materialize(const PicardComplex& a, long long limit = 1000000) {
  TableGroupoid g;
  g.obj = build_element_table(a.c0, limit);
  g.lab = build_element_table(a.c1, limit);
  g.objects = g.obj.size;
  g.morphisms = g.obj.size * g.lab.size;

  g.delta.resize(size_t(g.lab.size));
  for (long long i = 0; i < g.lab.size; ++i)
    g.delta[size_t(i)] = g.obj.index_of(a.delta.matrix * g.lab.elems[size_t(i)]);

  // Re-check the groupoid axioms directly on the tables: both element tables
  // must be abelian group tables under coordinate addition and delta must be
  // additive.  Everything else (composition, identities, inverses) follows.
  auto check_group = [](const ElementTable& t, const char* what) {
    long long n = t.size;
    std::vector<std::vector<int>> add(static_cast<size_t>(n),
                                      std::vector<int>(static_cast<size_t>(n)));
    for (long long i = 0; i < n; ++i)
      for (long long j = 0; j < n; ++j)
        add[size_t(i)][size_t(j)] = int(t.index_of(t.elems[size_t(i)] + t.elems[size_t(j)]));
    long long zero = t.index_of(IntMatrix(t.group.gens, 1));
    for (long long i = 0; i < n; ++i) {
      if (add[size_t(zero)][size_t(i)] != i)
        throw invalid_input(std::string(what) + ": identity fails in table");
      bool inverse = false;
      for (long long j = 0; j < n && !inverse; ++j)
        inverse = add[size_t(i)][size_t(j)] == zero;
      if (!inverse) throw invalid_input(std::string(what) + ": inverse missing in table");
      for (long long j = 0; j < n; ++j) {
        if (add[size_t(i)][size_t(j)] != add[size_t(j)][size_t(i)])
          throw invalid_input(std::string(what) + ": table not commutative");
        for (long long k = 0; k < n; ++k)
          if (add[size_t(add[size_t(i)][size_t(j)])][size_t(k)] !=
              add[size_t(i)][size_t(add[size_t(j)][size_t(k)])])
            throw invalid_input(std::string(what) + ": table not associative");
      }
    }
    return add;
  };
  auto obj_add = check_group(g.obj, "materialize objects");
  auto lab_add = check_group(g.lab, "materialize labels");
  for (long long c = 0; c < g.lab.size; ++c)
    for (long long d = 0; d < g.lab.size; ++d)
      if (g.delta[size_t(lab_add[size_t(c)][size_t(d)])] !=
          obj_add[size_t(g.delta[size_t(c)])][size_t(g.delta[size_t(d)])])
        throw invalid_input("materialize: delta not additive on tables");
  return g;
}

enum class Predicate { Faithful, Full, EssSurj };

struct OracleVerdict {
  bool verdict = false;
  long long objects = 0;   // total across source and target groupoids
  long long morphisms = 0;
};

inline OracleVerdict oracle_predicate(const ChainHom& f, Predicate kind,
                                      long long limit = 1000000) {
  TableGroupoid ga = materialize(f.src, limit);
  TableGroupoid gb = materialize(f.dst, limit);
  OracleVerdict out;
  out.objects = ga.objects + gb.objects;
  out.morphisms = ga.morphisms + gb.morphisms;

  std::vector<long long> f1map(size_t(ga.lab.size));
  for (long long c = 0; c < ga.lab.size; ++c)
    f1map[size_t(c)] = gb.lab.index_of(f.f1.matrix * ga.lab.elems[size_t(c)]);

  switch (kind) {
    case Predicate::Faithful: {
      // Distinct parallel morphisms from any object must stay distinct.
      for (long long x = 0; x < ga.obj.size; ++x)
        for (long long c = 0; c < ga.lab.size; ++c)
          for (long long d = 0; d < ga.lab.size; ++d) {
            if (c == d) continue;
            if (ga.delta[size_t(c)] != ga.delta[size_t(d)]) continue;  // different targets
            if (f1map[size_t(c)] == f1map[size_t(d)]) { out.verdict = false; return out; }
          }
      out.verdict = true;
      return out;
    }
    case Predicate::Full: {
      // Every morphism f(x) -> f(y) must be hit by a morphism x -> y.
      for (long long x = 0; x < ga.obj.size; ++x)
        for (long long y = 0; y < ga.obj.size; ++y) {
          IntMatrix diff = ga.obj.elems[size_t(y)] - ga.obj.elems[size_t(x)];
          long long dz = ga.obj.index_of(diff);
          long long target = gb.obj.index_of(f.f0.matrix * diff);
          for (long long b = 0; b < gb.lab.size; ++b) {
            if (gb.delta[size_t(b)] != target) continue;
            bool hit = false;
            for (long long c = 0; c < ga.lab.size && !hit; ++c)
              hit = ga.delta[size_t(c)] == dz && f1map[size_t(c)] == b;
            if (!hit) { out.verdict = false; return out; }
          }
        }
      out.verdict = true;
      return out;
    }
    case Predicate::EssSurj: {
      // Every object of the target is isomorphic to some image object.
      for (long long y = 0; y < gb.obj.size; ++y) {
        bool hit = false;
        for (long long x = 0; x < ga.obj.size && !hit; ++x) {
          IntMatrix fx = f.f0.matrix * ga.obj.elems[size_t(x)];
          for (long long b = 0; b < gb.lab.size && !hit; ++b)
            hit = gb.obj.index_of(fx + f.dst.delta.matrix * gb.lab.elems[size_t(b)]) == y;
        }
        if (!hit) { out.verdict = false; return out; }
      }
      out.verdict = true;
      return out;
    }
  }
  throw invalid_input("oracle_predicate: unknown predicate");
}

// ---------------------------------------------------------------------------
// Exhaustive lift search

struct LiftSearchResult {
  bool found = false;
  ChainHom gprime;  // valid only when found
  Homotopy h;       // valid only when found
  Int candidates = 0;  // canonical index of the hit + 1, or the space size
  Int space = 0;
};

namespace detail {

// Candidate tuples are indexed in mixed radix: the columns of the level-1
// map, then of the level-0 map, then of the homotopy component; within each
// digit, element indices ascend.  A tuple's rank in this order is what the
// candidate counter reports, so verdicts do not depend on the worker count.
struct LiftSpace {
  std::vector<IntMatrix> ea1, ea0, eb1;
  int p1 = 0, p0 = 0;  // generator counts of P.c1, P.c0
  Int tspace = 1, hspace = 1;

  void decode_t(Int idx, IntMatrix& f1m, IntMatrix& f0m, int gens1, int gens0) const {
    std::vector<int> digits(static_cast<size_t>(p1 + p0));
    for (int i = p1 + p0 - 1; i >= 0; --i) {
      long long base = i < p1 ? (long long)ea1.size() : (long long)ea0.size();
      digits[size_t(i)] = int(idx % base);
      idx /= base;
    }
    f1m = IntMatrix(gens1, p1);
    for (int j = 0; j < p1; ++j)
      for (int r = 0; r < gens1; ++r) f1m.at(r, j) = ea1[size_t(digits[size_t(j)])].at(r, 0);
    f0m = IntMatrix(gens0, p0);
    for (int j = 0; j < p0; ++j)
      for (int r = 0; r < gens0; ++r)
        f0m.at(r, j) = ea0[size_t(digits[size_t(p1 + j)])].at(r, 0);
  }

  void decode_h(Int idx, IntMatrix& tm, int gens1) const {
    std::vector<int> digits(static_cast<size_t>(p0));
    for (int i = p0 - 1; i >= 0; --i) {
      digits[size_t(i)] = int(idx % (long long)eb1.size());
      idx /= (long long)eb1.size();
    }
    tm = IntMatrix(gens1, p0);
    for (int j = 0; j < p0; ++j)
      for (int r = 0; r < gens1; ++r) tm.at(r, j) = eb1[size_t(digits[size_t(j)])].at(r, 0);
  }
};

}  // namespace detail

// Search all chain maps T: P -> A and homotopies h: F o T => G for the first
// valid pair in canonical order.  A and B must be finite; P contributes only
// generator counts, so a discrete free P with infinite pi0 is fine.  The
// candidate space (valid or not) is capped by `cap`; exceeding it throws
// search_overflow.
inline LiftSearchResult oracle_lift_search(const ChainHom& g, const ChainHom& f, Int cap,
                                           int jobs = 1) {
  if (g.dst != f.dst) throw invalid_input("oracle_lift_search: targets differ");
  const PicardComplex& p = g.src;
  const PicardComplex& a = f.src;
  const PicardComplex& b = f.dst;
  if (!is_finite_complex(a) || !is_finite_complex(b))
    throw invalid_input("oracle_lift_search: A and B must be finite");

  detail::LiftSpace sp;
  sp.ea1 = enumerate_elements(a.c1);
  sp.ea0 = enumerate_elements(a.c0);
  sp.eb1 = enumerate_elements(b.c1);
  sp.p1 = p.c1.gens;
  sp.p0 = p.c0.gens;
  for (int i = 0; i < sp.p1; ++i) sp.tspace *= Int(sp.ea1.size());
  for (int i = 0; i < sp.p0; ++i) sp.tspace *= Int(sp.ea0.size());
  for (int i = 0; i < sp.p0; ++i) sp.hspace *= Int(sp.eb1.size());

  LiftSearchResult res;
  res.space = sp.tspace * sp.hspace;
  if (res.space > cap) throw search_overflow("oracle_lift_search: candidate space exceeds cap");

  // Fast element-level equality checks through canonical index tables.
  ElementTable ta1 = build_element_table(a.c1);
  ElementTable ta0 = build_element_table(a.c0);
  ElementTable tb1 = build_element_table(b.c1);
  ElementTable tb0 = build_element_table(b.c0);

  auto cols_zero = [](const ElementTable& t, const IntMatrix& m) {
    for (int j = 0; j < m.cols(); ++j) {
      IntMatrix c(m.rows(), 1);
      for (int i = 0; i < m.rows(); ++i) c.at(i, 0) = m.at(i, j);
      if (t.index_of(c) != 0) return false;
    }
    return true;
  };

  // A candidate T is a chain map iff both levels respect the relators of P
  // and the chain square closes; all are zero-checks in the target groups.
  auto t_valid = [&](const IntMatrix& f1m, const IntMatrix& f0m) {
    if (!cols_zero(ta1, f1m * p.c1.rels.transposed())) return false;
    if (!cols_zero(ta0, f0m * p.c0.rels.transposed())) return false;
    return cols_zero(ta0, f0m * p.delta.matrix - a.delta.matrix * f1m);
  };
  auto h_valid = [&](const IntMatrix& f1m, const IntMatrix& f0m, const IntMatrix& tm) {
    if (!cols_zero(tb1, tm * p.c0.rels.transposed())) return false;
    IntMatrix obj = g.f0.matrix - (f.f0.matrix * f0m + b.delta.matrix * tm);
    if (!cols_zero(tb0, obj)) return false;
    IntMatrix nat = tm * p.delta.matrix - (g.f1.matrix - f.f1.matrix * f1m);
    return cols_zero(tb1, nat);
  };

  // Scan a block of T indices; report the lowest global candidate index hit.
  auto scan = [&](Int lo, Int hi, Int& hit) {
    hit = -1;
    IntMatrix f1m, f0m, tm;
    for (Int ti = lo; ti < hi; ++ti) {
      sp.decode_t(ti, f1m, f0m, a.c1.gens, a.c0.gens);
      if (!t_valid(f1m, f0m)) continue;
      for (Int hi2 = 0; hi2 < sp.hspace; ++hi2) {
        sp.decode_h(hi2, tm, b.c1.gens);
        if (h_valid(f1m, f0m, tm)) {
          hit = ti * sp.hspace + hi2;
          return;
        }
      }
    }
  };

  Int best = -1;
  if (jobs <= 1 || sp.tspace < 2 * jobs) {
    scan(0, sp.tspace, best);
  } else {
    std::vector<Int> hits(size_t(jobs), Int(-1));
    std::vector<std::thread> workers;
    Int block = sp.tspace / jobs + 1;
    for (int w = 0; w < jobs; ++w) {
      Int lo = block * w;
      Int hi = lo + block;
      if (hi > sp.tspace) hi = sp.tspace;
      workers.emplace_back([&, w, lo, hi]() { scan(lo, hi, hits[size_t(w)]); });
    }
    for (auto& th : workers) th.join();
    for (const Int& h : hits)
      if (h >= 0 && (best < 0 || h < best)) best = h;
  }

  if (best < 0) {
    res.found = false;
    res.candidates = res.space;
    return res;
  }
  res.found = true;
  res.candidates = best + 1;
  IntMatrix f1m, f0m, tm;
  sp.decode_t(best / sp.hspace, f1m, f0m, a.c1.gens, a.c0.gens);
  sp.decode_h(best % sp.hspace, tm, b.c1.gens);
  res.gprime = make_chain_hom(p, a, make_hom(p.c1, a.c1, f1m), make_hom(p.c0, a.c0, f0m));
  res.h = make_homotopy(compose_chain(f, res.gprime), g, make_hom(p.c0, b.c1, tm));
  return res;
}

}  // namespace picard2
