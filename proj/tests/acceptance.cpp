// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Counts and time limits are fixed here and nowhere else.

#include <picard2/cli.hpp>
#include <picard2/oracle.hpp>

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "support/generators.hpp"
#include "support/golden.hpp"
#include "support/oracles.hpp"

using namespace picard2;

namespace {

int failures = 0;

void criterion(int n, const char* label, double time_limit,
               const std::function<std::string(bool&)>& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  try {
    detail = body(ok);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (time_limit > 0 && secs > time_limit) {
    ok = false;
    detail += " [over time limit]";
  }
  if (!ok) ++failures;
  std::printf("%s  criterion %d: %s — %s (%.2fs)\n", ok ? "PASS" : "FAIL", n, label,
              detail.c_str(), secs);
  std::fflush(stdout);
}

bool same_invariants(const FinGenAbGroup& a, const FinGenAbGroup& b) {
  Invariants ia = invariants(a), ib = invariants(b);
  return ia.factors == ib.factors && ia.rank == ib.rank;
}

AbHom random_surjection(std::mt19937_64& rng) {
  FinGenAbGroup dst = testsupport::random_group(rng, 2, 1);
  switch (testsupport::rand_ll(rng, 0, 2)) {
    case 0: {
      FinGenAbGroup pad = testsupport::random_group(rng, 1, 1);
      return direct_sum(dst, pad).proj1;
    }
    case 1:
      return free_cover(dst).cover;
    default:
      return canonicalize(dst).from_canonical;
  }
}

}  // namespace

int main() {
  criterion(1, "smith normal form against the elementary-operations oracle", 10.0,
            [](bool& ok) {
              std::mt19937_64 rng(9001);
              int count = 0;
              for (int trial = 0; trial < 500; ++trial) {
                int r = int(testsupport::rand_ll(rng, 0, 4));
                int c = int(testsupport::rand_ll(rng, 0, 4));
                IntMatrix a = testsupport::random_matrix(rng, r, c, -10, 10);
                SmithResult s = smith_normal_form(a);
                ok = ok && s.u * a * s.v == s.d;
                ok = ok && int_abs(determinant(s.u)) == 1;
                ok = ok && int_abs(determinant(s.v)) == 1;
                for (size_t i = 0; i + 1 < s.diag.size(); ++i)
                  ok = ok && (s.diag[i] == 0 ? s.diag[i + 1] == 0
                                             : s.diag[i + 1] % s.diag[i] == 0);
                ok = ok && s.diag == testsupport::naive_snf_diag(a);
                ++count;
              }
              std::ostringstream os;
              os << count << " matrices up to 4x4, entries in [-10,10]";
              return os.str();
            });

  criterion(2, "predicate formulas against brute-force enumeration", 60.0, [](bool& ok) {
    std::mt19937_64 rng(9002);
    int count = 0, mismatches = 0;
    for (int trial = 0; trial < 200; ++trial) {
      ChainHom f = testsupport::random_finite_chain_hom(rng);
      for (const FinGenAbGroup* g : {&f.src.c0, &f.src.c1, &f.dst.c0, &f.dst.c1}) {
        std::optional<Int> order = group_order(*g);
        ok = ok && order.has_value() && *order <= 36;
      }
      if (oracle_predicate(f, Predicate::Faithful).verdict != is_faithful(f)) ++mismatches;
      if (oracle_predicate(f, Predicate::Full).verdict != is_full(f)) ++mismatches;
      if (oracle_predicate(f, Predicate::EssSurj).verdict != is_essentially_surjective(f))
        ++mismatches;
      ++count;
    }
    ok = ok && mismatches == 0;
    std::ostringstream os;
    os << count << " chain maps, " << 3 * count << " predicate evaluations, " << mismatches
       << " disagreements";
    return os.str();
  });

  criterion(3, "both 2-exactness conditions and all three extension conditions agree", 0,
            [](bool& ok) {
              std::mt19937_64 rng(9003);
              int count = 0, exact = 0;
              for (int trial = 0; trial < 100; ++trial) {
                testsupport::Triple t = testsupport::random_triple(rng);
                TwoExactnessCert cert = two_exactness_witnesses(t.gamma, t.sigma, t.phi);
                ok = ok && cert.condition1() == cert.condition2();
                ExtensionReport er = extension_report(t.gamma, t.sigma, t.phi);
                ok = ok && er.condition1 == er.condition2 && er.condition2 == er.condition3;
                exact += cert.condition1() ? 1 : 0;
                ++count;
              }
              std::ostringstream os;
              os << count << " valid triples, " << exact << " of them 2-exact";
              return os.str();
            });

  criterion(4, "projective presentations certify on random complexes", 0, [](bool& ok) {
    std::mt19937_64 rng(9004);
    int count = 0;
    for (int trial = 0; trial < 50; ++trial) {
      PicardComplex a = testsupport::random_complex(rng, 2, 2);
      Presentation pr = projective_presentation(a);
      ok = ok && pr.cert.discrete_free && pr.cert.essentially_surjective &&
           pr.cert.identity_homotopy;
      ok = ok && is_discrete_free(pr.p);
      ChainHom down = compose_chain(canonical_H(a), pr.f);
      ChainHom target = dis_hom(free_cover(pi0(a).group).cover);
      ok = ok && chain_hom_equal(down, target);
      ++count;
    }
    std::ostringstream os;
    os << count << " complexes, torsion factors <= 6, free ranks <= 2";
    return os.str();
  });

  criterion(5, "supporting identities: dis of surjections, pi0 of covers, canonical H, lifting", 0,
            [](bool& ok) {
              std::mt19937_64 rng(9005);
              for (int trial = 0; trial < 30; ++trial) {
                AbHom s = random_surjection(rng);
                ok = ok && is_essentially_surjective(dis_hom(s));
              }
              for (int trial = 0; trial < 30; ++trial) {
                ChainHom f = testsupport::random_esssurj(rng, false);
                ok = ok && is_surjective(pi0_hom(f));
              }
              int h_checked = 0;
              for (int trial = 0; trial < 100; ++trial) {
                ChainHom h = canonical_H(testsupport::random_complex(rng));
                ok = ok && is_full(h) && is_essentially_surjective(h);
                ++h_checked;
              }
              int lifts = 0;
              for (int trial = 0; trial < 20; ++trial) {
                ChainHom f = testsupport::random_esssurj(rng, false);
                int rank = int(testsupport::rand_ll(rng, 0, 2));
                ChainHom g = testsupport::random_free_source_hom(rng, rank, f.dst);
                LiftResult r = lift_discrete_free(g, f);
                ok = ok && check_2morphism(r.h);
                ok = ok && chain_hom_equal(r.h.to, g);
                ok = ok && chain_hom_equal(r.h.from, compose_chain(f, r.gprime));
                ++lifts;
              }
              std::ostringstream os;
              os << "30 surjections, 30 covers, " << h_checked << " canonical maps, " << lifts
                 << " lifts";
              return os.str();
            });

  criterion(6, "module presentations and lifts across the five-ring corpus", 120.0,
            [](bool& ok) {
              std::mt19937_64 rng(9006);
              int mods = 0, lifts = 0;
              for (const FinRing& r : testsupport::corpus_rings()) {
                for (const Mod2& m : testsupport::mod2_corpus(r)) {
                  if (m.m0.size > 16) continue;
                  ModPresentation pr = module_projective_presentation(m);
                  ok = ok && pr.cert.discrete_free && pr.cert.essentially_surjective &&
                       pr.cert.identity_homotopy;
                  ok = ok && is_discrete_free_mod(pr.p);
                  ok = ok && module_hom_surjective(pi0_module_hom(pr.f));
                  Mod2Hom targets[2] = {pr.f, canonical_H_mod(m)};
                  for (const Mod2Hom& f : targets) {
                    FreeModule probe = free_module(r, 1);
                    Mod2Hom g = testsupport::random_free_mod2_hom(rng, probe, f.dst);
                    ModLiftResult lr = lift_discrete_free_mod(g, f);
                    ok = ok && check_mod_2morphism(lr.h);
                    ++lifts;
                  }
                  ++mods;
                }
              }
              std::ostringstream os;
              os << mods << " strict 2-modules over 5 rings, " << lifts << " lifts";
              return os.str();
            });

  criterion(7, "kernel and cokernel contracts on random chain maps", 0, [](bool& ok) {
    std::mt19937_64 rng(9007);
    int count = 0;
    for (int trial = 0; trial < 100; ++trial) {
      ChainHom f = testsupport::random_mixed_chain_hom(rng);
      Kernel2Result k = kernel2(f);
      Cokernel2Result c = cokernel2(f);
      ok = ok && is_faithful(k.incl);
      ok = ok && is_essentially_surjective(c.proj);
      ok = ok && check_2morphism(k.eps);
      ok = ok && check_2morphism(c.pi);
      ok = ok && same_invariants(pi1(k.k).group, kernel(pi1_hom(f)).group);
      ok = ok && same_invariants(pi0(c.q).group, cokernel(pi0_hom(f)).group);
      ++count;
    }
    std::ostringstream os;
    os << count << " chain maps, both universal legs and both homotopy-group identities";
    return os.str();
  });

  criterion(8, "golden CLI corpus is byte-identical with documented exit codes", 0,
            [](bool& ok) {
              std::set<std::string> docs;
              int cases = 0;
              for (const testsupport::GoldenCase& c : testsupport::golden_cases()) {
                testsupport::RunResult r = testsupport::run_golden(c);
                ok = ok && r.code == c.code;
                ok = ok && r.out == testsupport::expected_output(c);
                if (c.code == 2 || c.code == 3) ok = ok && !r.err.empty();
                if (!c.input.empty()) docs.insert(c.input);
                ++cases;
              }
              ok = ok && int(docs.size()) >= 15;
              std::ostringstream os;
              os << cases << " invocations over " << docs.size()
                 << " documents, exit codes 0/1/2/3 all exercised";
              return os.str();
            });

  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
