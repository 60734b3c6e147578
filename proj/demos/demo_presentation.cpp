// Build the projective presentation of a symmetric 2-group, then lift a map
// out of the presenting object through an essentially surjective target.

#include <picard2/sgp2.hpp>

#include <iostream>

using namespace picard2;

namespace {

std::string group_name(const FinGenAbGroup& g) {
  Invariants inv = invariants(g);
  std::string s;
  for (const Int& d : inv.factors) {
    if (!s.empty()) s += " x ";
    s += "Z/" + d.str();
  }
  if (inv.rank > 0) {
    if (!s.empty()) s += " x ";
    s += "Z^" + std::to_string(inv.rank);
  }
  return s.empty() ? "0" : s;
}

void describe(const char* name, const PicardComplex& a) {
  std::cout << name << ": pi0 = " << group_name(pi0(a).group)
            << ", pi1 = " << group_name(pi1(a).group) << "\n";
}

}  // namespace

int main() {
  // delta = 2: Z/4 -> Z/4, a complex with pi0 = pi1 = Z/2.
  FinGenAbGroup z4 = cyclic_group(4);
  PicardComplex b = make_complex(z4, z4, make_hom(z4, z4, IntMatrix{{2}}));
  describe("B", b);

  Presentation pr = projective_presentation(b);
  describe("P", pr.p);
  std::cout << "certificate: discrete_free = " << pr.cert.discrete_free
            << ", essentially_surjective = " << pr.cert.essentially_surjective
            << ", identity_homotopy = " << pr.cert.identity_homotopy << "\n\n";

  // Any map out of a discrete free object lifts through the presentation.
  ChainHom g = make_chain_hom(pr.p, b, zero_hom(pr.p.c1, b.c1),
                              make_hom(pr.p.c0, b.c0, IntMatrix{{3}}));
  LiftResult lifted = lift_discrete_free(g, pr.f);
  std::cout << "lift of [3] through the presentation: gprime f0 = "
            << lifted.gprime.f0.matrix.at(0, 0)
            << ", homotopy valid = " << check_2morphism(lifted.h) << "\n";

  // The lift is with respect to pi0 classes: F gprime and g agree after
  // projecting to pi0.
  AbHom p0f = pi0_hom(compose_chain(pr.f, lifted.gprime));
  AbHom p0g = pi0_hom(g);
  std::cout << "pi0(F gprime) == pi0(g): " << hom_equal(p0f, p0g) << "\n";
  return 0;
}
