// Walk through a Smith normal form computation and the group-theoretic
// readings of its diagonal: cokernel invariants and a solvability check.

#include <picard2/abgroup.hpp>

#include <iostream>

using namespace picard2;

namespace {

void print_matrix(const char* name, const IntMatrix& m) {
  std::cout << name << " =\n";
  for (int i = 0; i < m.rows(); ++i) {
    std::cout << "  [";
    for (int j = 0; j < m.cols(); ++j) std::cout << (j ? " " : "") << m.at(i, j);
    std::cout << "]\n";
  }
  if (m.rows() == 0) std::cout << "  (no rows)\n";
}

}  // namespace

int main() {
  IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
  print_matrix("A", a);

  SmithResult s = smith_normal_form(a);
  print_matrix("D = U A V", s.d);
  print_matrix("U", s.u);
  print_matrix("V", s.v);
  std::cout << "rank " << s.rank << ", |det U| = " << int_abs(determinant(s.u))
            << ", |det V| = " << int_abs(determinant(s.v)) << "\n\n";

  // The cokernel of A: Z^3 / (columns of A), read off the diagonal.
  FinGenAbGroup g = make_group(3, a.transposed());
  Invariants inv = invariants(g);
  std::cout << "coker(A) invariant factors:";
  for (const Int& d : inv.factors) std::cout << " " << d;
  if (inv.rank > 0) std::cout << " with free rank " << inv.rank;
  std::cout << "\n";

  // Solve A x = b exactly.
  IntMatrix b{{2}, {6}, {14}};
  if (auto x = solve_mat(a, b)) {
    print_matrix("x with A x = b", *x);
  } else {
    std::cout << "A x = b has no integer solution\n";
  }

  IntMatrix b2{{1}, {0}, {0}};
  std::cout << "A x = e1 solvable: " << (solve_mat(a, b2) ? "yes" : "no") << "\n";
  return 0;
}
