// Decide a pair of germs and print the witness found for it.

#include <iostream>

#include "qhgerm/poly_io.hpp"
#include "qhgerm/witness.hpp"

int main() {
  using namespace qhgerm;
  const BivarPoly F = parse_poly("Y*(Y - X^2)*(Y - 2*X^2)");
  const BivarPoly G = parse_poly("(Y - 5*X^2)*(Y - 7*X^2)*(Y - 9*X^2)");

  const Verdict v = decide_equivalence(F, G);
  std::cout << to_string(v.status) << ": " << v.reason << "\n";
  if (v.status != VerdictStatus::Equivalent) return 1;

  for (unsigned branch = 0; branch < v.match->scale.d; ++branch) {
    const Witness w = build_witness(v, branch);
    const VerificationReport rep = verify_witness(F, G, w);
    std::cout << "branch " << branch << ": alpha ~ " << w.alpha.approx.re.str(10) << " + " << w.alpha.approx.im.str(10)
              << "i, gamma ~ " << w.gamma.approx_at(64).re.str(10) << ", verified " << to_string(rep.mode) << " "
              << (rep.pass ? "ok" : "FAILED") << "\n";
  }
  return 0;
}
