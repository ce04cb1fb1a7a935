#pragma once

// Ribbon and modified ribbon operators on the edge space.  V solves
// V^2 = U1 U2inv within the commutant (it is a polynomial in the target, so
// it commutes with every symmetry of the model); the full solution set of
// that constrained equation is {V, -V}.  The modified operator M = U1 V^{-1}
// then satisfies M^2 = U1 U2 and is a candidate diagonal symmetry; mcrit
// checks that it implements the square of the antipode and has balanced
// trace, and quotient_vanishing evaluates it on ideal generators to decide
// whether it descends to a quotient model.

#include <vector>

#include "ribbonlab/drinfeld.hpp"
#include "ribbonlab/group_like.hpp"

namespace ribbonlab {

struct RibbonSolution {
  int sign = +1;            // +1 for the principal branch, -1 for its negative
  EdgeOperator v;           // ribbon operator, v^2 = U1 U2inv
  EdgeOperator m;           // modified ribbon operator, m = U1 v^{-1}
  double v2_residual = 0.0; // ||v^2 - U1 U2inv|| (normalised)
  double m2_residual = 0.0; // ||m^2 - U1 U2|| (normalised)
};

// Both solutions (+V, -V), principal branch first.
std::vector<RibbonSolution> ribbon_solve(const DrinfeldOperators& ops,
                                         double cluster_radius = kDefaultClusterRadius,
                                         double tol = kDefaultTol);

// Criteria for a candidate modified ribbon operator M:
//  (1) M E_{pq} M^{-1} = (d_p / d_q) E_{pq} for the antipode-square diagonal d,
//  (2) tr M = tr M^{-1},
//  (3) tr M != 0.
std::vector<CheckReport> mcrit_check(const EdgeOperator& m,
                                     const std::vector<Complex>& s2_diagonal,
                                     double tol = kDefaultTol);

// Evaluates the functional induced by M on each named ideal generator and
// reports whether all values vanish at `tol`.
struct QuotientResult {
  std::string ideal;
  Complex value;
  bool vanishes = false;
};

std::vector<QuotientResult> quotient_vanishing(
    const EdgeOperator& m,
    const std::vector<std::pair<std::string, GroupLikeVector>>& ideals,
    double tol = kDefaultTol);

}  // namespace ribbonlab
