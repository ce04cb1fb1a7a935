#pragma once

// The two canonical bilinear forms of a closable model and the four edge
// operators they induce.  The forms are read off the inverted rectangular
// sectors of the doubled model; the operators are their partial closures:
//
//   U1[p,q]    = sum_t Qm(t, q, p, t)      U2inv[p,q] = sum_t Qm(p, t, t, q)
//   U1inv[p,q] = sum_t Qp(t, q, p, t)      U2[p,q]    = sum_t Qp(p, t, t, q)
//
// where Qm(a,b,c,d) / Qp(a,b,c,d) are the values of the minus / plus form on
// the pair of edge fractions (a over b), (c over d).  U1 U2inv is central for
// the model's symmetries and is the square of the ribbon operator; U1 U2 is
// the square of the modified ribbon operator.

#include "ribbonlab/verify.hpp"

namespace ribbonlab {

class LyubashenkoForms {
 public:
  explicit LyubashenkoForms(const LyubashenkoDouble* dbl) : dbl_(dbl) {}

  // Value of the minus form on (e(a/b), e(c/d)); 0 when the required face
  // does not exist.  Edge indices refer to the original graph.
  Complex q_minus(int a, int b, int c, int d) const;
  // Value of the plus form on (e(a/b), e(c/d)).
  Complex q_plus(int a, int b, int c, int d) const;

 private:
  const LyubashenkoDouble* dbl_;
};

struct DrinfeldOperators {
  EdgeOperator u1, u1inv, u2, u2inv;
  double inverse_residual = 0.0;     // max of ||U1 U1inv - id||, ||U2 U2inv - id||
  double commutation_residual = 0.0; // ||U1 U2inv - U2inv U1||

  // pi of the central square of the ribbon operator.
  EdgeOperator ribbon_target() const { return u1 * u2inv; }
  // pi of the square of the modified ribbon operator.
  EdgeOperator mrib_target() const { return u1 * u2; }
};

// Builds the four operators and validates that the two advertised inverse
// pairs really invert each other; throws NonInvertibleDrinfeld otherwise.
DrinfeldOperators drinfeld_operators(const FaceModel& m,
                                     const LyubashenkoDouble& dbl,
                                     double tol = kDefaultTol);

// For U in {U1, U2inv}: residual of (U (x) U) w = w (U (x) U) on the
// degree-2 space, i.e. both operators induce group-like functionals.
std::vector<CheckReport> uu_commutation_check(const FaceModel& m,
                                              const DrinfeldOperators& ops,
                                              double tol = kDefaultTol);

// Matrices on the degree-1 space spanning (as an algebra) the image of the
// closure's functional algebra: for every edge pair (r, s) the slices
//   Lm[r,s](p,q) = Qm(p,q,r,s)   and   Lp[r,s](p,q) = Qp(p,q,r,s).
// Their joint commutant measures how far the model is from irreducible; when
// it exceeds the number of (source, range) blocks, the pair of ribbon
// operators found by the solver need not be exhaustive.
std::vector<Matrix> edge_algebra_generators(const FaceModel& m,
                                            const LyubashenkoDouble& dbl);

}  // namespace ribbonlab
