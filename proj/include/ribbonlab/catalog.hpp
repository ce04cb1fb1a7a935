#pragma once

// Built-in model families.
//
// Vertex models of the four classical series: on the basis u_1..u_N of the
// edge space (N = rank+1, 2*rank+1, 2*rank, 2*rank for types A, B, C, D) the
// weights are the eta-scaled entries of the standard trigonometric R-matrix.
// For type A:
//   R = 1/q sum_r E_rr (x) E_rr + sum_{r != s} E_rs (x) E_sr
//       - (q - 1/q) sum_{r > s} E_rr (x) E_ss,
// and for B/C/D, with i' = N+1-i, nu = -1 (B, D) or +1 (C),
// sigma_i = sign((N+1)/2 - i), eps_i = 1 for i <= (N+1)/2 and -nu otherwise,
// bar(i) = i - sigma_i nu / 2:
//   R = sum_{r != r'} (1/q E_rr (x) E_rr + q E_rr' (x) E_r'r)
//     + sum_{r = r'} E_rr (x) E_rr + sum_{r != s, s'} E_rs (x) E_sr
//     + (q - 1/q) sum_{r > s} (-E_rr (x) E_ss
//                              + eps_r eps_s q^{bar r - bar s} E_rs' (x) E_r's).
// For type B the primary parameter is sqrt(q) (half-integer powers occur).
// Catalog metadata ships the diagonals M+- = +-diag(q^{2i - N - 1 - sigma_i nu}),
// the antipode-square diagonal (equal to the M+ diagonal), the quadratic
// eigenvalue pair (eta/q, -eta q), the cubic eigenvalue parameter
// lambda = -nu q^{-N-nu} (B/C/D), the top exterior generator (type A,
// N <= 5) and the quadratic form generator (B/C/D).
//
// Height models on the partition lattice: vertices are the partitions
// lambda in Z^N with level >= lambda_1 >= ... >= lambda_N = 0 (after
// identifying lambda + (1,...,1) with lambda), edges add a unit step in one
// coordinate, and weights are ratios of the q-integers
// [n] = (t^n - t^{-n})/(t - t^{-1}) at the root of unity
// t = exp(i pi k / (N + level)):
//   straight  (i = j)                w = t / zeta
//   bent pair p = (lambda | i, j), i != j, d = lambda_i - lambda_j + j - i:
//     diagonal                       w = -t^{-d} / ([d] zeta)
//     crossing (when (lambda | j, i) also exists)
//                                    w = eps [d-1] / ([d] zeta)
// where eps = +-1 and zeta is chosen among the N solutions of
// zeta^N = eps^{N-1} t (index `zeta_root`), so braiding descends to the
// quotient by the determinant ideal.  Metadata ships the vertex norm table
// D(lambda) = prod_{i<j} [d(lambda|i,j)] / [j - i], the diagonals
// M+-(e) = +- D(dst e)/D(src e), the antipode-square diagonal, the
// eigenvalue pair (t/zeta, -1/(t zeta)) and the determinant generator.

#include "ribbonlab/face_model.hpp"

namespace ribbonlab {

struct JimboParams {
  char type = 'A';        // 'A', 'B', 'C', 'D'
  int rank = 1;           // l >= 1 for A; l >= 2 for B, C, D
  Complex q = 1.2;        // for type B, derived as q_sqrt^2
  Complex q_sqrt = 0.0;   // primary parameter for type B
  Complex eta = 1.0;      // global scale
};

ModelFile jimbo_model(const JimboParams& p);

// N for a given type/rank, and nu.
int jimbo_dimension(char type, int rank);
int jimbo_nu(char type);

struct SOSParams {
  int n = 2;        // N >= 2
  int level = 2;    // L >= 2
  int t_num = 1;    // t = exp(i pi t_num / (n + level)); must give a
                    // primitive 2(n+level)-th root of unity
  int eps = +1;     // +-1
  int zeta_root = 0;  // selects among the N solutions of zeta^N = eps^{N-1} t
};

ModelFile sos_model(const SOSParams& p);

// Top exterior generator of a type-A vertex model: the coefficient vector of
// the one-dimensional fully q-antisymmetric subspace of the degree-N path
// space, normalised at the identity path and stored against it.  For N <= 4
// the subspace is computed as the joint kernel of the braid-generator images
// shifted by their antisymmetric eigenvalue; for N = 5 the closed-form
// coefficients (-q)^{inversions} are used.  Both paths verify the eigenvector
// property and throw DimensionMismatch on degeneracy.
GroupLikeVector det_vector_A(const FaceModel& m, int n_strands, Complex q,
                             Complex eta, double tol = kDefaultTol);

}  // namespace ribbonlab
