#pragma once

// Structure-aware numerics for block operators: blockwise inversion,
// eigenvalue clustering with polynomial spectral projectors, the operator
// square root used by the ribbon solver, and commutant dimensions.

#include <vector>

#include "ribbonlab/block_operator.hpp"

namespace ribbonlab {

// Blockwise inverse.  Throws SingularBlock naming the offending
// (source, range) block when a diagonal block is singular at `tol`.
BlockOperator invert(const BlockOperator& f, double tol = kDefaultTol);

// Eigenvalues of f grouped into clusters of radius `cluster_radius`,
// with spectral projectors realised as polynomials in f (so they commute
// with everything f commutes with) and the nilpotent remainder.
struct SpectralData {
  std::vector<Complex> representatives;    // one per cluster (mean)
  std::vector<int> multiplicities;         // algebraic, per cluster
  std::vector<BlockOperator> projectors;   // polynomials in f
  BlockOperator semisimple;                // sum lambda_i P_i
  BlockOperator nilpotent;                 // f - semisimple
  double reconstruction_residual = 0.0;    // ||sum P - id|| style check
};

// Throws ClusterAmbiguity when two distinct clusters sit closer than
// 10 * cluster_radius (refuse to guess rather than misassign).
SpectralData spectral(const BlockOperator& f,
                      double cluster_radius = kDefaultClusterRadius);

// Square root W with W^2 = f, built per eigenvalue cluster as
// sqrt(lambda_i) P_i h(S^{-1} N) where h is the binomial square-root series
// truncated after dim(f) correction terms (exact on nilpotents).  Principal
// branch of sqrt; throws ZeroEigenvalue when a cluster sits at 0.
BlockOperator operator_sqrt(const BlockOperator& f,
                            double cluster_radius = kDefaultClusterRadius,
                            double tol = kDefaultTol);

// Dimension of {X block-preserving : Xf = fX}, via the kernel of the
// commutator map restricted to block-preserving matrices.
int commutant_dimension(const BlockOperator& f, double tol = kDefaultTol);

// Basis of that commutant (block-preserving solutions of Xf = fX).
std::vector<BlockOperator> commutant_basis(const BlockOperator& f,
                                           double tol = kDefaultTol);

// Dimension of the double commutant {Y block-preserving : YX = XY for all
// block-preserving X with Xf = fX}.  For a diagonalisable vertex-model
// operator this is the number of distinct eigenvalues, i.e. the dimension of
// the algebra generated by f and the identity.
int double_commutant_dimension(const BlockOperator& f,
                               double tol = kDefaultTol);

// Dimension of {X block-preserving on `sp` : X A = A X for every A in `ops`}.
// The matrices in `ops` need not be block-preserving themselves.
int joint_commutant_dimension(const PathSpace& sp,
                              const std::vector<Matrix>& ops,
                              double tol = kDefaultTol);

}  // namespace ribbonlab
