#pragma once

// Linear operators on path spaces that respect the (source, range) block
// decomposition, plus the two structural operations used throughout: the
// truncated tensor product (blockwise Kronecker product over a shared middle
// vertex) and the weighted partial trace over the last edge slot.

#include <Eigen/Dense>
#include <memory>

#include "ribbonlab/graph.hpp"

namespace ribbonlab {

using Matrix = Eigen::MatrixXcd;

// Dense operator on a path space.  Entry (i, j) maps basis path j (input) to
// basis path i (output).  Operators are expected to vanish between different
// (source, range) blocks; `offblock_magnitude` measures any violation.
class BlockOperator {
 public:
  BlockOperator() = default;
  BlockOperator(SpacePtr space, Matrix mat);

  static BlockOperator identity(SpacePtr space);
  static BlockOperator zero(SpacePtr space);

  const PathSpace& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  int dim() const { return static_cast<int>(mat_.rows()); }
  int degree() const { return space_->degree(); }

  const Matrix& matrix() const { return mat_; }
  Matrix& matrix() { return mat_; }
  Complex entry(int i, int j) const { return mat_(i, j); }

  // Largest |entry| between distinct (source, range) blocks.
  double offblock_magnitude() const;

  BlockOperator operator*(const BlockOperator& o) const;
  BlockOperator operator+(const BlockOperator& o) const;
  BlockOperator operator-(const BlockOperator& o) const;
  BlockOperator scaled(Complex a) const;

 private:
  SpacePtr space_;
  Matrix mat_;
};

// An operator on the degree-1 path space (the edge space).  Matrix rows and
// columns follow the canonical edge order.
using EdgeOperator = BlockOperator;

// Largest |entry| of a matrix (0 for empty matrices).
double max_abs(const Matrix& m);

// Deviation between two operators, normalised by the larger of their
// magnitudes (so comparisons are scale free).  Returns the normalised
// residual and, optionally, the flat index of the worst entry.
double normalized_residual(const Matrix& lhs, const Matrix& rhs,
                           int* worst_row = nullptr, int* worst_col = nullptr);

// Truncated tensor product: on path bases, (f tensor g)(p.r, q.s) =
// f(p,q) g(r,s) whenever the concatenations are composable paths; the result
// acts on the degree (deg f + deg g) path space.  `out_space` must be the
// enumerated space of that degree for the same graph.
BlockOperator truncated_tensor(const BlockOperator& f, const BlockOperator& g,
                               SpacePtr out_space);

// Convenience: id^{a} tensor f tensor id^{b} acting on the degree
// (a + deg f + b) space.  Spaces are enumerated internally.
BlockOperator embed_slot(const BlockOperator& f, int left_degree,
                         int right_degree);

// Weighted partial trace over the last edge slot:
//   result(p, q) = sum_{e, e'} f(p.e, q.e') * weight(e', e)
// where p, q run over degree (m-1) paths.  `weight` acts on the edge space.
// `out_space` must be the degree (m-1) space of the same graph.
BlockOperator partial_trace_last(const BlockOperator& f,
                                 const EdgeOperator& weight,
                                 SpacePtr out_space);

}  // namespace ribbonlab
