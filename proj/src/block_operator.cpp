#include "ribbonlab/block_operator.hpp"

#include <cmath>

namespace ribbonlab {

BlockOperator::BlockOperator(SpacePtr space, Matrix mat)
    : space_(std::move(space)), mat_(std::move(mat)) {
  if (mat_.rows() != space_->dim() || mat_.cols() != space_->dim())
    throw Error(ErrorKind::DimensionMismatch,
                "operator matrix does not match its path space");
}

BlockOperator BlockOperator::identity(SpacePtr space) {
  int n = space->dim();
  return BlockOperator(std::move(space), Matrix::Identity(n, n));
}

BlockOperator BlockOperator::zero(SpacePtr space) {
  int n = space->dim();
  return BlockOperator(std::move(space), Matrix::Zero(n, n));
}

double BlockOperator::offblock_magnitude() const {
  double worst = 0.0;
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) {
      if (space_->source(i) == space_->source(j) &&
          space_->range(i) == space_->range(j))
        continue;
      worst = std::max(worst, std::abs(mat_(i, j)));
    }
  return worst;
}

BlockOperator BlockOperator::operator*(const BlockOperator& o) const {
  return BlockOperator(space_, mat_ * o.mat_);
}
BlockOperator BlockOperator::operator+(const BlockOperator& o) const {
  return BlockOperator(space_, mat_ + o.mat_);
}
BlockOperator BlockOperator::operator-(const BlockOperator& o) const {
  return BlockOperator(space_, mat_ - o.mat_);
}
BlockOperator BlockOperator::scaled(Complex a) const {
  return BlockOperator(space_, a * mat_);
}

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

double normalized_residual(const Matrix& lhs, const Matrix& rhs,
                           int* worst_row, int* worst_col) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    throw Error(ErrorKind::DimensionMismatch, "residual of unequal shapes");
  if (lhs.size() == 0) return 0.0;
  double scale = std::max({max_abs(lhs), max_abs(rhs), 1e-300});
  Eigen::Index r = 0, c = 0;
  double worst = (lhs - rhs).cwiseAbs().maxCoeff(&r, &c);
  if (worst_row) *worst_row = static_cast<int>(r);
  if (worst_col) *worst_col = static_cast<int>(c);
  return worst / scale;
}

namespace {

// Splits every degree-(a+b) path index into (prefix index in A, suffix index
// in B); suffix paths start at the prefix range.
struct SplitTable {
  std::vector<int> first, second;
};

SplitTable split_paths(const PathSpace& whole, const PathSpace& a,
                       const PathSpace& b) {
  SplitTable t;
  const OrientedGraph& g = whole.graph();
  t.first.resize(whole.dim());
  t.second.resize(whole.dim());
  int da = a.degree();
  for (int i = 0; i < whole.dim(); ++i) {
    const Path& p = whole.path(i);
    Path pre{p.start, {p.edges.begin(), p.edges.begin() + da}};
    int mid = da == 0 ? p.start : g.edge_dst(p.edges[da - 1]);
    Path suf{mid, {p.edges.begin() + da, p.edges.end()}};
    t.first[i] = a.index_of(pre);
    t.second[i] = b.index_of(suf);
    if (t.first[i] < 0 || t.second[i] < 0)
      throw Error(ErrorKind::Internal, "path split failed");
  }
  return t;
}

}  // namespace

BlockOperator truncated_tensor(const BlockOperator& f, const BlockOperator& g,
                               SpacePtr out_space) {
  const PathSpace& fs = f.space();
  const PathSpace& gs = g.space();
  if (&fs.graph() != &gs.graph() || &fs.graph() != &out_space->graph())
    throw Error(ErrorKind::DimensionMismatch,
                "tensor factors live on different graphs");
  if (out_space->degree() != fs.degree() + gs.degree())
    throw Error(ErrorKind::DimensionMismatch,
                "output space degree must be the sum of factor degrees");

  SplitTable t = split_paths(*out_space, fs, gs);
  Matrix out = Matrix::Zero(out_space->dim(), out_space->dim());
  for (int i = 0; i < out_space->dim(); ++i)
    for (int j = 0; j < out_space->dim(); ++j) {
      Complex v = f.entry(t.first[i], t.first[j]) *
                  g.entry(t.second[i], t.second[j]);
      if (v != Complex(0.0, 0.0)) out(i, j) = v;
    }
  return BlockOperator(out_space, std::move(out));
}

BlockOperator embed_slot(const BlockOperator& f, int left_degree,
                         int right_degree) {
  GraphPtr g = f.space().graph_ptr();
  BlockOperator cur = f;
  if (left_degree > 0) {
    auto left = BlockOperator::identity(PathSpace::enumerate(g, left_degree));
    auto out =
        PathSpace::enumerate(g, left_degree + f.space().degree());
    cur = truncated_tensor(left, cur, out);
  }
  if (right_degree > 0) {
    auto right =
        BlockOperator::identity(PathSpace::enumerate(g, right_degree));
    auto out = PathSpace::enumerate(
        g, cur.space().degree() + right_degree);
    cur = truncated_tensor(cur, right, out);
  }
  return cur;
}

BlockOperator partial_trace_last(const BlockOperator& f,
                                 const EdgeOperator& weight,
                                 SpacePtr out_space) {
  const PathSpace& fs = f.space();
  if (fs.degree() < 1)
    throw Error(ErrorKind::DimensionMismatch,
                "partial trace needs degree >= 1");
  if (weight.space().degree() != 1 || &weight.space().graph() != &fs.graph())
    throw Error(ErrorKind::DimensionMismatch,
                "trace weight must act on the edge space of the same graph");
  if (out_space->degree() != fs.degree() - 1 ||
      &out_space->graph() != &fs.graph())
    throw Error(ErrorKind::DimensionMismatch,
                "output space must have degree one less");

  const OrientedGraph& g = fs.graph();
  // Pre-split every degree-m path into (degree m-1 prefix, last edge).
  std::vector<int> pre(fs.dim()), last(fs.dim());
  for (int i = 0; i < fs.dim(); ++i) {
    const Path& p = fs.path(i);
    Path prefix{p.start, {p.edges.begin(), p.edges.end() - 1}};
    pre[i] = out_space->index_of(prefix);
    last[i] = p.edges.back();
    if (pre[i] < 0) throw Error(ErrorKind::Internal, "prefix lookup failed");
  }

  Matrix out = Matrix::Zero(out_space->dim(), out_space->dim());
  for (int i = 0; i < fs.dim(); ++i)
    for (int j = 0; j < fs.dim(); ++j) {
      Complex v = f.entry(i, j);
      if (v == Complex(0.0, 0.0)) continue;
      Complex wgt = weight.entry(last[j], last[i]);
      if (wgt == Complex(0.0, 0.0)) continue;
      out(pre[i], pre[j]) += v * wgt;
    }
  (void)g;
  return BlockOperator(out_space, std::move(out));
}

}  // namespace ribbonlab
