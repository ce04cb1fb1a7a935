#include "ribbonlab/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace ribbonlab {

namespace {

std::string block_name(const PathSpace& sp, std::pair<int, int> key) {
  const OrientedGraph& g = sp.graph();
  return "(" + g.vertex_id(key.first) + " -> " + g.vertex_id(key.second) + ")";
}

}  // namespace

BlockOperator invert(const BlockOperator& f, double tol) {
  const PathSpace& sp = f.space();
  Matrix out = Matrix::Zero(f.dim(), f.dim());
  double scale = std::max(max_abs(f.matrix()), 1e-300);
  for (const auto& [key, idx] : sp.blocks()) {
    int n = static_cast<int>(idx.size());
    Matrix blk(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) blk(a, b) = f.entry(idx[a], idx[b]);
    Eigen::FullPivLU<Matrix> lu(blk);
    lu.setThreshold(tol);
    if (lu.rank() < n)
      throw Error(ErrorKind::SingularBlock,
                  "block " + block_name(sp, key) + " is singular");
    Matrix inv = lu.inverse();
    (void)scale;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) out(idx[a], idx[b]) = inv(a, b);
  }
  return BlockOperator(f.space_ptr(), std::move(out));
}

namespace {

// Union-find clustering of complex values at the given radius.
std::vector<int> cluster_values(const std::vector<Complex>& v, double radius,
                                std::vector<Complex>* reps,
                                std::vector<int>* mult) {
  int n = static_cast<int>(v.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(v[i] - v[j]) <= radius) parent[find(i)] = find(j);

  // Deterministic cluster ids ordered by (re, im) of their smallest member.
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::pair<Complex, std::vector<int>>> ordered;
  for (auto& [root, members] : groups) {
    Complex mean(0, 0);
    for (int i : members) mean += v[i];
    mean /= static_cast<double>(members.size());
    ordered.push_back({mean, members});
  }
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.first.real() != b.first.real()) return a.first.real() < b.first.real();
    return a.first.imag() < b.first.imag();
  });

  std::vector<int> assign(n, -1);
  reps->clear();
  mult->clear();
  for (std::size_t c = 0; c < ordered.size(); ++c) {
    reps->push_back(ordered[c].first);
    mult->push_back(static_cast<int>(ordered[c].second.size()));
    for (int i : ordered[c].second) assign[i] = static_cast<int>(c);
  }
  return assign;
}

// Coefficients (ascending) of the polynomial prod (X - roots[j])^{m_j}.
std::vector<Complex> poly_from_roots(const std::vector<Complex>& roots,
                                     const std::vector<int>& mult,
                                     int skip) {
  std::vector<Complex> poly{Complex(1.0, 0.0)};
  for (std::size_t j = 0; j < roots.size(); ++j) {
    if (static_cast<int>(j) == skip) continue;
    for (int k = 0; k < mult[j]; ++k) {
      std::vector<Complex> next(poly.size() + 1, Complex(0.0, 0.0));
      for (std::size_t d = 0; d < poly.size(); ++d) {
        next[d + 1] += poly[d];
        next[d] -= roots[j] * poly[d];
      }
      poly = std::move(next);
    }
  }
  return poly;
}

// Shift a polynomial to the variable y = X - a (Taylor coefficients at a).
std::vector<Complex> shift_poly(const std::vector<Complex>& poly, Complex a) {
  // Horner-style synthetic division applied repeatedly.
  std::vector<Complex> c = poly;
  std::vector<Complex> out(poly.size(), Complex(0.0, 0.0));
  for (std::size_t k = 0; k < poly.size(); ++k) {
    // divide c by (X - a): remainder is coefficient k
    Complex rem(0.0, 0.0);
    for (int d = static_cast<int>(c.size()) - 1; d >= 0; --d) {
      Complex tmp = c[d] + rem * a;
      c[d] = rem;
      rem = tmp;
    }
    out[k] = rem;
    if (!c.empty()) c.pop_back();
  }
  return out;
}

// Power-series reciprocal of (b0 + b1 y + ...) to `terms` coefficients.
std::vector<Complex> series_reciprocal(const std::vector<Complex>& b,
                                       int terms) {
  std::vector<Complex> r(terms, Complex(0.0, 0.0));
  if (b.empty() || b[0] == Complex(0.0, 0.0))
    throw Error(ErrorKind::Internal, "series reciprocal at a root");
  r[0] = Complex(1.0, 0.0) / b[0];
  for (int k = 1; k < terms; ++k) {
    Complex acc(0.0, 0.0);
    for (int j = 1; j <= k; ++j) {
      Complex bj = j < static_cast<int>(b.size()) ? b[j] : Complex(0.0, 0.0);
      acc += bj * r[k - j];
    }
    r[k] = -acc / b[0];
  }
  return r;
}

Matrix eval_poly(const std::vector<Complex>& coeff, const Matrix& A) {
  int n = static_cast<int>(A.rows());
  Matrix out = Matrix::Zero(n, n);
  for (int d = static_cast<int>(coeff.size()) - 1; d >= 0; --d)
    out = out * A + coeff[d] * Matrix::Identity(n, n);
  return out;
}

}  // namespace

SpectralData spectral(const BlockOperator& f, double cluster_radius) {
  const Matrix& A = f.matrix();
  int n = static_cast<int>(A.rows());
  SpectralData data;
  if (n == 0) {
    data.semisimple = f;
    data.nilpotent = f;
    return data;
  }

  Eigen::ComplexEigenSolver<Matrix> es(A, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw Error(ErrorKind::Internal, "eigenvalue iteration failed");
  std::vector<Complex> lam(es.eigenvalues().data(),
                           es.eigenvalues().data() + n);

  std::vector<Complex> reps;
  std::vector<int> mult;
  cluster_values(lam, cluster_radius, &reps, &mult);

  // Refuse to guess when distinct clusters nearly touch.
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      if (std::abs(reps[i] - reps[j]) < 10.0 * cluster_radius)
        throw Error(ErrorKind::ClusterAmbiguity,
                    "eigenvalue clusters closer than 10x cluster radius");

  data.representatives = reps;
  data.multiplicities = mult;

  // Projector onto cluster i: F_i(A) with F_i = T_i(X - l_i) * G_i(X), where
  // G_i = prod_{j != i} (X - l_j)^{m_j} and T_i is the truncated Taylor
  // series of 1/G_i at l_i.  F_i is 1 modulo (X - l_i)^{m_i} and divisible
  // by every other (X - l_j)^{m_j}, so it acts as the spectral projector.
  Matrix ssum = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    std::vector<Complex> gi = poly_from_roots(reps, mult, static_cast<int>(i));
    std::vector<Complex> gi_at = shift_poly(gi, reps[i]);
    std::vector<Complex> ti = series_reciprocal(gi_at, mult[i]);
    // F_i(A) = T_i(A - l_i I) * G_i(A)
    Matrix Gi = eval_poly(gi, A);
    Matrix shift = A - reps[i] * Matrix::Identity(n, n);
    Matrix Ti = Matrix::Zero(n, n);
    for (int d = static_cast<int>(ti.size()) - 1; d >= 0; --d)
      Ti = Ti * shift + ti[d] * Matrix::Identity(n, n);
    Matrix Pi = Ti * Gi;
    data.projectors.push_back(BlockOperator(f.space_ptr(), Pi));
    ssum += reps[i] * Pi;
  }

  data.semisimple = BlockOperator(f.space_ptr(), ssum);
  data.nilpotent = BlockOperator(f.space_ptr(), A - ssum);

  Matrix psum = Matrix::Zero(n, n);
  for (const auto& P : data.projectors) psum += P.matrix();
  data.reconstruction_residual =
      normalized_residual(psum, Matrix::Identity(n, n));
  return data;
}

BlockOperator operator_sqrt(const BlockOperator& f, double cluster_radius,
                            double tol) {
  SpectralData sd = spectral(f, cluster_radius);
  int n = f.dim();
  if (n == 0) return f;

  for (Complex rep : sd.representatives)
    if (std::abs(rep) <= std::max(tol, cluster_radius))
      throw Error(ErrorKind::ZeroEigenvalue,
                  "square root across a zero eigenvalue cluster");

  // S^{-1} via the projectors (also a polynomial in f).
  Matrix sinv = Matrix::Zero(n, n);
  Matrix vroot = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < sd.representatives.size(); ++i) {
    Complex li = sd.representatives[i];
    sinv += (Complex(1.0, 0.0) / li) * sd.projectors[i].matrix();
    vroot += std::sqrt(li) * sd.projectors[i].matrix();
  }

  // h(X) = 1 + sum_{k=0}^{n} a_k X^{k+1}, the binomial sqrt(1+X) series
  // truncated after dim-many correction terms; exact on nilpotent X.
  Matrix X = sinv * sd.nilpotent.matrix();
  Matrix H = Matrix::Identity(n, n);
  Matrix Xpow = Matrix::Identity(n, n);
  double a = 0.5;  // a_0
  for (int k = 0; k <= n; ++k) {
    Xpow = Xpow * X;
    H += a * Xpow;
    a *= -(2.0 * (k + 1) - 1.0) / (2.0 * ((k + 1) + 1.0));
  }

  return BlockOperator(f.space_ptr(), vroot * H);
}

namespace {

// Enumerates the block-preserving coordinate positions (i, j) of a space.
std::vector<std::pair<int, int>> block_positions(const PathSpace& sp) {
  std::vector<std::pair<int, int>> pos;
  for (const auto& [key, idx] : sp.blocks())
    for (int i : idx)
      for (int j : idx) pos.push_back({i, j});
  return pos;
}

int rank_at(const Matrix& m, double tol) {
  // Entries at or below the tolerance are indistinguishable from zero; the
  // LU threshold alone is relative to the largest pivot and would promote
  // pure round-off to full rank.
  if (m.rows() == 0 || m.cols() == 0 || max_abs(m) <= tol) return 0;
  Eigen::FullPivLU<Matrix> lu(m);
  lu.setThreshold(tol);
  return static_cast<int>(lu.rank());
}

int kernel_dimension(const Matrix& m, double tol) {
  return static_cast<int>(m.cols()) - rank_at(m, tol);
}

Matrix kernel_basis(const Matrix& m, double tol) {
  // Columns span the kernel.
  if (m.cols() == 0) return Matrix(0, 0);
  if (m.rows() == 0 || max_abs(m) <= tol)
    return Matrix::Identity(m.cols(), m.cols());
  Eigen::FullPivLU<Matrix> lu(m);
  lu.setThreshold(tol);
  if (lu.rank() == m.cols()) return Matrix(m.cols(), 0);
  return lu.kernel();
}

// Matrix of X -> Xf - fX in the block-preserving coordinates `pos`.
Matrix commutator_map(const Matrix& A,
                      const std::vector<std::pair<int, int>>& pos) {
  int d = static_cast<int>(pos.size());
  std::map<std::pair<int, int>, int> where;
  for (int k = 0; k < d; ++k) where[pos[k]] = k;
  Matrix M = Matrix::Zero(d, d);
  // (Xf)_{ij} = sum_k X_{ik} f_{kj};  (fX)_{ij} = sum_k f_{ik} X_{kj}.
  // Rows of M are indexed by output positions (i, j); note only
  // block-preserving outputs are tracked, which suffices because f itself is
  // block-preserving so the commutator of a block-preserving X stays one.
  for (int col = 0; col < d; ++col) {
    auto [a, b] = pos[col];  // X has a 1 at (a, b)
    for (int j = 0; j < A.cols(); ++j) {
      if (A(b, j) != Complex(0.0, 0.0)) {
        auto it = where.find({a, j});
        if (it != where.end()) M(it->second, col) += A(b, j);
      }
    }
    for (int i = 0; i < A.rows(); ++i) {
      if (A(i, a) != Complex(0.0, 0.0)) {
        auto it = where.find({i, b});
        if (it != where.end()) M(it->second, col) -= A(i, a);
      }
    }
  }
  return M;
}

}  // namespace

int commutant_dimension(const BlockOperator& f, double tol) {
  auto pos = block_positions(f.space());
  Matrix M = commutator_map(f.matrix(), pos);
  return kernel_dimension(M, tol);
}

std::vector<BlockOperator> commutant_basis(const BlockOperator& f,
                                           double tol) {
  auto pos = block_positions(f.space());
  Matrix M = commutator_map(f.matrix(), pos);
  Matrix K = kernel_basis(M, tol);
  std::vector<BlockOperator> basis;
  for (int c = 0; c < K.cols(); ++c) {
    Matrix X = Matrix::Zero(f.dim(), f.dim());
    for (std::size_t k = 0; k < pos.size(); ++k)
      X(pos[k].first, pos[k].second) = K(static_cast<int>(k), c);
    basis.push_back(BlockOperator(f.space_ptr(), std::move(X)));
  }
  return basis;
}

int double_commutant_dimension(const BlockOperator& f, double tol) {
  auto basis = commutant_basis(f, tol);
  auto pos = block_positions(f.space());
  int d = static_cast<int>(pos.size());

  // Seed with a generic element of the commutant (fixed deterministic
  // weights) to cut the space down cheaply, then impose the remaining
  // commutation constraints exactly.
  Matrix generic = Matrix::Zero(f.dim(), f.dim());
  double wgt = 1.0;
  for (const auto& B : basis) {
    generic += Complex(wgt, 0.37 * wgt) * B.matrix();
    wgt = std::fmod(wgt * 1.618033988749895, 1.0) + 0.25;
  }

  Matrix K = kernel_basis(commutator_map(generic, pos), tol);
  // Iterate: restrict the commutator maps of every basis element to the
  // current candidate space.
  for (const auto& B : basis) {
    if (K.cols() == 0) break;
    Matrix M = commutator_map(B.matrix(), pos);
    K = K * kernel_basis(M * K, tol);
    for (int c = 0; c < K.cols(); ++c) K.col(c).normalize();
  }
  return static_cast<int>(K.cols());
}

int joint_commutant_dimension(const PathSpace& sp,
                              const std::vector<Matrix>& ops, double tol) {
  auto pos = block_positions(sp);
  int d = static_cast<int>(pos.size());
  int n = sp.dim();
  Matrix K = Matrix::Identity(d, d);
  for (const Matrix& A : ops) {
    if (K.cols() == 0) break;
    double scale = std::max(max_abs(A), 1e-300);
    // Rectangular commutator map: columns are block-preserving coordinates
    // of X, rows are all matrix positions (the ops need not be
    // block-preserving, so the commutator can leave the block pattern).
    Matrix M = Matrix::Zero(n * n, d);
    for (int col = 0; col < d; ++col) {
      auto [a, b] = pos[col];
      for (int j = 0; j < n; ++j) M(a * n + j, col) += A(b, j) / scale;
      for (int i = 0; i < n; ++i) M(i * n + b, col) -= A(i, a) / scale;
    }
    K = K * kernel_basis(M * K, tol);
    for (int c = 0; c < K.cols(); ++c) K.col(c).normalize();
  }
  return static_cast<int>(K.cols());
}

}  // namespace ribbonlab
