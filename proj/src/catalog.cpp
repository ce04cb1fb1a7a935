#include "ribbonlab/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace ribbonlab {

namespace {

Complex ipow(Complex base, int e) {
  if (e < 0) return Complex(1.0, 0.0) / ipow(base, -e);
  Complex acc(1.0, 0.0);
  for (int k = 0; k < e; ++k) acc *= base;
  return acc;
}

std::string padded_number(int value, int width) {
  std::string s = std::to_string(value);
  while (static_cast<int>(s.size()) < width) s = "0" + s;
  return s;
}

}  // namespace

int jimbo_dimension(char type, int rank) {
  switch (type) {
    case 'A': return rank + 1;
    case 'B': return 2 * rank + 1;
    case 'C': return 2 * rank;
    case 'D': return 2 * rank;
    default:
      throw Error(ErrorKind::BadParams,
                  std::string("unknown series '") + type + "'");
  }
}

int jimbo_nu(char type) {
  switch (type) {
    case 'A': return 0;
    case 'B': return -1;
    case 'C': return +1;
    case 'D': return -1;
    default:
      throw Error(ErrorKind::BadParams,
                  std::string("unknown series '") + type + "'");
  }
}

ModelFile jimbo_model(const JimboParams& p) {
  char type = p.type;
  if (type != 'A' && type != 'B' && type != 'C' && type != 'D')
    throw Error(ErrorKind::BadParams,
                std::string("unknown series '") + type + "'");
  if (p.rank < 1)
    throw Error(ErrorKind::BadParams, "rank must be at least 1");
  if (type != 'A' && p.rank < 2)
    throw Error(ErrorKind::BadParams,
                std::string("series ") + type + " requires rank >= 2");
  if (p.eta == Complex(0.0, 0.0))
    throw Error(ErrorKind::BadParams, "eta must be nonzero");

  Complex q = p.q, q_sqrt = p.q_sqrt;
  if (type == 'B') {
    if (q_sqrt == Complex(0.0, 0.0))
      throw Error(ErrorKind::BadParams,
                  "series B requires the square root of q as its parameter");
    q = q_sqrt * q_sqrt;
  }
  if (q == Complex(0.0, 0.0))
    throw Error(ErrorKind::BadParams, "q must be nonzero");

  const int N = jimbo_dimension(type, p.rank);
  const int nu = jimbo_nu(type);
  const Complex qinv = Complex(1.0, 0.0) / q;
  const Complex mu = q - qinv;

  // q to a half-integer power, given twice the exponent.
  auto qpow2 = [&](int twice) -> Complex {
    if (twice % 2 == 0) return ipow(q, twice / 2);
    return ipow(q_sqrt, twice);
  };

  // Index helpers, all 1-based.
  auto conj_index = [&](int i) { return N + 1 - i; };
  auto sigma = [&](int i) -> int {
    if (2 * i < N + 1) return +1;
    if (2 * i > N + 1) return -1;
    return 0;
  };
  auto epsilon = [&](int i) -> Complex {
    return 2 * i <= N + 1 ? Complex(1.0, 0.0) : Complex(-nu, 0.0);
  };
  auto bar2 = [&](int i) { return 2 * i - sigma(i) * nu; };  // twice bar(i)

  // Accumulated weights: key (out1, out2, in1, in2).
  std::map<std::tuple<int, int, int, int>, Complex> wmap;
  auto add = [&](int o1, int o2, int i1, int i2, Complex v) {
    wmap[{o1, o2, i1, i2}] += v;
  };

  if (type == 'A') {
    for (int r = 1; r <= N; ++r) add(r, r, r, r, qinv);
    for (int r = 1; r <= N; ++r)
      for (int s = 1; s <= N; ++s)
        if (r != s) add(r, s, s, r, Complex(1.0, 0.0));
    for (int r = 2; r <= N; ++r)
      for (int s = 1; s < r; ++s) add(r, s, r, s, -mu);
  } else {
    for (int r = 1; r <= N; ++r) {
      if (r != conj_index(r)) {
        add(r, r, r, r, qinv);
        add(r, conj_index(r), conj_index(r), r, q);
      } else {
        add(r, r, r, r, Complex(1.0, 0.0));
      }
    }
    for (int r = 1; r <= N; ++r)
      for (int s = 1; s <= N; ++s)
        if (r != s && r != conj_index(s)) add(r, s, s, r, Complex(1.0, 0.0));
    for (int r = 2; r <= N; ++r)
      for (int s = 1; s < r; ++s) {
        add(r, s, r, s, -mu);
        add(r, conj_index(r), conj_index(s), s,
            mu * epsilon(r) * epsilon(s) * qpow2(bar2(r) - bar2(s)));
      }
  }

  // One-vertex graph with edges u1..uN.
  const int width = static_cast<int>(std::to_string(N).size());
  std::vector<std::string> vertices{"v"};
  std::vector<EdgeSpec> edges;
  for (int i = 1; i <= N; ++i)
    edges.push_back(EdgeSpec{"u" + padded_number(i, width), "v", "v"});
  GraphPtr g = OrientedGraph::create(std::move(vertices), std::move(edges));

  std::vector<std::pair<FaceKey, Complex>> faces;
  for (const auto& [key, val] : wmap) {
    Complex wt = p.eta * val;
    if (wt == Complex(0.0, 0.0)) continue;
    auto [o1, o2, i1, i2] = key;
    faces.push_back({FaceKey{o1 - 1, i1 - 1, o2 - 1, i2 - 1}, wt});
  }

  ModelFile mf;
  mf.model = FaceModel::create(g, std::move(faces));

  ModelMetadata md;
  md.family = std::string("jimbo-") + type;
  md.params["q"] = q;
  md.params["eta"] = p.eta;
  if (type == 'B') md.params["q_sqrt"] = q_sqrt;
  md.ints["rank"] = p.rank;
  md.ints["dimension"] = N;
  md.ints["nu"] = nu;

  std::vector<Complex> mplus(N), mminus(N);
  for (int i = 1; i <= N; ++i) {
    mplus[i - 1] = ipow(q, 2 * i - N - 1 - sigma(i) * nu);
    mminus[i - 1] = -mplus[i - 1];
  }
  md.m_plus = mplus;
  md.m_minus = mminus;
  md.s2 = mplus;

  if (type == 'A') {
    md.hecke_a = p.eta * qinv;
    md.hecke_b = -p.eta * q;
    if (N <= 5)
      md.det = det_vector_A(mf.model, N, q, p.eta);
  } else {
    md.lambda = Complex(-nu, 0.0) * ipow(q, -(N + nu));
    // Quadratic form generator: coefficients eps_i q^{bar(i) + 1/2} on the
    // paths (u_i, u_{i'}), normalised at the first one.
    GroupLikeVector quad;
    Path ref{0, {0, N - 1}};
    for (int i = 1; i <= N; ++i) {
      Complex vi = epsilon(i) * qpow2(bar2(i) + 1);
      Complex v1 = epsilon(1) * qpow2(bar2(1) + 1);
      quad.terms.push_back(
          GroupLikeTerm{ref, Path{0, {i - 1, conj_index(i) - 1}}, vi / v1});
    }
    md.quad = quad;
  }

  mf.metadata = md;
  return mf;
}

// ---------------------------------------------------------------------------
// Height models on the partition lattice.

namespace {

using Partition = std::vector<int>;

std::string partition_id(const Partition& lam) {
  std::string s;
  for (std::size_t i = 0; i < lam.size(); ++i) {
    if (i) s += "_";
    s += std::to_string(lam[i]);
  }
  return s;
}

// Canonical representative after adding a unit step; empty when the result
// leaves the lattice.
std::optional<Partition> bump(const Partition& lam, int i, int level) {
  Partition out = lam;
  out[i] += 1;
  bool all_positive = true;
  for (int v : out) all_positive = all_positive && v >= 1;
  if (all_positive)
    for (int& v : out) v -= 1;
  for (std::size_t k = 0; k + 1 < out.size(); ++k)
    if (out[k] < out[k + 1]) return std::nullopt;
  if (out.front() > level || out.back() != 0) return std::nullopt;
  return out;
}

}  // namespace

ModelFile sos_model(const SOSParams& p) {
  const int N = p.n, L = p.level;
  if (N < 2) throw Error(ErrorKind::BadParams, "n must be at least 2");
  if (L < 2) throw Error(ErrorKind::BadParams, "level must be at least 2");
  if (p.eps != 1 && p.eps != -1)
    throw Error(ErrorKind::BadParams, "eps must be +1 or -1");
  if (p.zeta_root < 0 || p.zeta_root >= N)
    throw Error(ErrorKind::BadParams,
                "zeta_root must lie in [0, n)");
  if (p.t_num <= 0 || std::gcd(p.t_num, 2 * (N + L)) != 1)
    throw Error(ErrorKind::BadParams,
                "t = exp(i pi " + std::to_string(p.t_num) + " / " +
                    std::to_string(N + L) +
                    ") is not a primitive root of unity of order " +
                    std::to_string(2 * (N + L)));

  const double pi = std::acos(-1.0);
  const Complex t = std::polar(1.0, pi * p.t_num / (N + L));
  const Complex tinv = Complex(1.0, 0.0) / t;
  const double eps = p.eps;

  auto qint = [&](int n) { return (ipow(t, n) - ipow(t, -n)) / (t - tinv); };

  // zeta: the zeta_root-th solution of zeta^N = eps^{N-1} t.
  Complex rhs = ipow(Complex(eps, 0.0), N - 1) * t;
  Complex zeta =
      std::polar(1.0, (std::arg(rhs) + 2.0 * pi * p.zeta_root) / N);
  const Complex zinv = Complex(1.0, 0.0) / zeta;

  // Vertex set: partitions with level >= l1 >= ... >= lN = 0.
  std::vector<Partition> parts;
  Partition cur(N, 0);
  auto gen = [&](auto&& self, int idx, int maxv) -> void {
    if (idx == N - 1) {
      parts.push_back(cur);
      return;
    }
    for (int v = 0; v <= maxv; ++v) {
      cur[idx] = v;
      self(self, idx + 1, v);
    }
  };
  // Generate with l1 outermost so that lN = 0 is automatic.
  gen(gen, 0, L);
  std::sort(parts.begin(), parts.end(),
            [](const Partition& a, const Partition& b) {
              return partition_id(a) < partition_id(b);
            });

  std::map<Partition, int> part_index;
  std::vector<std::string> vertices;
  for (const auto& lam : parts) {
    part_index[lam] = static_cast<int>(vertices.size());
    vertices.push_back(partition_id(lam));
  }

  // Edges, with each edge's step direction (1-based coordinate).
  std::vector<EdgeSpec> edges;
  std::map<std::pair<int, int>, int> step_of;  // (src part, dir) -> dst part
  for (std::size_t a = 0; a < parts.size(); ++a)
    for (int i = 0; i < N; ++i)
      if (auto nxt = bump(parts[a], i, L)) {
        int b = part_index.at(*nxt);
        edges.push_back(EdgeSpec{vertices[a] + ">" + vertices[b], vertices[a],
                                 vertices[b]});
        step_of[{static_cast<int>(a), i}] = b;
      }
  GraphPtr g = OrientedGraph::create(vertices, std::move(edges));

  // Edge lookup by (vertex, direction), and direction by edge.
  std::map<std::pair<int, int>, int> edge_at;   // (vertex idx, dir) -> edge idx
  std::vector<int> dir_of(g->edge_count(), -1);
  for (const auto& [key, b] : step_of) {
    int e = g->edge_index(vertices[key.first] + ">" + vertices[b]);
    edge_at[{key.first, key.second}] = e;
    dir_of[e] = key.second;
  }

  // Face weights.
  std::vector<std::pair<FaceKey, Complex>> faces;
  for (std::size_t a = 0; a < parts.size(); ++a) {
    const Partition& lam = parts[a];
    for (int i = 0; i < N; ++i) {
      auto e1 = edge_at.find({static_cast<int>(a), i});
      if (e1 == edge_at.end()) continue;
      int midv = g->edge_dst(e1->second);
      for (int j = 0; j < N; ++j) {
        auto e2 = edge_at.find({midv, j});
        if (e2 == edge_at.end()) continue;
        if (i == j) {
          faces.push_back({FaceKey{e1->second, e1->second, e2->second,
                                   e2->second},
                           t * zinv});
          continue;
        }
        int d = lam[i] - lam[j] + (j - i);
        Complex qd = qint(d);
        faces.push_back({FaceKey{e1->second, e1->second, e2->second,
                                 e2->second},
                         -ipow(t, -d) * zinv / qd});
        // Crossing into the transposed bent pair, when it exists.
        auto f1 = edge_at.find({static_cast<int>(a), j});
        if (f1 == edge_at.end()) continue;
        auto f2 = edge_at.find({g->edge_dst(f1->second), i});
        if (f2 == edge_at.end()) continue;
        faces.push_back({FaceKey{f1->second, e1->second, f2->second,
                                 e2->second},
                         eps * qint(d - 1) * zinv / qd});
      }
    }
  }

  ModelFile mf;
  mf.model = FaceModel::create(g, std::move(faces));

  // Vertex norms D(lambda).
  std::vector<Complex> dnorm(parts.size());
  for (std::size_t a = 0; a < parts.size(); ++a) {
    Complex prod(1.0, 0.0);
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j)
        prod *= qint(parts[a][i] - parts[a][j] + (j - i)) / qint(j - i);
    dnorm[a] = prod;
  }

  ModelMetadata md;
  md.family = "sos";
  md.params["t"] = t;
  md.params["zeta"] = zeta;
  md.ints["n"] = N;
  md.ints["level"] = L;
  md.ints["t_num"] = p.t_num;
  md.ints["eps"] = p.eps;
  md.ints["zeta_root"] = p.zeta_root;
  for (std::size_t a = 0; a < parts.size(); ++a)
    md.params["D:" + vertices[a]] = dnorm[a];

  std::vector<Complex> mplus(g->edge_count()), mminus(g->edge_count());
  for (int e = 0; e < g->edge_count(); ++e) {
    mplus[e] = dnorm[g->edge_dst(e)] / dnorm[g->edge_src(e)];
    mminus[e] = -mplus[e];
  }
  md.m_plus = mplus;
  md.m_minus = mminus;
  md.s2 = mplus;
  md.hecke_a = t * zinv;
  md.hecke_b = -tinv * zinv;

  // Determinant generator: for each vertex the lexicographically smallest
  // closed degree-N path is the column; every closed degree-N path is a row.
  auto sN = PathSpace::enumerate(g, N);
  auto noninversions = [&](const Path& path) {
    int count = 0;
    for (int k = 0; k < N; ++k)
      for (int l = k + 1; l < N; ++l)
        if (dir_of[path.edges[k]] < dir_of[path.edges[l]]) ++count;
    return count;
  };
  auto sign_pow = [&](int m) {
    return (m % 2 == 0) ? Complex(1.0, 0.0) : Complex(-eps, 0.0);
  };

  std::vector<int> column_path(parts.size(), -1);
  std::vector<std::vector<int>> closed_at(parts.size());
  for (int i = 0; i < sN->dim(); ++i) {
    if (sN->source(i) != sN->range(i)) continue;
    int v = sN->source(i);
    closed_at[v].push_back(i);
    if (column_path[v] < 0) column_path[v] = i;
  }
  GroupLikeVector det;
  for (std::size_t mu = 0; mu < parts.size(); ++mu) {
    if (column_path[mu] < 0)
      throw Error(ErrorKind::Internal,
                  "no closed path of full degree at vertex " + vertices[mu]);
    const Path& qcol = sN->path(column_path[mu]);
    Complex colsign = sign_pow(noninversions(qcol));
    for (std::size_t lam = 0; lam < parts.size(); ++lam)
      for (int idx : closed_at[lam]) {
        const Path& prow = sN->path(idx);
        Complex coeff = sign_pow(noninversions(prow)) * colsign *
                        dnorm[mu] / dnorm[lam];
        det.terms.push_back(GroupLikeTerm{prow, qcol, coeff});
      }
  }
  md.det = det;
  md.det_compatible =
      std::abs(ipow(zeta, N) - rhs) < 1e-12 * std::max(1.0, std::abs(rhs));

  mf.metadata = md;
  return mf;
}

// ---------------------------------------------------------------------------

GroupLikeVector det_vector_A(const FaceModel& m, int n_strands, Complex q,
                             Complex eta, double tol) {
  const OrientedGraph& g = m.graph();
  if (g.vertex_count() != 1)
    throw Error(ErrorKind::BadParams,
                "top exterior generator requires a one-vertex model");
  const int N = n_strands;
  if (N != g.edge_count())
    throw Error(ErrorKind::BadParams,
                "degree must match the number of edge labels");
  if (N < 1 || N > 5)
    throw Error(ErrorKind::BadParams, "degree must lie in 1..5");

  const Complex qinv = Complex(1.0, 0.0) / q;
  if (std::abs(q - qinv) < tol)
    throw Error(ErrorKind::DimensionMismatch,
                "q - 1/q vanishes; the antisymmetric subspace is degenerate");
  for (int k = 2; k <= N; ++k)
    if (std::abs(ipow(q, k) - ipow(q, -k)) < tol * std::abs(q - qinv))
      throw Error(ErrorKind::DimensionMismatch,
                  "a quantum integer vanishes; the antisymmetric subspace is "
                  "degenerate");

  GraphPtr gp = m.graph_ptr();
  auto sN = PathSpace::enumerate(gp, N);
  Path id_path{0, {}};
  for (int i = 0; i < N; ++i) id_path.edges.push_back(i);
  int id_index = sN->index_of(id_path);

  Eigen::VectorXcd v;
  if (N == 1) {
    v = Eigen::VectorXcd::Ones(1);
  } else if (N == 5) {
    // Closed form: coefficient (-q)^{inversions} on each permutation path.
    v = Eigen::VectorXcd::Zero(sN->dim());
    std::vector<int> perm(N);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      int inv = 0;
      for (int k = 0; k < N; ++k)
        for (int l = k + 1; l < N; ++l)
          if (perm[k] > perm[l]) ++inv;
      v(sN->index_of(Path{0, perm})) = ipow(-q, inv);
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    // Joint kernel of (w_i + eta q) over all strand positions.
    auto s2 = PathSpace::enumerate(gp, 2);
    BlockOperator w = m.as_operator(s2);
    Matrix basis = Matrix::Identity(sN->dim(), sN->dim());
    for (int i = 0; i + 1 < N; ++i) {
      BlockOperator wi = embed_slot(w, i, N - 2 - i);
      Matrix shifted =
          (wi.matrix() + eta * q * Matrix::Identity(sN->dim(), sN->dim())) *
          basis;
      Eigen::FullPivLU<Matrix> lu(shifted);
      lu.setThreshold(tol);
      if (lu.rank() == shifted.cols()) {
        basis = Matrix(sN->dim(), 0);
        break;
      }
      basis = basis * lu.kernel();
    }
    if (basis.cols() != 1)
      throw Error(ErrorKind::DimensionMismatch,
                  "antisymmetric subspace has dimension " +
                      std::to_string(basis.cols()) + ", expected 1");
    v = basis.col(0);
    if (std::abs(v(id_index)) < 1e-10 * v.cwiseAbs().maxCoeff())
      throw Error(ErrorKind::Internal,
                  "identity-path coefficient vanishes; cannot normalise");
    v /= v(id_index);
  }

  // Verify the eigenvector property on every strand position.
  if (N >= 2) {
    auto s2 = PathSpace::enumerate(gp, 2);
    BlockOperator w = m.as_operator(s2);
    double vscale = v.cwiseAbs().maxCoeff();
    for (int i = 0; i + 1 < N; ++i) {
      BlockOperator wi = embed_slot(w, i, N - 2 - i);
      double res = ((wi.matrix() * v + eta * q * v).cwiseAbs().maxCoeff()) /
                   (vscale * std::max(1.0, std::abs(eta * q)));
      if (res > std::max(tol, 1e-10))
        throw Error(ErrorKind::DimensionMismatch,
                    "candidate vector is not antisymmetric (residual " +
                        std::to_string(res) + ")");
    }
  }

  GroupLikeVector det;
  double cutoff = 1e-10 * v.cwiseAbs().maxCoeff();
  for (int k = 0; k < sN->dim(); ++k)
    if (std::abs(v(k)) > cutoff)
      det.terms.push_back(GroupLikeTerm{id_path, sN->path(k), v(k)});
  return det;
}

}  // namespace ribbonlab
