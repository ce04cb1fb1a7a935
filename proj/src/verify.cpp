#include "ribbonlab/verify.hpp"

#include <cmath>
#include <set>

namespace ribbonlab {

namespace {

CheckReport make_report(const std::string& name, const Matrix& lhs,
                        const Matrix& rhs, const PathSpace* sp, double tol) {
  CheckReport rep;
  rep.check = name;
  int wr = 0, wc = 0;
  rep.residual = normalized_residual(lhs, rhs, &wr, &wc);
  rep.pass = rep.residual < tol;
  if (!rep.pass && sp) {
    rep.witness = "worst entry at (" + path_to_string(sp->graph(), sp->path(wr)) +
                  ", " + path_to_string(sp->graph(), sp->path(wc)) + ")";
  }
  return rep;
}

}  // namespace

CheckReport check_star_triangular(const FaceModel& m, double tol) {
  GraphPtr g = m.graph_ptr();
  auto s2 = PathSpace::enumerate(g, 2);
  BlockOperator w = m.as_operator(s2);
  BlockOperator w1 = embed_slot(w, 0, 1);
  BlockOperator w2 = embed_slot(w, 1, 0);
  Matrix lhs = w1.matrix() * w2.matrix() * w1.matrix();
  Matrix rhs = w2.matrix() * w1.matrix() * w2.matrix();
  return make_report("star-triangular", lhs, rhs, &w1.space(), tol);
}

PairBasis make_pair_basis(const OrientedGraph& g, bool tilde_first) {
  PairBasis b;
  for (int a = 0; a < g.edge_count(); ++a)
    for (int c = 0; c < g.edge_count(); ++c) {
      bool ok = tilde_first ? g.edge_src(a) == g.edge_src(c)
                            : g.edge_dst(a) == g.edge_dst(c);
      if (!ok) continue;
      int idx = static_cast<int>(b.pairs.size());
      b.pairs.push_back({a, c});
      b.index[{a, c}] = idx;
      auto key = tilde_first
                     ? std::make_pair(g.edge_dst(a), g.edge_dst(c))
                     : std::make_pair(g.edge_src(a), g.edge_src(c));
      b.blocks[key].push_back(idx);
    }
  return b;
}

namespace {

// Blockwise inverse of a rectangular sector.  Domain blocks (from `dom`) and
// codomain blocks (from `cod`) are matched by key; mismatched dimensions or a
// singular block make the model non-closable.
Matrix invert_sector(const Matrix& mat, const PairBasis& dom,
                     const PairBasis& cod, const OrientedGraph& g, double tol,
                     const char* name) {
  Matrix inv = Matrix::Zero(mat.cols(), mat.rows());
  auto block_of = [&](const PairBasis& b, std::pair<int, int> key)
      -> const std::vector<int>* {
    auto it = b.blocks.find(key);
    return it == b.blocks.end() ? nullptr : &it->second;
  };

  std::set<std::pair<int, int>> keys;
  for (const auto& [k, v] : dom.blocks) keys.insert(k);
  for (const auto& [k, v] : cod.blocks) keys.insert(k);

  for (const auto& key : keys) {
    const auto* di = block_of(dom, key);
    const auto* ci = block_of(cod, key);
    std::size_t dn = di ? di->size() : 0, cn = ci ? ci->size() : 0;
    std::string bname = "(" + g.vertex_id(key.first) + ", " +
                        g.vertex_id(key.second) + ")";
    if (dn != cn)
      throw Error(ErrorKind::NotClosable,
                  std::string(name) + ": block " + bname +
                      " is not square (" + std::to_string(dn) + " vs " +
                      std::to_string(cn) + ")");
    if (dn == 0) continue;
    Matrix blk(cn, dn);
    for (std::size_t i = 0; i < cn; ++i)
      for (std::size_t j = 0; j < dn; ++j)
        blk(i, j) = mat((*ci)[i], (*di)[j]);
    Eigen::FullPivLU<Matrix> lu(blk);
    lu.setThreshold(tol);
    if (lu.rank() < static_cast<int>(dn))
      throw Error(ErrorKind::NotClosable,
                  std::string(name) + ": block " + bname + " is singular");
    Matrix binv = lu.inverse();
    for (std::size_t i = 0; i < dn; ++i)
      for (std::size_t j = 0; j < cn; ++j)
        inv((*di)[i], (*ci)[j]) = binv(i, j);
  }
  return inv;
}

}  // namespace

LyubashenkoDouble build_lyubashenko_double(const FaceModel& m, double tol) {
  GraphPtr g = m.graph_ptr();
  const OrientedGraph& gr = *g;
  auto s2 = PathSpace::enumerate(g, 2);
  BlockOperator w = m.as_operator(s2);
  BlockOperator winv = invert(w, tol);

  LyubashenkoDouble dbl;
  dbl.tilde_plain = make_pair_basis(gr, /*tilde_first=*/true);
  dbl.plain_tilde = make_pair_basis(gr, /*tilde_first=*/false);

  auto deg2_index = [&](int a, int b) -> int {
    if (gr.edge_dst(a) != gr.edge_src(b)) return -1;
    return s2->index_of(Path{gr.edge_src(a), {a, b}});
  };

  int dn = static_cast<int>(dbl.tilde_plain.pairs.size());
  int cn = static_cast<int>(dbl.plain_tilde.pairs.size());
  dbl.rect = Matrix::Zero(cn, dn);
  dbl.rect_minus = Matrix::Zero(cn, dn);
  for (int col = 0; col < dn; ++col) {
    auto [p, q] = dbl.tilde_plain.pairs[col];
    for (int row = 0; row < cn; ++row) {
      auto [r, s] = dbl.plain_tilde.pairs[row];
      int i = deg2_index(p, r), j = deg2_index(q, s);
      if (i < 0 || j < 0) continue;
      dbl.rect(row, col) = winv.entry(i, j);
      dbl.rect_minus(row, col) = w.entry(i, j);
    }
  }

  dbl.rect_inv = invert_sector(dbl.rect, dbl.tilde_plain, dbl.plain_tilde, gr,
                               tol, "mixed sector");
  dbl.rect_minus_inv = invert_sector(dbl.rect_minus, dbl.tilde_plain,
                                     dbl.plain_tilde, gr, tol,
                                     "mixed sector (minus)");

  // Doubled graph: each edge e acquires a reversed twin ~e.
  std::vector<std::string> vertices;
  for (int v = 0; v < gr.vertex_count(); ++v)
    vertices.push_back(gr.vertex_id(v));
  std::vector<EdgeSpec> edges;
  for (int e = 0; e < gr.edge_count(); ++e) {
    edges.push_back(EdgeSpec{gr.edge_id(e), gr.vertex_id(gr.edge_src(e)),
                             gr.vertex_id(gr.edge_dst(e))});
    edges.push_back(EdgeSpec{"~" + gr.edge_id(e),
                             gr.vertex_id(gr.edge_dst(e)),
                             gr.vertex_id(gr.edge_src(e))});
  }
  dbl.doubled_graph = OrientedGraph::create(std::move(vertices),
                                            std::move(edges));
  const OrientedGraph& dg = *dbl.doubled_graph;
  dbl.plain_edge.resize(gr.edge_count());
  dbl.tilde_edge.resize(gr.edge_count());
  for (int e = 0; e < gr.edge_count(); ++e) {
    dbl.plain_edge[e] = dg.edge_index(gr.edge_id(e));
    dbl.tilde_edge[e] = dg.edge_index("~" + gr.edge_id(e));
  }

  // Assemble the four weight sectors of the doubled model.
  std::vector<std::pair<FaceKey, Complex>> faces;
  auto push = [&](int left, int top, int bottom, int right, Complex wt) {
    if (wt == Complex(0.0, 0.0)) return;
    faces.push_back({FaceKey{left, top, bottom, right}, wt});
  };

  // Sector 1: the original model.
  for (const auto& [key, wt] : m.faces())
    push(dbl.plain_edge[key.r], dbl.plain_edge[key.p], dbl.plain_edge[key.q],
         dbl.plain_edge[key.s], wt);

  // Sector 2 (input ~p . q, output r . ~s): entries of w^{-1}.
  for (int col = 0; col < dn; ++col) {
    auto [p, q] = dbl.tilde_plain.pairs[col];
    for (int row = 0; row < cn; ++row) {
      auto [r, s] = dbl.plain_tilde.pairs[row];
      push(dbl.plain_edge[r], dbl.tilde_edge[p], dbl.tilde_edge[s],
           dbl.plain_edge[q], dbl.rect(row, col));
    }
  }

  // Sector 3 (input x . ~y, output ~u . v): entries of the inverted minus
  // sector.
  for (int row = 0; row < dn; ++row) {
    auto [u, v] = dbl.tilde_plain.pairs[row];
    for (int col = 0; col < cn; ++col) {
      auto [x, y] = dbl.plain_tilde.pairs[col];
      push(dbl.tilde_edge[u], dbl.plain_edge[x], dbl.plain_edge[v],
           dbl.tilde_edge[y], dbl.rect_minus_inv(row, col));
    }
  }

  // Sector 4 (all-tilde): the original weights with the face rotated half a
  // turn: for an original face (r, p, q, s) the twin face is
  // (left ~s, top ~q, bottom ~p, right ~r) with the same weight.
  for (const auto& [key, wt] : m.faces())
    push(dbl.tilde_edge[key.s], dbl.tilde_edge[key.q], dbl.tilde_edge[key.p],
         dbl.tilde_edge[key.r], wt);

  dbl.doubled = FaceModel::create(dbl.doubled_graph, std::move(faces));
  return dbl;
}

CheckReport check_double_star_triangular(const LyubashenkoDouble& dbl,
                                         double tol) {
  CheckReport rep = check_star_triangular(dbl.doubled, tol);
  rep.check = "double-star-triangular";
  return rep;
}

CheckReport check_hecke(const FaceModel& m, Complex a, Complex b, double tol) {
  auto s2 = PathSpace::enumerate(m.graph_ptr(), 2);
  BlockOperator w = m.as_operator(s2);
  Matrix id = Matrix::Identity(w.dim(), w.dim());
  Matrix lhs = (w.matrix() - a * id) * (w.matrix() - b * id);
  // Normalise against the factors rather than the (ideally zero) rhs.
  CheckReport rep;
  rep.check = "hecke";
  double scale = std::max({max_abs(w.matrix() - a * id),
                           max_abs(w.matrix() - b * id), 1e-300});
  int wr = 0, wc = 0;
  Eigen::Index r = 0, c = 0;
  double worst = lhs.size() == 0 ? 0.0 : lhs.cwiseAbs().maxCoeff(&r, &c);
  wr = static_cast<int>(r);
  wc = static_cast<int>(c);
  rep.residual = worst / (scale * scale);
  rep.pass = rep.residual < tol;
  if (!rep.pass)
    rep.witness = "worst entry at (" +
                  path_to_string(m.graph(), s2->path(wr)) + ", " +
                  path_to_string(m.graph(), s2->path(wc)) + ")";
  return rep;
}

std::vector<CheckReport> check_bmw(const FaceModel& m, Complex lambda,
                                   Complex q, double tol) {
  Complex mu = q - Complex(1.0, 0.0) / q;
  if (std::abs(mu) < tol)
    throw Error(ErrorKind::MuZero, "q - 1/q vanishes");
  Complex linv = Complex(1.0, 0.0) / lambda;
  Complex zeta = -(lambda - linv) / mu + Complex(1.0, 0.0);

  GraphPtr gp = m.graph_ptr();
  auto s2 = PathSpace::enumerate(gp, 2);
  BlockOperator g = m.as_operator(s2);
  BlockOperator ginv = invert(g, tol);
  Matrix id2 = Matrix::Identity(g.dim(), g.dim());
  Matrix e2m = (g.matrix() - ginv.matrix()) / mu + id2;
  BlockOperator e(g.space_ptr(), e2m);

  std::vector<CheckReport> out;
  auto add = [&](const std::string& name, const Matrix& lhs,
                 const Matrix& rhs, const PathSpace* sp) {
    out.push_back(make_report("bmw:" + name, lhs, rhs, sp, tol));
  };

  // Degree-2 relations.  The cubic has an identically-zero right hand side,
  // so normalise against the product of the factor magnitudes instead.
  {
    Matrix f1 = g.matrix() - linv * id2;
    Matrix f2 = g.matrix() + q * id2;
    Matrix f3 = g.matrix() - (Complex(1.0, 0.0) / q) * id2;
    Matrix lhs = f1 * f2 * f3;
    CheckReport rep;
    rep.check = "bmw:cubic";
    double scale =
        std::max({max_abs(f1), 1e-300}) * std::max({max_abs(f2), 1e-300}) *
        std::max({max_abs(f3), 1e-300});
    Eigen::Index r = 0, c = 0;
    double worst = lhs.size() == 0 ? 0.0 : lhs.cwiseAbs().maxCoeff(&r, &c);
    rep.residual = worst / scale;
    rep.pass = rep.residual < tol;
    if (!rep.pass)
      rep.witness =
          "worst entry at (" +
          path_to_string(m.graph(), g.space().path(static_cast<int>(r))) +
          ", " +
          path_to_string(m.graph(), g.space().path(static_cast<int>(c))) +
          ")";
    out.push_back(rep);
  }
  // Minimality of the cubic: every root must occur in the spectrum.  A model
  // annihilated by a proper divisor has e = 0, which makes each e-relation
  // below hold at any lambda; this item is what rejects such models.
  {
    Eigen::ComplexEigenSolver<Matrix> es(g.matrix(), false);
    const Eigen::VectorXcd& eigs = es.eigenvalues();
    double scale = std::max(1.0, eigs.cwiseAbs().maxCoeff());
    CheckReport rep;
    rep.check = "bmw:minimal-cubic";
    rep.residual = 0.0;
    const std::pair<const char*, Complex> roots[] = {
        {"1/lambda", linv}, {"-q", -q}, {"1/q", Complex(1.0, 0.0) / q}};
    const char* missing = nullptr;
    for (const auto& [name, root] : roots) {
      double nearest = (eigs.array() - root).abs().minCoeff() / scale;
      if (nearest > rep.residual) {
        rep.residual = nearest;
        missing = name;
      }
    }
    rep.pass = rep.residual < tol;
    if (!rep.pass)
      rep.witness =
          std::string("cubic root ") + missing + " is missing from the spectrum";
    out.push_back(rep);
  }
  add("quadratic", g.matrix() * g.matrix(),
      -mu * g.matrix() + linv * mu * e.matrix() + id2, &g.space());
  add("idempotent-scaled", e.matrix() * e.matrix(), zeta * e.matrix(),
      &g.space());
  add("eg", e.matrix() * g.matrix(), linv * e.matrix(), &g.space());
  add("ge", g.matrix() * e.matrix(), linv * e.matrix(), &g.space());

  // Degree-3 relations.
  BlockOperator g1 = embed_slot(g, 0, 1), g2 = embed_slot(g, 1, 0);
  BlockOperator e1 = embed_slot(e, 0, 1), e2 = embed_slot(e, 1, 0);
  const Matrix &G1 = g1.matrix(), &G2 = g2.matrix(), &E1 = e1.matrix(),
               &E2 = e2.matrix();
  const PathSpace* s3 = &g1.space();

  add("braid", G1 * G2 * G1, G2 * G1 * G2, s3);
  add("eee:121", E1 * E2 * E1, E1, s3);
  add("eee:212", E2 * E1 * E2, E2, s3);
  add("ege:121", E1 * G2 * E1, lambda * E1, s3);
  add("ege:212", E2 * G1 * E2, lambda * E2, s3);
  add("eeg:12", E1 * E2 * G1, E1 * G2 - mu * E1 * E2 + mu * E1, s3);
  add("eeg:21", E2 * E1 * G2, E2 * G1 - mu * E2 * E1 + mu * E2, s3);
  add("gee:12", G1 * E2 * E1, G2 * E1 - mu * E2 * E1 + mu * E1, s3);
  add("gee:21", G2 * E1 * E2, G1 * E2 - mu * E1 * E2 + mu * E2, s3);
  add("egg:12", E1 * G2 * G1, E1 * E2, s3);
  add("egg:21", E2 * G1 * G2, E2 * E1, s3);
  add("gge:12", G1 * G2 * E1, E2 * E1, s3);
  add("gge:21", G2 * G1 * E2, E1 * E2, s3);
  add("geg-antisym", G1 * E2 * G1 - G2 * E1 * G2,
      mu * (E1 * G2 + G2 * E1 - E2 * G1 - G1 * E2) + mu * mu * (E1 - E2),
      s3);
  return out;
}

CheckReport check_glf_commutant(const FaceModel& m, const EdgeOperator& G,
                                double tol) {
  GraphPtr gp = m.graph_ptr();
  auto s2 = PathSpace::enumerate(gp, 2);
  BlockOperator w = m.as_operator(s2);
  BlockOperator gg = truncated_tensor(G, G, s2);
  return make_report("glf-commutant", gg.matrix() * w.matrix(),
                     w.matrix() * gg.matrix(), &w.space(), tol);
}

namespace {

// Requires T (an edge-space operator) to be a global scalar multiple of the
// identity; distinguishes "some block is not scalar" from "blocks carry
// different scalars".
Complex require_scalar(const BlockOperator& T, double tol, const char* side,
                       double* residual) {
  const PathSpace& sp = T.space();
  int n = T.dim();
  if (n == 0)
    throw Error(ErrorKind::NotEnhanced,
                std::string(side) + ": empty edge space");
  double scale = std::max(max_abs(T.matrix()), 1e-300);

  double offdiag = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) offdiag = std::max(offdiag, std::abs(T.entry(i, j)));
  if (offdiag / scale >= tol)
    throw Error(ErrorKind::NotEnhanced,
                std::string(side) +
                    ": weighted partial trace is not diagonal (off-diagonal "
                    "magnitude " +
                    std::to_string(offdiag) + ")");

  // Per-block scalars.
  double within = 0.0;
  std::vector<Complex> block_scalars;
  for (const auto& [key, idx] : sp.blocks()) {
    Complex first = T.entry(idx[0], idx[0]);
    for (int i : idx)
      within = std::max(within, std::abs(T.entry(i, i) - first));
    block_scalars.push_back(first);
  }
  if (within / scale >= tol)
    throw Error(ErrorKind::NotEnhanced,
                std::string(side) + ": a block is not scalar (spread " +
                    std::to_string(within) + ")");

  double across = 0.0;
  for (const auto& s : block_scalars)
    across = std::max(across, std::abs(s - block_scalars[0]));
  if (across / scale >= tol)
    throw Error(ErrorKind::NotEnhanced,
                std::string(side) +
                    ": blocks are scalar but the scalars differ (spread " +
                    std::to_string(across) + ")");

  Complex mean(0.0, 0.0);
  for (int i = 0; i < n; ++i) mean += T.entry(i, i);
  mean /= static_cast<double>(n);
  if (residual) *residual = std::max(offdiag, within) / scale;
  return mean;
}

}  // namespace

EnhancementConstants enhancement_constants(const FaceModel& m,
                                           const EdgeOperator& M,
                                           double tol) {
  GraphPtr gp = m.graph_ptr();
  auto s1 = PathSpace::enumerate(gp, 1);
  auto s2 = PathSpace::enumerate(gp, 2);
  BlockOperator w = m.as_operator(s2);
  BlockOperator winv = invert(w, tol);

  EnhancementConstants out;
  BlockOperator tp = partial_trace_last(w, M, s1);
  out.c_plus = require_scalar(tp, tol, "plus side", &out.residual_plus);
  BlockOperator tm = partial_trace_last(winv, M, s1);
  out.c_minus = require_scalar(tm, tol, "minus side", &out.residual_minus);
  return out;
}

}  // namespace ribbonlab
