#include "ribbonlab/drinfeld.hpp"

#include <cmath>

namespace ribbonlab {

Complex LyubashenkoForms::q_minus(int a, int b, int c, int d) const {
  auto row = dbl_->tilde_plain.index.find({d, a});
  auto col = dbl_->plain_tilde.index.find({b, c});
  if (row == dbl_->tilde_plain.index.end() ||
      col == dbl_->plain_tilde.index.end())
    return Complex(0.0, 0.0);
  return dbl_->rect_minus_inv(row->second, col->second);
}

Complex LyubashenkoForms::q_plus(int a, int b, int c, int d) const {
  auto row = dbl_->tilde_plain.index.find({b, c});
  auto col = dbl_->plain_tilde.index.find({d, a});
  if (row == dbl_->tilde_plain.index.end() ||
      col == dbl_->plain_tilde.index.end())
    return Complex(0.0, 0.0);
  return dbl_->rect_inv(row->second, col->second);
}

DrinfeldOperators drinfeld_operators(const FaceModel& m,
                                     const LyubashenkoDouble& dbl,
                                     double tol) {
  GraphPtr gp = m.graph_ptr();
  auto s1 = PathSpace::enumerate(gp, 1);
  int n = s1->dim();
  const OrientedGraph& g = *gp;
  LyubashenkoForms forms(&dbl);

  Matrix u1 = Matrix::Zero(n, n), u1inv = Matrix::Zero(n, n);
  Matrix u2 = Matrix::Zero(n, n), u2inv = Matrix::Zero(n, n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      if (g.edge_src(p) != g.edge_src(q) || g.edge_dst(p) != g.edge_dst(q))
        continue;
      Complex a(0.0, 0.0), ai(0.0, 0.0), b(0.0, 0.0), bi(0.0, 0.0);
      for (int t = 0; t < n; ++t) {
        a += forms.q_minus(t, q, p, t);
        bi += forms.q_minus(p, t, t, q);
        ai += forms.q_plus(t, q, p, t);
        b += forms.q_plus(p, t, t, q);
      }
      u1(p, q) = a;
      u1inv(p, q) = ai;
      u2(p, q) = b;
      u2inv(p, q) = bi;
    }

  DrinfeldOperators ops{
      EdgeOperator(s1, u1), EdgeOperator(s1, u1inv), EdgeOperator(s1, u2),
      EdgeOperator(s1, u2inv), 0.0, 0.0};

  Matrix id = Matrix::Identity(n, n);
  double r1 = normalized_residual(u1 * u1inv, id);
  double r2 = normalized_residual(u2 * u2inv, id);
  ops.inverse_residual = std::max(r1, r2);
  if (ops.inverse_residual >= tol)
    throw Error(ErrorKind::NonInvertibleDrinfeld,
                "closure sums are not mutually inverse (residual " +
                    std::to_string(ops.inverse_residual) + ")");
  ops.commutation_residual = normalized_residual(u1 * u2inv, u2inv * u1);
  return ops;
}

std::vector<CheckReport> uu_commutation_check(const FaceModel& m,
                                              const DrinfeldOperators& ops,
                                              double tol) {
  std::vector<CheckReport> out;
  CheckReport r1 = check_glf_commutant(m, ops.u1, tol);
  r1.check = "drinfeld-commutation:u1";
  out.push_back(std::move(r1));
  CheckReport r2 = check_glf_commutant(m, ops.u2inv, tol);
  r2.check = "drinfeld-commutation:u2inv";
  out.push_back(std::move(r2));
  return out;
}

std::vector<Matrix> edge_algebra_generators(const FaceModel& m,
                                            const LyubashenkoDouble& dbl) {
  GraphPtr gp = m.graph_ptr();
  auto s1 = PathSpace::enumerate(gp, 1);
  int n = s1->dim();
  LyubashenkoForms forms(&dbl);

  std::vector<Matrix> gens;
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) {
      Matrix lm = Matrix::Zero(n, n), lp = Matrix::Zero(n, n);
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
          lm(p, q) = forms.q_minus(p, q, r, s);
          lp(p, q) = forms.q_plus(p, q, r, s);
        }
      if (max_abs(lm) > 0.0) gens.push_back(std::move(lm));
      if (max_abs(lp) > 0.0) gens.push_back(std::move(lp));
    }
  return gens;
}

}  // namespace ribbonlab
