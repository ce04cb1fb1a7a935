#include "ribbonlab/ribbon.hpp"

#include <cmath>

#include "ribbonlab/numerics.hpp"

namespace ribbonlab {

std::vector<RibbonSolution> ribbon_solve(const DrinfeldOperators& ops,
                                         double cluster_radius, double tol) {
  EdgeOperator target = ops.ribbon_target();
  EdgeOperator mtarget = ops.mrib_target();
  EdgeOperator v = operator_sqrt(target, cluster_radius, tol);
  EdgeOperator vinv = invert(v, tol);
  EdgeOperator m = ops.u1 * vinv;

  auto solution = [&](int sign) {
    EdgeOperator vs = v.scaled(Complex(sign, 0.0));
    EdgeOperator ms = m.scaled(Complex(sign, 0.0));
    RibbonSolution s{sign, vs, ms, 0.0, 0.0};
    s.v2_residual =
        normalized_residual(vs.matrix() * vs.matrix(), target.matrix());
    s.m2_residual =
        normalized_residual(ms.matrix() * ms.matrix(), mtarget.matrix());
    return s;
  };
  return {solution(+1), solution(-1)};
}

std::vector<CheckReport> mcrit_check(const EdgeOperator& m,
                                     const std::vector<Complex>& s2_diagonal,
                                     double tol) {
  int n = m.dim();
  if (static_cast<int>(s2_diagonal.size()) != n)
    throw Error(ErrorKind::DimensionMismatch,
                "diagonal length does not match the edge space");
  EdgeOperator minv = invert(m, tol);

  std::vector<CheckReport> out;

  // M E_pq M^{-1} = (d_p / d_q) E_pq for every matrix unit of the edge
  // space.
  CheckReport conj;
  conj.check = "mcrit:conjugation";
  conj.residual = 0.0;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      if (std::abs(s2_diagonal[q]) < 1e-300)
        throw Error(ErrorKind::ZeroEigenvalue,
                    "diagonal entry vanishes; conjugation ratio undefined");
      Matrix outer = m.matrix().col(p) * minv.matrix().row(q);
      Matrix expected = Matrix::Zero(n, n);
      expected(p, q) = s2_diagonal[p] / s2_diagonal[q];
      double r = normalized_residual(outer, expected);
      if (r > conj.residual) {
        conj.residual = r;
        conj.witness = "worst unit (p, q) = (" +
                       m.space().graph().edge_id(p) + ", " +
                       m.space().graph().edge_id(q) + ")";
      }
    }
  conj.pass = conj.residual < tol;
  if (conj.pass) conj.witness.reset();
  out.push_back(conj);

  Complex tr = m.matrix().trace();
  Complex tri = minv.matrix().trace();

  CheckReport bal;
  bal.check = "mcrit:trace-balance";
  bal.residual =
      std::abs(tr - tri) / std::max({std::abs(tr), std::abs(tri), 1e-300});
  bal.pass = bal.residual < tol;
  out.push_back(bal);

  CheckReport nz;
  nz.check = "mcrit:trace-nonzero";
  nz.pass = std::abs(tr) > tol;
  nz.residual = nz.pass ? 0.0 : 1.0;
  nz.witness = "trace = " + std::to_string(tr.real()) +
               (tr.imag() < 0 ? " - " : " + ") +
               std::to_string(std::abs(tr.imag())) + "i";
  out.push_back(nz);
  return out;
}

std::vector<QuotientResult> quotient_vanishing(
    const EdgeOperator& m,
    const std::vector<std::pair<std::string, GroupLikeVector>>& ideals,
    double tol) {
  std::vector<QuotientResult> out;
  for (const auto& [name, glv] : ideals) {
    double weight = 0.0;
    for (const auto& t : glv.terms) weight += std::abs(t.coeff);
    Complex value = evaluate_glf(m, glv);
    out.push_back(QuotientResult{
        name, value, std::abs(value) < tol * std::max(1.0, weight)});
  }
  return out;
}

}  // namespace ribbonlab
