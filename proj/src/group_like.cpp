#include "ribbonlab/group_like.hpp"

namespace ribbonlab {

GroupLikeVector unit_vector(const OrientedGraph& g) {
  GroupLikeVector v;
  for (int i = 0; i < g.vertex_count(); ++i)
    for (int j = 0; j < g.vertex_count(); ++j)
      v.terms.push_back({Path{i, {}}, Path{j, {}}, Complex(1.0, 0.0)});
  return v;
}

GroupLikeVector glv_minus(const GroupLikeVector& v, const GroupLikeVector& w) {
  GroupLikeVector out = v;
  for (const auto& t : w.terms)
    out.terms.push_back({t.p, t.q, -t.coeff});
  return out;
}

Complex evaluate_glf(const EdgeOperator& G, const GroupLikeVector& v) {
  if (G.space().degree() != 1)
    throw Error(ErrorKind::DimensionMismatch,
                "group-like evaluation needs an edge operator");
  Complex total(0.0, 0.0);
  for (const auto& t : v.terms) {
    if (t.p.degree() != t.q.degree())
      throw Error(ErrorKind::DimensionMismatch,
                  "paired paths of unequal degree");
    if (t.p.degree() == 0) {
      if (t.p.start == t.q.start) total += t.coeff;
      continue;
    }
    Complex prod(1.0, 0.0);
    for (int k = 0; k < t.p.degree(); ++k) {
      prod *= G.entry(t.p.edges[k], t.q.edges[k]);
      if (prod == Complex(0.0, 0.0)) break;
    }
    total += t.coeff * prod;
  }
  return total;
}

}  // namespace ribbonlab
