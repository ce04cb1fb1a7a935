#pragma once

// Formal linear combinations of path pairs (p, q) of equal degree, used to
// represent distinguished elements of the model's bialgebra (determinant-type
// and quadratic-form generators, and the unit) so that diagonal functionals
// can be evaluated on them.
//
// A functional induced by an edge operator G evaluates multiplicatively:
// a degree-m pair (p, q) contributes prod_k G(p_k, q_k); a degree-0 pair of
// vertices (i, j) contributes delta_{ij}.  Terms of different degrees may be
// mixed (e.g. "det - 1" pairs a degree-N combination with a degree-0 one).

#include <vector>

#include "ribbonlab/block_operator.hpp"
#include "ribbonlab/graph.hpp"

namespace ribbonlab {

struct GroupLikeTerm {
  Path p;
  Path q;
  Complex coeff;
};

struct GroupLikeVector {
  std::vector<GroupLikeTerm> terms;

  bool empty() const { return terms.empty(); }
};

// The unit element: coefficient 1 on every degree-0 pair (i, j); an induced
// functional evaluates it to the number of vertices.
GroupLikeVector unit_vector(const OrientedGraph& g);

// v - w (termwise concatenation; no simplification needed for evaluation).
GroupLikeVector glv_minus(const GroupLikeVector& v, const GroupLikeVector& w);

// Evaluates the functional induced by edge operator G on v.
Complex evaluate_glf(const EdgeOperator& G, const GroupLikeVector& v);

}  // namespace ribbonlab
