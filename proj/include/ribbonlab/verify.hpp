#pragma once

// Structural checks on face models: the braid (star-triangle) relation, the
// doubled model with its closability requirement, quadratic/cubic skein
// relations, compatibility of candidate group-like edge operators, and the
// enhancement constants that make Markov traces framing-aware.

#include <optional>
#include <utility>
#include <vector>

#include "ribbonlab/face_model.hpp"
#include "ribbonlab/numerics.hpp"

namespace ribbonlab {

// w1 w2 w1 = w2 w1 w2 on the degree-3 path space, where w1 = w (x) id and
// w2 = id (x) w.
CheckReport check_star_triangular(const FaceModel& m,
                                  double tol = kDefaultTol);

// Basis of ordered edge pairs used by the doubled model's rectangular
// operators.  `tilde_first` selects pairs (p, q) with src(p) = src(q)
// (representing reversed-then-forward paths); otherwise pairs (r, s) with
// dst(r) = dst(s) (forward-then-reversed).
struct PairBasis {
  std::vector<std::pair<int, int>> pairs;
  std::map<std::pair<int, int>, int> index;
  // block key: endpoints of the represented degree-2 path
  std::map<std::pair<int, int>, std::vector<int>> blocks;

  int index_of(int a, int b) const {
    auto it = index.find({a, b});
    return it == index.end() ? -1 : it->second;
  }
};

PairBasis make_pair_basis(const OrientedGraph& g, bool tilde_first);

// The doubled model: the graph acquires a reversed twin ~e of every edge e,
// and the weight table extends w by three further sectors fixed by the
// requirement that the extension stays braided.  The two rectangular
// operators (the mixed sectors before inversion) must be invertible for the
// extension to exist; otherwise NotClosable is thrown.
struct LyubashenkoDouble {
  FaceModel doubled;        // full model on the doubled graph
  GraphPtr doubled_graph;
  std::vector<int> plain_edge;  // doubled index of each original edge
  std::vector<int> tilde_edge;  // doubled index of each reversed twin

  PairBasis tilde_plain;    // domain of the rectangular operators
  PairBasis plain_tilde;    // codomain

  // Rectangular sector built from w^{-1}: entries [ (r,s~), (p~,q) ].
  Matrix rect;
  // Rectangular sector built from w: same index layout.
  Matrix rect_minus;
  Matrix rect_inv;        // rows: tilde_plain, cols: plain_tilde
  Matrix rect_minus_inv;  // rows: tilde_plain, cols: plain_tilde
};

LyubashenkoDouble build_lyubashenko_double(const FaceModel& m,
                                           double tol = kDefaultTol);

// Braid relation for the doubled model on its degree-3 path space.
CheckReport check_double_star_triangular(const LyubashenkoDouble& dbl,
                                         double tol = kDefaultTol);

// (w - a)(w - b) = 0 on the degree-2 space.
CheckReport check_hecke(const FaceModel& m, Complex a, Complex b,
                        double tol = kDefaultTol);

// Full relation list of the cubic (Birman-Murakami-Wenzl type) skein algebra
// for g = w, e = (g - g^{-1})/mu + 1 with mu = q - 1/q:
//   (g - 1/lambda)(g + q)(g - 1/q) = 0,     g1 g2 g1 = g2 g1 g2,
//   g^2 = -mu g + mu e / lambda + 1,        e^2 = zeta e,
//   e g = g e = e / lambda,                 e_i e_j e_i = e_i,
//   e_i g_j e_i = lambda e_i,               e_i e_j g_i = e_i g_j - mu e_i e_j + mu e_i,
//   g_i e_j e_i = g_j e_i - mu e_j e_i + mu e_i,
//   e_i g_j g_i = e_i e_j,                  g_i g_j e_i = e_j e_i,
//   g_i e_j g_i - g_j e_i g_j = mu (e_i g_j + g_j e_i - e_j g_i - g_i e_j)
//                               + mu^2 (e_i - e_j),
// with zeta = -(lambda - 1/lambda)/mu + 1, for both orderings (i,j).
// The cubic must be the minimal polynomial: each of its roots 1/lambda, -q,
// 1/q has to occur in the spectrum of g ("minimal-cubic").  Models that a
// proper divisor already annihilates (so e = 0 and every e-relation holds
// vacuously at any lambda) fail that item rather than passing degenerately.
// Throws MuZero when |q - 1/q| < tol.
std::vector<CheckReport> check_bmw(const FaceModel& m, Complex lambda,
                                   Complex q, double tol = kDefaultTol);

// (G (x) G) w = w (G (x) G) on the degree-2 space: the condition for the
// functional induced by G to respect the model's relations.
CheckReport check_glf_commutant(const FaceModel& m, const EdgeOperator& G,
                                double tol = kDefaultTol);

// Enhancement constants: the weighted partial traces of w and w^{-1},
//   partial_trace_last(w^{+-1}, M) = c_{+-} id,
// must be scalar.  Throws NotEnhanced when a block is non-scalar or when the
// per-block scalars disagree (the two failure modes are distinguished in the
// message).
struct EnhancementConstants {
  Complex c_plus;
  Complex c_minus;
  double residual_plus = 0.0;
  double residual_minus = 0.0;
};

EnhancementConstants enhancement_constants(const FaceModel& m,
                                           const EdgeOperator& M,
                                           double tol = kDefaultTol);

}  // namespace ribbonlab
