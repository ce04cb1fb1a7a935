#pragma once

// Face models: a finite oriented graph together with a complex weight for
// each face.  A face is a quadruple of edges (r, p, q, s) forming a square
//
//        p
//    A ----> B
//  r |       | s        r: left   p: top
//    v       v          q: bottom s: right
//    C ----> D
//        q
//
// i.e. src(p) = src(r), dst(p) = src(s), dst(r) = src(q), dst(q) = dst(s).
// The associated operator on the degree-2 path space maps the input path
// p.s (top, right) to output paths r.q (left, bottom):
//   W[(r.q), (p.s)] = weight(r, p, q, s).
// A vertex model is the one-vertex case, where the operator is an ordinary
// R-matrix on the square of the edge space.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ribbonlab/block_operator.hpp"
#include "ribbonlab/graph.hpp"
#include "ribbonlab/group_like.hpp"

namespace ribbonlab {

// Face key by canonical edge indices, in (r, p, q, s) order.
struct FaceKey {
  int r, p, q, s;
  bool operator<(const FaceKey& o) const {
    return std::array<int, 4>{r, p, q, s} <
           std::array<int, 4>{o.r, o.p, o.q, o.s};
  }
  bool operator==(const FaceKey& o) const {
    return r == o.r && p == o.p && q == o.q && s == o.s;
  }
};

class FaceModel {
 public:
  FaceModel() = default;

  // Validates that every weighted quadruple satisfies the face condition and
  // that no face is listed twice.
  static FaceModel create(GraphPtr graph,
                          std::vector<std::pair<FaceKey, Complex>> faces);

  const OrientedGraph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }

  // 0 for absent faces.
  Complex weight(int r, int p, int q, int s) const;
  const std::map<FaceKey, Complex>& faces() const { return faces_; }

  // Dense operator form on the supplied degree-2 path space.
  BlockOperator as_operator(SpacePtr deg2_space) const;

  // True when (r,p,q,s) is a geometric face of the graph.
  bool is_face(int r, int p, int q, int s) const;

 private:
  GraphPtr graph_;
  std::map<FaceKey, Complex> faces_;
};

// ---------------------------------------------------------------------------
// JSON model files.
//
// Schema:
//   {
//     "vertices": ["v1", ...],
//     "edges":    [{"id":"e1","src":"v1","dst":"v2"}, ...],
//     "faces":    [{"r":"e3","p":"e1","q":"e4","s":"e2",
//                   "w":{"re":0.5,"im":0.0}}, ...],
//     "metadata": { ... }            // optional, written by the catalog
//   }
// Unknown keys anywhere in the schema are rejected.

// Optional catalog-provided companions of a model: the distinguished diagonal
// edge operators, spectral data of the antipode square, ideal generators, and
// the defining parameters.
struct ModelMetadata {
  std::string family;                     // "jimbo" or "sos"
  std::map<std::string, Complex> params;  // named scalar parameters
  std::map<std::string, double> ints;     // named integer-valued parameters

  // Diagonals indexed by canonical edge order.
  std::optional<std::vector<Complex>> m_plus;
  std::optional<std::vector<Complex>> m_minus;
  std::optional<std::vector<Complex>> s2;  // conjugation scale factors

  std::optional<Complex> lambda;           // BMW eigenvalue parameter
  std::optional<Complex> hecke_a, hecke_b; // quadratic eigenvalues

  std::optional<GroupLikeVector> det;   // top exterior generator
  std::optional<GroupLikeVector> quad;  // quadratic form generator (B/C/D)

  std::optional<bool> det_compatible;  // sos braiding-descent flag
};

struct ModelFile {
  FaceModel model;
  std::optional<ModelMetadata> metadata;
};

ModelFile load_model_json(const std::string& text);
ModelFile load_model_file(const std::string& path);
std::string save_model_json(const ModelFile& mf);
void save_model_file(const ModelFile& mf, const std::string& path);

// Multiplies every face weight by `a`.
FaceModel scale_model(const FaceModel& m, Complex a);

}  // namespace ribbonlab
