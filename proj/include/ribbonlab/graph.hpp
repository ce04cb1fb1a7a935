#pragma once

// Finite oriented graphs and their path spaces.  A path of degree m is a
// composable sequence of m edges; degree-0 paths are bare vertices.  Path
// spaces carry a canonical basis order fixed at construction (vertices sorted
// by id, edges sorted by id, paths lexicographic in edge position), so that
// every operator in the library has a reproducible matrix representation.
//
// Graphs and path spaces are immutable after construction and shared via
// shared_ptr, so operators can carry their basis without lifetime puzzles.

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "ribbonlab/common.hpp"

namespace ribbonlab {

struct EdgeSpec {
  std::string id;
  std::string src;
  std::string dst;
};

class OrientedGraph;
using GraphPtr = std::shared_ptr<const OrientedGraph>;

class OrientedGraph {
 public:
  // Validates ids (nonempty, unique, endpoints present) and sorts vertices
  // and edges by id to fix the canonical order.
  static GraphPtr create(std::vector<std::string> vertices,
                         std::vector<EdgeSpec> edges);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edge_ids_.size()); }

  const std::string& vertex_id(int v) const { return vertices_[v]; }
  const std::string& edge_id(int e) const { return edge_ids_[e]; }
  int edge_src(int e) const { return src_[e]; }
  int edge_dst(int e) const { return dst_[e]; }

  // -1 when absent.
  int vertex_index(const std::string& id) const;
  int edge_index(const std::string& id) const;

  // Edges leaving `v`, in canonical edge order.
  const std::vector<int>& out_edges(int v) const { return out_[v]; }

  bool same_shape(const OrientedGraph& o) const {
    return vertices_ == o.vertices_ && edge_ids_ == o.edge_ids_ &&
           src_ == o.src_ && dst_ == o.dst_;
  }

 private:
  OrientedGraph() = default;
  std::vector<std::string> vertices_;
  std::vector<std::string> edge_ids_;
  std::vector<int> src_, dst_;
  std::vector<std::vector<int>> out_;
  std::unordered_map<std::string, int> vertex_lookup_;
  std::unordered_map<std::string, int> edge_lookup_;
};

// A composable edge sequence.  `start` is the source vertex index; `edges`
// holds edge indices.  For degree 0 the path is the bare vertex `start`.
struct Path {
  int start = -1;
  std::vector<int> edges;

  int degree() const { return static_cast<int>(edges.size()); }
  bool operator==(const Path& o) const {
    return start == o.start && edges == o.edges;
  }
  bool operator<(const Path& o) const {
    if (start != o.start) return start < o.start;
    return edges < o.edges;
  }
};

int path_source(const OrientedGraph& g, const Path& p);
int path_range(const OrientedGraph& g, const Path& p);
std::string path_to_string(const OrientedGraph& g, const Path& p);

class PathSpace;
using SpacePtr = std::shared_ptr<const PathSpace>;

// The canonical ordered basis of the degree-m path space of a graph.
class PathSpace {
 public:
  // Enumerates all degree-m paths in canonical order: degree 0 yields the
  // vertices in id order; otherwise paths sorted lexicographically by the
  // canonical indices of their edges.
  static SpacePtr enumerate(GraphPtr g, int degree);

  const OrientedGraph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  int degree() const { return degree_; }
  int dim() const { return static_cast<int>(paths_.size()); }
  const Path& path(int i) const { return paths_[i]; }
  const std::vector<Path>& paths() const { return paths_; }

  int source(int i) const { return src_[i]; }
  int range(int i) const { return rng_[i]; }

  // Index of a path in this basis, -1 when absent.
  int index_of(const Path& p) const;

  // Basis indices grouped by (source, range); deterministic order.
  const std::map<std::pair<int, int>, std::vector<int>>& blocks() const {
    return blocks_;
  }

 private:
  PathSpace() = default;
  GraphPtr graph_;
  int degree_ = 0;
  std::vector<Path> paths_;
  std::vector<int> src_, rng_;
  std::map<Path, int> index_;
  std::map<std::pair<int, int>, std::vector<int>> blocks_;
};

}  // namespace ribbonlab
