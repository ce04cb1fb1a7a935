#include "ribbonlab/graph.hpp"

#include <algorithm>
#include <set>

namespace ribbonlab {

GraphPtr OrientedGraph::create(std::vector<std::string> vertices,
                               std::vector<EdgeSpec> edges) {
  auto g = std::shared_ptr<OrientedGraph>(new OrientedGraph());

  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].empty())
      throw Error(ErrorKind::Parse, "empty vertex id");
    if (i > 0 && vertices[i] == vertices[i - 1])
      throw Error(ErrorKind::Parse, "duplicate vertex id '" + vertices[i] + "'");
  }
  g->vertices_ = std::move(vertices);
  for (int i = 0; i < static_cast<int>(g->vertices_.size()); ++i)
    g->vertex_lookup_[g->vertices_[i]] = i;

  std::sort(edges.begin(), edges.end(),
            [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
  g->out_.resize(g->vertices_.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const EdgeSpec& e = edges[i];
    if (e.id.empty()) throw Error(ErrorKind::Parse, "empty edge id");
    if (i > 0 && e.id == edges[i - 1].id)
      throw Error(ErrorKind::Parse, "duplicate edge id '" + e.id + "'");
    auto s = g->vertex_lookup_.find(e.src);
    auto d = g->vertex_lookup_.find(e.dst);
    if (s == g->vertex_lookup_.end() || d == g->vertex_lookup_.end())
      throw Error(ErrorKind::Parse,
                  "edge '" + e.id + "' references an unknown vertex");
    int idx = static_cast<int>(g->edge_ids_.size());
    g->edge_ids_.push_back(e.id);
    g->src_.push_back(s->second);
    g->dst_.push_back(d->second);
    g->edge_lookup_[e.id] = idx;
    g->out_[s->second].push_back(idx);
  }
  return g;
}

int OrientedGraph::vertex_index(const std::string& id) const {
  auto it = vertex_lookup_.find(id);
  return it == vertex_lookup_.end() ? -1 : it->second;
}

int OrientedGraph::edge_index(const std::string& id) const {
  auto it = edge_lookup_.find(id);
  return it == edge_lookup_.end() ? -1 : it->second;
}

int path_source(const OrientedGraph&, const Path& p) { return p.start; }

int path_range(const OrientedGraph& g, const Path& p) {
  return p.edges.empty() ? p.start : g.edge_dst(p.edges.back());
}

std::string path_to_string(const OrientedGraph& g, const Path& p) {
  if (p.edges.empty()) return g.vertex_id(p.start);
  std::string out;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (i) out += ".";
    out += g.edge_id(p.edges[i]);
  }
  return out;
}

SpacePtr PathSpace::enumerate(GraphPtr g, int degree) {
  if (degree < 0) throw Error(ErrorKind::BadParams, "negative path degree");
  auto sp = std::shared_ptr<PathSpace>(new PathSpace());
  sp->graph_ = g;
  sp->degree_ = degree;

  if (degree == 0) {
    for (int v = 0; v < g->vertex_count(); ++v)
      sp->paths_.push_back(Path{v, {}});
  } else {
    // Depth-first in canonical edge order; since out_edges lists are sorted
    // and the seed loop runs in edge order, the visit order is lexicographic
    // in the edge-index sequence, i.e. canonical.
    Path cur;
    auto extend = [&](auto&& self, int vertex) -> void {
      if (static_cast<int>(cur.edges.size()) == degree) {
        sp->paths_.push_back(cur);
        return;
      }
      for (int e : g->out_edges(vertex)) {
        cur.edges.push_back(e);
        self(self, g->edge_dst(e));
        cur.edges.pop_back();
      }
    };
    for (int e = 0; e < g->edge_count(); ++e) {
      cur.start = g->edge_src(e);
      cur.edges.assign(1, e);
      extend(extend, g->edge_dst(e));
      cur.edges.clear();
    }
  }
  for (int i = 0; i < sp->dim(); ++i) {
    sp->src_.push_back(path_source(*g, sp->paths_[i]));
    sp->rng_.push_back(path_range(*g, sp->paths_[i]));
    sp->index_[sp->paths_[i]] = i;
    sp->blocks_[{sp->src_[i], sp->rng_[i]}].push_back(i);
  }
  return sp;
}

int PathSpace::index_of(const Path& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

}  // namespace ribbonlab
